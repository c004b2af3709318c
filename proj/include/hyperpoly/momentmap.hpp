#ifndef HYPERPOLY_MOMENTMAP_HPP
#define HYPERPOLY_MOMENTMAP_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpoly/combinat.hpp"
#include "hyperpoly/error.hpp"

namespace hyperpoly {

using Complex = std::complex<double>;
using Spinor = std::array<Complex, 2>;  // q_i is a column, p_i a row

inline constexpr double kDefaultTolerance = 1e-9;

struct Mat2 {
  Complex m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  static Mat2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
  static Mat2 diag(Complex a, Complex b) { return {{{a, 0.0}, {0.0, b}}}; }
  static Mat2 outer(const Spinor& col, const Spinor& row) {
    return {{{col[0] * row[0], col[0] * row[1]}, {col[1] * row[0], col[1] * row[1]}}};
  }

  Complex& operator()(int i, int j) { return m[i][j]; }
  const Complex& operator()(int i, int j) const { return m[i][j]; }

  Complex trace() const { return m[0][0] + m[1][1]; }
  Complex det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  Mat2 adjoint() const {
    return {{{std::conj(m[0][0]), std::conj(m[1][0])}, {std::conj(m[0][1]), std::conj(m[1][1])}}};
  }
  Mat2 traceless() const {
    Mat2 r = *this;
    const Complex h = trace() / 2.0;
    r.m[0][0] -= h;
    r.m[1][1] -= h;
    return r;
  }
  Mat2 inverse() const {
    const Complex d = det();
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
  }
  double norm() const {  // Frobenius
    double s = 0;
    for (const auto& row : m)
      for (const auto& z : row) s += std::norm(z);
    return std::sqrt(s);
  }

  friend Mat2 operator+(Mat2 a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a.m[i][j] += b.m[i][j];
    return a;
  }
  friend Mat2 operator-(Mat2 a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a.m[i][j] -= b.m[i][j];
    return a;
  }
  friend Mat2 operator*(Complex s, Mat2 a) {
    for (auto& row : a.m)
      for (auto& z : row) z *= s;
    return a;
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
};

inline Spinor operator*(const Mat2& a, const Spinor& col) {
  return {a(0, 0) * col[0] + a(0, 1) * col[1], a(1, 0) * col[0] + a(1, 1) * col[1]};
}
inline Spinor operator*(const Spinor& row, const Mat2& a) {
  return {row[0] * a(0, 0) + row[1] * a(1, 0), row[0] * a(0, 1) + row[1] * a(1, 1)};
}
inline Spinor operator*(Complex s, Spinor v) { return {s * v[0], s * v[1]}; }
inline double norm2(const Spinor& v) { return std::norm(v[0]) + std::norm(v[1]); }
inline Spinor conj_transpose(const Spinor& v) { return {std::conj(v[0]), std::conj(v[1])}; }

// Traceless Hermitian matrix [[z, x - iy], [x + iy, -z]]; dot(A, B) = tr(AB) / 2.
struct Su2Vector {
  double x = 0, y = 0, z = 0;

  static Su2Vector from_matrix(const Mat2& h) {
    return {0.5 * (h(0, 1).real() + h(1, 0).real()), 0.5 * (h(1, 0).imag() - h(0, 1).imag()),
            0.5 * (h(0, 0).real() - h(1, 1).real())};
  }
  // Distance from h to the traceless Hermitian matrices (Frobenius).
  static double hermitian_residual(const Mat2& h) {
    return (h - from_matrix(h).matrix()).norm();
  }

  Mat2 matrix() const { return {{{z, Complex(x, -y)}, {Complex(x, y), -z}}}; }
  double dot(const Su2Vector& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  std::array<double, 3> components() const { return {x, y, z}; }

  friend Su2Vector operator+(Su2Vector a, const Su2Vector& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Su2Vector operator-(Su2Vector a, const Su2Vector& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Su2Vector operator*(double s, Su2Vector a) { return {s * a.x, s * a.y, s * a.z}; }
};

// Coadjoint action v -> U^{-1} v U.
inline Su2Vector conjugate(const Su2Vector& v, const Mat2& u) {
  return Su2Vector::from_matrix(u.inverse() * v.matrix() * u);
}

struct PointPQ {
  std::vector<Spinor> p;  // rows
  std::vector<Spinor> q;  // columns

  static PointPQ zero(int n) { return {std::vector<Spinor>(n), std::vector<Spinor>(n)}; }
  int n() const { return static_cast<int>(q.size()); }

  void check() const {
    if (p.size() != q.size())
      throw Error(ErrorCode::DimensionMismatch, "p and q have different lengths");
    for (const auto* side : {&p, &q})
      for (const auto& v : *side)
        for (const auto& z : v)
          if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::ParseError, "non-finite entry in point");
  }
};

inline double distance(const PointPQ& a, const PointPQ& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "points of different size");
  double s = 0;
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < 2; ++k) s += std::norm(a.p[i][k] - b.p[i][k]) + std::norm(a.q[i][k] - b.q[i][k]);
  return std::sqrt(s);
}

struct GroupElement {
  Mat2 a = Mat2::identity();
  std::vector<Complex> e;

  static GroupElement identity(int n) { return {Mat2::identity(), std::vector<Complex>(n, 1.0)}; }

  bool is_special(double tol = kDefaultTolerance) const { return std::abs(a.det() - 1.0) <= tol; }
  bool is_compact(double tol = kDefaultTolerance) const {
    if (!is_special(tol) || (a.adjoint() * a - Mat2::identity()).norm() > tol) return false;
    return std::all_of(e.begin(), e.end(), [&](Complex z) { return std::abs(std::abs(z) - 1.0) <= tol; });
  }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.e.size() != h.e.size()) throw Error(ErrorCode::DimensionMismatch, "group elements of different size");
    GroupElement r{g.a * h.a, g.e};
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] *= h.e[i];
    return r;
  }
};

// (p, q)[A; e] = (e^{-1} p A, A^{-1} q e), a right action.
inline PointPQ group_act(const PointPQ& x, const GroupElement& g, double tol = 1e-12) {
  if (static_cast<int>(g.e.size()) != x.n())
    throw Error(ErrorCode::DimensionMismatch, "group element has " + std::to_string(g.e.size()) +
                                                  " scalars for " + std::to_string(x.n()) + " edges");
  if (std::abs(g.a.det()) <= tol) throw Error(ErrorCode::SingularGroupElement, "det A is zero");
  for (const auto& z : g.e)
    if (std::abs(z) <= tol) throw Error(ErrorCode::SingularGroupElement, "zero scalar factor");
  const Mat2 inv = g.a.inverse();
  PointPQ out = x;
  for (int i = 0; i < x.n(); ++i) {
    out.p[i] = (1.0 / g.e[i]) * (x.p[i] * g.a);
    out.q[i] = g.e[i] * (inv * x.q[i]);
  }
  return out;
}

struct MuReal {
  Su2Vector su2;  // (1/2) sum (q q* - p* p)_0; the su(2) matrix is sqrt(-1) times this
  std::vector<double> u1;

  Mat2 su2_matrix() const { return Complex(0, 1) * su2.matrix(); }
};

inline MuReal mu_real(const PointPQ& x) {
  Mat2 acc;
  MuReal out;
  for (int i = 0; i < x.n(); ++i) {
    acc = acc + Mat2::outer(x.q[i], conj_transpose(x.q[i])) - Mat2::outer(conj_transpose(x.p[i]), x.p[i]);
    out.u1.push_back(0.5 * (norm2(x.q[i]) - norm2(x.p[i])));
  }
  out.su2 = 0.5 * Su2Vector::from_matrix(acc.traceless());
  return out;
}

struct MuComplex {
  Mat2 sl2;  // -sum (q p)_0
  std::vector<Complex> u1;
};

inline MuComplex mu_complex(const PointPQ& x) {
  Mat2 acc;
  MuComplex out;
  for (int i = 0; i < x.n(); ++i) {
    acc = acc + Mat2::outer(x.q[i], x.p[i]);
    out.u1.push_back(Complex(0, 1) * (x.p[i][0] * x.q[i][0] + x.p[i][1] * x.q[i][1]));
  }
  out.sl2 = Complex(-1.0) * acc.traceless();
  return out;
}

inline double phi_moment(const PointPQ& x) {
  double s = 0;
  for (const auto& p : x.p) s += norm2(p);
  return 0.5 * s;
}

struct MomentResidual {
  double real = 0;     // |mu_R - (0 + alpha)|
  double complex = 0;  // |mu_C|
  double max() const { return std::max(real, complex); }
};

inline MomentResidual moment_residual(const Alpha& a, const PointPQ& x) {
  if (a.n() != x.n()) throw Error(ErrorCode::DimensionMismatch, "alpha and point have different n");
  const auto r = mu_real(x);
  const auto c = mu_complex(x);
  double sr = r.su2.dot(r.su2), sc = std::pow(c.sl2.norm(), 2);
  for (int i = 0; i < a.n(); ++i) {
    sr += std::pow(r.u1[i] - a.length(i + 1).get_d(), 2);
    sc += std::norm(c.u1[i]);
  }
  return {std::sqrt(sr), std::sqrt(sc)};
}

// Proportionality classes of the q_i, by union-find on |det(q_i q_j)| <= tol |q_i||q_j|.
inline std::vector<Subset> straight_classes(const PointPQ& x, double tol = kDefaultTolerance) {
  const int n = x.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(x.q[i][0] * x.q[j][1] - x.q[i][1] * x.q[j][0]);
      if (d <= tol * std::sqrt(norm2(x.q[i]) * norm2(x.q[j]))) parent[find(j)] = find(i);
    }
  std::vector<Subset> out;
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    Subset c = Subset::empty(n);
    for (int j = 0; j < n; ++j)
      if (find(j) == i) c = c.with(j + 1);
    out.push_back(c);
  }
  return out;
}

inline bool is_straight(const PointPQ& x, const Subset& s, double tol = kDefaultTolerance) {
  for (const auto& c : straight_classes(x, tol))
    if (s.is_subset_of(c)) return true;
  return s.is_empty();
}

struct StabilityVerdict {
  bool stable = true;
  std::optional<int> zero_q;       // condition (1) witness
  std::optional<Subset> witness;   // long straight subset with p vanishing off it

  std::string describe() const {
    if (stable) return "stable";
    if (zero_q) return "unstable: q_" + std::to_string(*zero_q) + " = 0";
    return "unstable: " + witness->to_string() + " is long, straight, and p vanishes off it";
  }
};

inline StabilityVerdict is_stable(const Alpha& a, const PointPQ& x, double tol = kDefaultTolerance) {
  if (a.n() != x.n()) throw Error(ErrorCode::DimensionMismatch, "alpha and point have different n");
  StabilityVerdict v;
  for (int i = 0; i < x.n(); ++i)
    if (std::sqrt(norm2(x.q[i])) <= tol) {
      v.stable = false;
      v.zero_q = i + 1;
      return v;
    }
  // Long is upward closed, so only the maximal straight sets matter.
  for (const auto& c : straight_classes(x, tol)) {
    bool p_vanishes = true;
    for (int j : c.complement().elements())
      if (std::sqrt(norm2(x.p[j - 1])) > tol) p_vanishes = false;
    if (p_vanishes && is_long(a, c)) {
      v.stable = false;
      v.witness = c;
      return v;
    }
  }
  return v;
}

struct PolygonPairData {
  Subset s;
  std::vector<Su2Vector> u;  // one per element of S, ascending
  std::vector<Su2Vector> v;  // one per element of S^c, ascending
  Su2Vector w;

  PolygonPairData conjugated(const Mat2& g) const {
    PolygonPairData out{s, {}, {}, conjugate(w, g)};
    for (const auto& x : u) out.u.push_back(conjugate(x, g));
    for (const auto& x : v) out.v.push_back(conjugate(x, g));
    return out;
  }
};

inline double distance(const PolygonPairData& a, const PolygonPairData& b) {
  if (a.s != b.s || a.u.size() != b.u.size() || a.v.size() != b.v.size())
    throw Error(ErrorCode::DimensionMismatch, "polygon pairs over different subsets");
  double d = (a.w - b.w).norm();
  for (std::size_t i = 0; i < a.u.size(); ++i) d = std::max(d, (a.u[i] - b.u[i]).norm());
  for (std::size_t i = 0; i < a.v.size(); ++i) d = std::max(d, (a.v[i] - b.v[i]).norm());
  return d;
}

// Residuals of the five polygon-pair conditions, 1-based.
struct PairConditions {
  std::array<double, 5> residual{};

  std::optional<int> first_violated(double tol) const {
    for (int k = 0; k < 5; ++k)
      if (!(residual[k] <= tol)) return k + 1;
    return std::nullopt;
  }
};

inline PairConditions check_pair_conditions(const Alpha& a, const PolygonPairData& d) {
  const auto sel = d.s.elements(), rest = d.s.complement().elements();
  if (d.s.n() != a.n() || d.u.size() != sel.size() || d.v.size() != rest.size())
    throw Error(ErrorCode::DimensionMismatch, "polygon pair does not match alpha and S");
  PairConditions c;
  Su2Vector closure = d.w, usum;
  double wlen = 0;
  for (std::size_t k = 0; k < sel.size(); ++k) {
    usum = usum + d.u[k];
    c.residual[2] = std::max(c.residual[2], std::abs(d.u[k].dot(d.w)));
    const double al = a.length(sel[k]).get_d();
    wlen += std::sqrt(al * al + d.u[k].dot(d.u[k]));
  }
  for (std::size_t k = 0; k < rest.size(); ++k) {
    closure = closure + d.v[k];
    c.residual[3] = std::max(c.residual[3], std::abs(d.v[k].norm() - a.length(rest[k]).get_d()));
  }
  c.residual[0] = closure.norm();
  c.residual[1] = usum.norm();
  c.residual[4] = std::abs(d.w.norm() - wlen);
  return c;
}

struct PairFromPoint {
  PolygonPairData data;
  MomentResidual moment;
  double straightness = 0;     // max relative |det(q_i q_j)| over S
  double p_off_s = 0;          // max |p_j| over S^c
  double norm_identity = 0;    // max | |u_i|^2 - |q_i|^2 (|q_i|^2 - 2 alpha_i) |
  PairConditions conditions;

  std::string report() const {
    std::ostringstream os;
    os << "mu_R " << moment.real << ", mu_C " << moment.complex << ", straightness " << straightness
       << ", p off S " << p_off_s << ", norm identity " << norm_identity;
    for (int k = 0; k < 5; ++k) os << ", (" << k + 1 << ") " << conditions.residual[k];
    return os.str();
  }
};

inline PairFromPoint polygon_pair_from_point(const Alpha& a, const Subset& s, const PointPQ& x,
                                             double tol = kDefaultTolerance) {
  x.check();
  if (a.n() != x.n() || s.n() != a.n()) throw Error(ErrorCode::DimensionMismatch, "alpha, S and point disagree on n");
  PairFromPoint out;
  out.data.s = s;
  out.moment = moment_residual(a, x);
  const auto sel = s.elements(), rest = s.complement().elements();
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = i + 1; j < sel.size(); ++j) {
      const auto& qi = x.q[sel[i] - 1];
      const auto& qj = x.q[sel[j] - 1];
      const double scale = std::sqrt(norm2(qi) * norm2(qj));
      const double d = std::abs(qi[0] * qj[1] - qi[1] * qj[0]);
      out.straightness = std::max(out.straightness, scale > 0 ? d / scale : 0.0);
    }
  for (int j : rest) out.p_off_s = std::max(out.p_off_s, std::sqrt(norm2(x.p[j - 1])));

  Mat2 w;
  for (int i : sel) {
    const auto& q = x.q[i - 1];
    const auto& p = x.p[i - 1];
    const Mat2 u = Mat2::outer(q, p) + Mat2::outer(conj_transpose(p), conj_transpose(q));
    out.data.u.push_back(Su2Vector::from_matrix(u));
    w = w + Mat2::outer(q, conj_transpose(q)).traceless() - Mat2::outer(conj_transpose(p), p).traceless();
    const double q2 = norm2(q);
    out.norm_identity = std::max(
        out.norm_identity,
        std::abs(out.data.u.back().dot(out.data.u.back()) - q2 * (q2 - 2 * a.length(i).get_d())));
  }
  for (int j : rest) {
    const auto& q = x.q[j - 1];
    out.data.v.push_back(Su2Vector::from_matrix(Mat2::outer(q, conj_transpose(q)).traceless()));
  }
  out.data.w = Su2Vector::from_matrix(w);
  out.conditions = check_pair_conditions(a, out.data);

  const double worst = std::max({out.moment.max(), out.straightness, out.p_off_s, out.norm_identity});
  if (!(worst <= tol) || out.conditions.first_violated(tol))
    throw Error(ErrorCode::PreconditionViolated, out.report());
  return out;
}

// Unitary U with det 1 and U^{-1} W U = |w| diag(1, -1).
inline Mat2 align_to_diagonal(const Su2Vector& w) {
  const double r = w.norm();
  Spinor e;
  if (w.z >= 0)
    e = {r + w.z, Complex(w.x, w.y)};
  else
    e = {Complex(w.x, -w.y), r - w.z};
  const double len = std::sqrt(norm2(e));
  e = {e[0] / len, e[1] / len};
  return {{{e[0], -std::conj(e[1])}, {e[1], std::conj(e[0])}}};
}

// q with (q q*)_0 = v, |q|^2 = 2|v|, first nonvanishing entry real positive.
inline Spinor spinor_root(const Su2Vector& v) {
  const double r = v.norm();
  Spinor q;
  if (v.z >= 0) {
    const double top = std::sqrt(r + v.z);
    q = {top, top > 0 ? Complex(v.x, v.y) / top : Complex(0)};
  } else {
    const double bottom = std::sqrt(r - v.z);
    q = {Complex(v.x, -v.y) / bottom, bottom};
  }
  if (std::abs(q[0]) > 0) {
    const Complex phase = std::conj(q[0]) / std::abs(q[0]);
    q = {std::abs(q[0]), phase * q[1]};
  }
  return q;
}

struct PointFromPair {
  PointPQ point;
  Mat2 rotation;  // the point represents data.conjugated(rotation)
  MomentResidual moment;
};

inline PointFromPair point_from_polygon_pair(const Alpha& a, const PolygonPairData& data,
                                             double tol = kDefaultTolerance) {
  const Subset& s = data.s;
  const auto cond = check_pair_conditions(a, data);
  if (!s.is_empty() && !(data.w.norm() > tol)) throw Error(ErrorCode::ZeroW, "w vanishes");
  if (auto k = cond.first_violated(tol))
    throw Error(ErrorCode::ConditionViolated,
                "condition (" + std::to_string(*k) + ") residual " + std::to_string(cond.residual[*k - 1]));

  PointFromPair out;
  out.rotation = s.is_empty() ? Mat2::identity() : align_to_diagonal(data.w);
  const PolygonPairData g = data.conjugated(out.rotation);
  out.point = PointPQ::zero(a.n());
  const auto sel = s.elements(), rest = s.complement().elements();
  for (std::size_t k = 0; k < sel.size(); ++k) {
    const Complex lambda(g.u[k].x, -g.u[k].y);
    const double al = a.length(sel[k]).get_d();
    const double ai = std::sqrt(al + std::sqrt(al * al + std::norm(lambda)));
    out.point.q[sel[k] - 1] = {ai, 0.0};
    out.point.p[sel[k] - 1] = {0.0, lambda / ai};
  }
  for (std::size_t k = 0; k < rest.size(); ++k) out.point.q[rest[k] - 1] = spinor_root(g.v[k]);
  out.moment = moment_residual(a, out.point);
  return out;
}

// Random generation, for tests and the CLI sampler.

inline Su2Vector random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Su2Vector v{gauss(rng), gauss(rng), gauss(rng)};
    if (const double r = v.norm(); r > 1e-6) return (1.0 / r) * v;
  }
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  return {gauss(rng), gauss(rng)};
}

inline GroupElement random_compact_element(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  double h[4];
  double len = 0;
  do {
    len = 0;
    for (double& c : h) {
      c = gauss(rng);
      len += c * c;
    }
  } while (len < 1e-6);
  len = std::sqrt(len);
  const Complex al(h[0] / len, h[1] / len), be(h[2] / len, h[3] / len);
  GroupElement g{{{{al, -std::conj(be)}, {be, std::conj(al)}}}, {}};
  for (int i = 0; i < n; ++i) g.e.push_back(std::polar(1.0, angle(rng)));
  return g;
}

inline GroupElement random_complex_element(int n, std::mt19937_64& rng) {
  Mat2 m;
  do {
    for (auto& row : m.m)
      for (auto& z : row) z = random_complex(rng);
  } while (std::abs(m.det()) < 0.1);
  GroupElement g{(1.0 / std::sqrt(m.det())) * m, {}};
  std::uniform_real_distribution<double> modulus(0.5, 2.0), angle(0, 2 * M_PI);
  for (int i = 0; i < n; ++i) g.e.push_back(std::polar(modulus(rng), angle(rng)));
  return g;
}

// Closed polygon in R^3 with the given edge lengths ending at `target`, built edge by edge so
// that the remaining distance stays within the reachable interval.
inline std::vector<Su2Vector> random_polygon_to(const Su2Vector& target, const std::vector<double>& lengths,
                                                std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<Su2Vector> out;
  Su2Vector pos;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    const double l = lengths[k];
    const Su2Vector gap = target - pos;
    const double d = gap.norm();
    if (k + 1 == lengths.size()) {
      out.push_back(gap);
      break;
    }
    double rest = 0, longest = 0;
    for (std::size_t r = k + 1; r < lengths.size(); ++r) {
      rest += lengths[r];
      longest = std::max(longest, lengths[r]);
    }
    const double lo = std::max(std::abs(d - l), std::max(0.0, 2 * longest - rest));
    const double hi = std::min(d + l, rest);
    if (lo > hi) throw Error(ErrorCode::PreconditionViolated, "polygon lengths cannot close");
    const double next = lo + (hi - lo) * unit(rng);
    // Edge e with |e| = l and |gap - e| = next.
    const Su2Vector axis = d > 0 ? (1.0 / d) * gap : random_unit_vector(rng);
    const double along = d > 0 ? (d * d + l * l - next * next) / (2 * d) : 0.0;
    const double across = std::sqrt(std::max(0.0, l * l - along * along));
    Su2Vector perp = random_unit_vector(rng);
    perp = perp - perp.dot(axis) * axis;
    if (perp.norm() < 1e-9) perp = Su2Vector{axis.y, -axis.x, 0} + Su2Vector{0, axis.z, -axis.y};
    perp = (1.0 / perp.norm()) * perp;
    const Su2Vector e = along * axis + across * perp;
    out.push_back(e);
    pos = pos + e;
  }
  return out;
}

// Random data satisfying conditions (1)-(5); `spread` scales the u_i. Requires S short.
inline PolygonPairData random_polygon_pair(const Alpha& a, const Subset& s, std::mt19937_64& rng,
                                           double spread = 1.0) {
  if (!s.is_empty() && !is_short(a, s)) throw Error(ErrorCode::NotShort, s.to_string() + " is not short");
  const auto sel = s.elements(), rest = s.complement().elements();
  double long_side = 0;
  for (int j : rest) long_side += a.length(j).get_d();
  std::uniform_real_distribution<double> unit(0, 1);
  for (double scale = spread;; scale *= 0.5) {
    PolygonPairData d{s, {}, {}, {}};
    const Su2Vector axis = random_unit_vector(rng);
    double wlen = 0;
    Su2Vector usum;
    for (std::size_t k = 0; k < sel.size(); ++k) {
      Su2Vector u;
      if (k + 1 < sel.size()) {
        u = random_unit_vector(rng);
        u = (scale * unit(rng)) * (u - u.dot(axis) * axis);
        usum = usum + u;
      } else {
        u = -1.0 * usum;
      }
      d.u.push_back(u);
      const double al = a.length(sel[k]).get_d();
      wlen += std::sqrt(al * al + u.dot(u));
    }
    if (!s.is_empty() && wlen >= long_side) continue;
    d.w = wlen * axis;
    std::vector<double> lengths;
    for (int j : rest) lengths.push_back(a.length(j).get_d());
    d.v = random_polygon_to(-1.0 * d.w, lengths, rng);
    return d;
  }
}

// Point whose q_i (i in straight) share one direction and are otherwise generic; p_j is zeroed
// for j outside `straight` when p_zero_off is set, and is generic elsewhere.
inline PointPQ random_straightness_point(int n, const Subset& straight, bool p_zero_off, std::mt19937_64& rng) {
  PointPQ x = PointPQ::zero(n);
  const Spinor base{random_complex(rng), random_complex(rng)};
  for (int i = 1; i <= n; ++i) {
    x.q[i - 1] = straight.contains(i) ? random_complex(rng) * base : Spinor{random_complex(rng), random_complex(rng)};
    if (!(p_zero_off && !straight.contains(i))) x.p[i - 1] = {random_complex(rng), random_complex(rng)};
  }
  return x;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_MOMENTMAP_HPP
