#ifndef HYPERPOLY_PRESENTATIONS_HPP
#define HYPERPOLY_PRESENTATIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperpoly/combinat.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/graded.hpp"
#include "hyperpoly/linalg.hpp"
#include "hyperpoly/poly.hpp"

namespace hyperpoly {

enum class Provenance { KonnoI, MainJ, EqcoreJS, OrdcoreIS, PolsKer, Derived };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::KonnoI: return "KONNO_I";
    case Provenance::MainJ: return "MAIN_J";
    case Provenance::EqcoreJS: return "EQCORE_J_S";
    case Provenance::OrdcoreIS: return "ORDCORE_I_S";
    case Provenance::PolsKer: return "POLS_KER";
    case Provenance::Derived: return "DERIVED";
  }
  return "UNKNOWN";
}

struct Presentation {
  Provenance provenance;
  Alpha alpha;
  std::optional<Subset> s;
  GradedIdeal ideal;

  const RingPtr& ring() const { return ideal.ring(); }
};

// Q[c_1..c_n, p] or Q[c_1..c_n, p, x].
inline RingPtr c_ring(int n, bool with_x) {
  std::vector<Variable> extra{{"p", 2}};
  if (with_x) extra.push_back({"x", 1});
  return indexed_ring("c", n, std::move(extra));
}

// Q[b_1..b_n] or Q[b_1..b_n, x].
inline RingPtr b_ring(int n, bool with_x) {
  return with_x ? indexed_ring("b", n, {{"x", 1}}) : indexed_ring("b", n);
}

namespace detail {

inline std::string idx(const std::string& prefix, int i) { return prefix + "_" + std::to_string(i); }

inline Polynomial v(const RingPtr& r, const std::string& prefix, int i) {
  return Polynomial::variable(r, idx(prefix, i));
}

enum class CoreKind { Equivariant, Ordinary, Kernel };

inline void check_core_subset(const Alpha& a, const Subset& s, int min_size) {
  a.check(s);
  if (!is_short(a, s)) throw Error(ErrorCode::NotShort, s.to_string() + " is long");
  if (s.size() < min_size)
    throw Error(ErrorCode::SubsetTooSmall,
                s.to_string() + " has fewer than " + std::to_string(min_size) + " elements");
  if (!s.contains(1))
    throw Error(ErrorCode::RequiresOneInS,
                s.to_string() + " does not contain 1; relabel with relabel_to_contain_one");
}

// R subset of S^c with R u S long; minimal ones only unless `all`.
inline std::vector<Subset> completing_sets(const Alpha& a, const Subset& s, bool all) {
  const Subset sc = s.complement();
  std::vector<Subset> out;
  for (std::uint32_t m = 1; m < (1u << a.n()); ++m) {
    Subset r(a.n(), m);
    if (!r.is_subset_of(sc) || is_short(a, r | s)) continue;
    bool minimal = true;
    for (int e : r.elements())
      if (is_long(a, r.without(e) | s)) {
        minimal = false;
        break;
      }
    if (all || minimal) out.push_back(r);
  }
  sort_subsets(out);
  return out;
}

inline std::vector<Subset> long_subsets_of(const Alpha& a, const Subset& ambient) {
  std::vector<Subset> out;
  for (std::uint32_t m = 1; m < (1u << a.n()); ++m) {
    Subset l(a.n(), m);
    if (l.is_subset_of(ambient) && is_long(a, l)) out.push_back(l);
  }
  sort_subsets(out);
  return out;
}

inline GradedIdeal core_ideal(const Alpha& a, const Subset& s, CoreKind kind, bool all_r,
                              bool verbatim) {
  const int n = a.n();
  const bool with_x = kind != CoreKind::Ordinary;
  const RingPtr r = b_ring(n, with_x);
  const Polynomial b1 = v(r, "b", 1);
  const Subset sc = s.complement();
  std::vector<Polynomial> gens;
  for (int i : s.elements())
    if (i != 1) gens.push_back(b1 - v(r, "b", i));
  for (int j : sc.elements()) gens.push_back(v(r, "b", j) * (b1 - v(r, "b", j)));
  for (const auto& rs : completing_sets(a, s, all_r)) {
    std::vector<Polynomial> f;
    for (int j : rs.elements()) f.push_back(v(r, "b", j));
    gens.push_back(product(r, f));
  }
  Polynomial prefactor = Polynomial::constant(r, 1);
  if (kind == CoreKind::Equivariant || (kind == CoreKind::Kernel && verbatim))
    prefactor = pow(b1 + Polynomial::variable(r, "x"), s.size() - 1);
  for (const auto& l : long_subsets_of(a, sc)) {
    std::vector<Polynomial> diff, plain;
    for (int j : l.elements()) {
      diff.push_back(v(r, "b", j) - b1);
      plain.push_back(v(r, "b", j));
    }
    if (kind == CoreKind::Ordinary) {
      gens.push_back(pow(b1, s.size() - 2) * product(r, diff));
    } else {
      gens.push_back(prefactor * divide_by_variable(product(r, diff) - product(r, plain), "b_1"));
    }
  }
  return GradedIdeal(r, std::move(gens));
}

}  // namespace detail

/// Q[c_1..c_n, p] / (p - c_i^2, everything of degree >= n-2).
inline Presentation konno_ideal(const Alpha& a) {
  const int n = a.n();
  const RingPtr r = c_ring(n, false);
  const Polynomial p = Polynomial::variable(r, "p");
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(p - pow(detail::v(r, "c", i), 2));
  return {Provenance::KonnoI, a, std::nullopt, GradedIdeal(r, std::move(gens), n - 2)};
}

/// The family-2 generator attached to a nonempty short subset.
inline Polynomial equivariant_generator(const RingPtr& r, const Subset& s) {
  const auto mk = subset_markers(s);
  const Polynomial cn = detail::v(r, "c", mk.n_s);
  const Polynomial x = Polynomial::variable(r, "x");
  std::vector<Polynomial> f;
  for (int j : mk.sc_bar.elements()) f.push_back(detail::v(r, "c", j) + cn);
  for (int i : mk.s_bar.elements()) f.push_back(detail::v(r, "c", i) + x);
  return product(r, f);
}

inline Presentation equivariant_ideal(const Alpha& a) {
  const int n = a.n();
  const RingPtr r = c_ring(n, true);
  const Polynomial p = Polynomial::variable(r, "p");
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(p - pow(detail::v(r, "c", i), 2));
  for (const auto& s : enumerate_shorts(a, 1)) gens.push_back(equivariant_generator(r, s));
  return {Provenance::MainJ, a, std::nullopt, GradedIdeal(r, std::move(gens))};
}

inline Presentation core_equivariant_ideal(const Alpha& a, const Subset& s, bool all_r = false) {
  detail::check_core_subset(a, s, 2);
  return {Provenance::EqcoreJS, a, s,
          detail::core_ideal(a, s, detail::CoreKind::Equivariant, all_r, false)};
}

inline Presentation core_ordinary_ideal(const Alpha& a, const Subset& s, bool all_r = false) {
  detail::check_core_subset(a, s, 2);
  return {Provenance::OrdcoreIS, a, s,
          detail::core_ideal(a, s, detail::CoreKind::Ordinary, all_r, false)};
}

/// Kernel presentation for the polygon subspace M_S. By default the family-4
/// generators carry no (b_1+x) prefactor; `verbatim` restores it.
inline Presentation polygon_subspace_kernel(const Alpha& a, const Subset& s, bool verbatim = false,
                                            bool all_r = false) {
  detail::check_core_subset(a, s, 1);
  return {Provenance::PolsKer, a, s,
          detail::core_ideal(a, s, detail::CoreKind::Kernel, all_r, verbatim)};
}

/// Image of the presentation under x -> 0, in the ring without x.
inline Presentation x_to_zero(const Presentation& pres) {
  const PolyRing& src = *pres.ring();
  if (!src.index_of("x")) throw Error(ErrorCode::RingMismatch, "presentation has no variable x");
  std::vector<Variable> vars;
  for (const auto& var : src.variables())
    if (var.name != "x") vars.push_back(var);
  const RingPtr target = make_ring(std::move(vars));
  std::vector<Polynomial> gens;
  for (const auto& g : pres.ideal.generators())
    gens.push_back(substitute_variable_to_zero(g, "x", target));
  return {Provenance::Derived, pres.alpha, pres.s,
          GradedIdeal(target, std::move(gens), pres.ideal.truncation_degree())};
}

inline int default_max_degree(const Alpha& a) { return a.n(); }

inline HilbertTable betti(const Presentation& pres, std::optional<int> max_degree = std::nullopt,
                          SliceOptions options = {}) {
  return hilbert_function(pres.ideal, max_degree.value_or(default_max_degree(pres.alpha)),
                          options);
}

struct FreenessReport {
  bool free = true;
  std::optional<int> first_divergence;
  HilbertTable equivariant;
  HilbertTable ordinary;
};

/// dims_d(equivariant) == sum_{k<=d} dims_k(ordinary) for d <= max_degree.
inline FreenessReport freeness_check(const Presentation& equivariant, const Presentation& ordinary,
                                     int max_degree, SliceOptions options = {}) {
  FreenessReport rep{true, std::nullopt, betti(equivariant, max_degree, options),
                     betti(ordinary, max_degree, options)};
  long long partial = 0;
  for (int d = 0; d <= max_degree; ++d) {
    partial += rep.ordinary.dims[d];
    if (rep.equivariant.dims[d] != partial) {
      rep.free = false;
      rep.first_divergence = d;
      break;
    }
  }
  return rep;
}

inline FreenessReport freeness_check(const Alpha& a, std::optional<Subset> s = std::nullopt,
                                     std::optional<int> max_degree = std::nullopt,
                                     SliceOptions options = {}) {
  const int d = max_degree.value_or(default_max_degree(a));
  if (s) return freeness_check(core_equivariant_ideal(a, *s), core_ordinary_ideal(a, *s), d, options);
  return freeness_check(equivariant_ideal(a), konno_ideal(a), d, options);
}

/// Degree-k dimensions of Q[b]/(families 1-3): #{R in S^c : S u R short, |R| <= k}.
inline HilbertTable families_one_to_three_closed_form(const Alpha& a, const Subset& s,
                                                      int max_degree) {
  HilbertTable t;
  t.dims.assign(max_degree + 1, 0);
  const Subset sc = s.complement();
  for (std::uint32_t m = 0; m < (1u << a.n()); ++m) {
    Subset r(a.n(), m);
    if (!r.is_subset_of(sc) || !is_short(a, r | s)) continue;
    for (int k = r.size(); k <= max_degree; ++k) t.dims[k]++;
  }
  return t;
}

enum class IntersectionMode { Auto, Normalized, Unnormalized };

struct IntersectionForm {
  Matrix gram;
  CongruenceDiagonalization diagonalization;
  Rational determinant;
  bool normalized = false;
  std::optional<int> normalizing_index;  // j with integral(-b_1 b_j) = 1
  std::optional<std::string> warning;
  std::optional<int> blowup_points;       // CP^2 blown up at k points
  std::string report;
};

/// Top-degree pairing on degree-1 classes of the ordinary core ring of a
/// surface component (n = 5).
inline IntersectionForm intersection_form(const Alpha& a, const Subset& s,
                                          const std::vector<Polynomial>& basis,
                                          IntersectionMode mode = IntersectionMode::Auto) {
  const int n = a.n();
  a.check(s);
  if (n != 5)
    throw Error(ErrorCode::NotASurface,
                "core components are surfaces only for n = 5 (n = " + std::to_string(n) + ")");
  const bool can_normalize = s.size() == 2;
  if (mode == IntersectionMode::Normalized && !can_normalize)
    throw Error(ErrorCode::NotASurface,
                "normalized pairing needs |S| = 2, got " + s.to_string());
  const Presentation pres = core_ordinary_ideal(a, s);
  GradedQuotient q(pres.ideal);
  const RingPtr& r = pres.ring();
  const long long top = static_cast<long long>(q.slice(2).monomial_count() - q.slice(2).rank());
  if (top != 1)
    throw Error(ErrorCode::DegenerateTopDegree,
                "top degree has dimension " + std::to_string(top) + ", expected 1");

  IntersectionForm out;
  Rational unit;  // normal-form coordinate of the class integrating to 1
  const Polynomial b1 = detail::v(r, "b", 1);
  if (can_normalize && mode != IntersectionMode::Unnormalized) {
    for (int j : s.complement().elements())
      if (is_short(a, s.with(j))) {
        out.normalizing_index = j;
        break;
      }
    if (!out.normalizing_index)
      throw Error(ErrorCode::DegenerateTopDegree, "no short S u {j} fixes the normalization");
    unit = q.normal_form(-(b1 * detail::v(r, "b", *out.normalizing_index))).coords.at(0);
    if (unit == 0)
      throw Error(ErrorCode::DegenerateTopDegree, "-b_1 b_j vanishes in the top degree");
    out.normalized = true;
  } else {
    unit = 1;
    out.warning = "pairing fixed only up to a nonzero scalar: the evaluation is the coordinate "
                  "on the surviving top monomial " +
                  Polynomial::from_monomial(r, q.normal_form(b1 * b1).basis.at(0)).to_string();
  }

  std::vector<Polynomial> bs;
  for (const auto& f : basis) {
    Polynomial g = map_to_ring(f, r);
    if (!g.is_homogeneous() || g.degree() != 1)
      throw Error(ErrorCode::NotHomogeneous, g.to_string() + " is not a degree-1 class");
    bs.push_back(std::move(g));
  }
  const std::size_t k = bs.size();
  {
    const auto free = q.slice(1).monomial_count() - q.slice(1).rank();
    Matrix coords(k, free);
    for (std::size_t i = 0; i < k; ++i) {
      auto nf = q.normal_form(bs[i]);
      for (std::size_t c = 0; c < nf.coords.size(); ++c) coords(i, c) = nf.coords[c];
    }
    if (rank(coords) != k)
      throw Error(ErrorCode::BasisNotIndependent, "basis classes are linearly dependent in H^2");
  }
  out.gram = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Rational val = q.normal_form(bs[i] * bs[j], 2).coords.at(0) / unit;
      out.gram(i, j) = val;
      out.gram(j, i) = val;
    }
  out.diagonalization = congruence_diagonalize(out.gram);
  out.determinant = determinant(out.gram);

  const auto& d = out.diagonalization;
  const long long h2 = static_cast<long long>(q.slice(1).monomial_count() - q.slice(1).rank());
  std::string rep = "signature (" + std::to_string(d.positive) + "," + std::to_string(d.negative) +
                    ")";
  bool integral = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (out.gram(i, j).get_den() != 1) integral = false;
  bool odd = false;
  for (std::size_t i = 0; i < k; ++i)
    if (integral && out.gram(i, i).get_num() % 2 != 0) odd = true;
  const bool unimodular = integral && abs(out.determinant) == 1;
  // Odd indefinite unimodular lattices are diagonal over Z; rank-1 needs +1.
  if (out.normalized && static_cast<long long>(k) == h2 && unimodular && d.positive == 1 &&
      (d.negative == 0 ? out.gram(0, 0) == 1 : odd)) {
    out.blowup_points = d.negative;
    std::string diag = "1";
    for (int i = 0; i < d.negative; ++i) diag += ",-1";
    rep += "; congruent to diag(" + diag + "): CP^2 blown up at " + std::to_string(d.negative) +
           (d.negative == 1 ? " point" : " points");
  } else if (!unimodular) {
    rep += "; not unimodular (det " + to_string(out.determinant) + ")";
  }
  out.report = rep;
  return out;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_PRESENTATIONS_HPP
