#ifndef HYPERPOLY_GRADED_HPP
#define HYPERPOLY_GRADED_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpoly/error.hpp"
#include "hyperpoly/poly.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

inline constexpr std::size_t kDefaultMonomialBudget = 200000;

struct SliceOptions {
  std::size_t monomial_budget = kDefaultMonomialBudget;
};

/// Homogeneous ideal, optionally containing everything of degree >= t.
class GradedIdeal {
 public:
  GradedIdeal(RingPtr ring, std::vector<Polynomial> generators,
              std::optional<int> truncation_degree = std::nullopt)
      : ring_(std::move(ring)), truncation_(truncation_degree) {
    if (truncation_ && *truncation_ < 1)
      throw Error(ErrorCode::DimensionMismatch, "truncation degree must be >= 1");
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_))
        throw Error(ErrorCode::RingMismatch, "generator " + g.to_string() + " in foreign ring");
      if (!g.is_homogeneous())
        throw Error(ErrorCode::NotHomogeneous, "generator " + g.to_string());
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::optional<int>& truncation_degree() const { return truncation_; }

  GradedIdeal with_generator(Polynomial g) const {
    auto gens = generators_;
    gens.push_back(std::move(g));
    return GradedIdeal(ring_, std::move(gens), truncation_);
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<int> truncation_;
};

/// Dimensions of the graded pieces of a quotient ring, index = algebraic degree.
struct HilbertTable {
  std::vector<long long> dims;

  long long euler() const { return std::accumulate(dims.begin(), dims.end(), 0LL); }

  std::vector<long long> trimmed() const {
    auto d = dims;
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
  }

  /// Poincare polynomial in the cohomological variable t (t^{2d} per degree d).
  std::string poincare() const {
    std::string s;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (dims[d] == 0) continue;
      if (!s.empty()) s += " + ";
      const std::string t = d == 0 ? "" : (d == 1 ? "t^2" : "t^" + std::to_string(2 * d));
      if (t.empty()) {
        s += std::to_string(dims[d]);
      } else {
        s += (dims[d] == 1 ? "" : std::to_string(dims[d])) + t;
      }
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

using SparseRow = std::vector<std::pair<int, Integer>>;  // sorted by column

namespace detail {

// a*x - b*y for sparse rows.
inline SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b,
                         const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

/// Echelon basis of one homogeneous slice of an ideal. Columns are the
/// degree-d monomials in ascending graded-lex order; a row's pivot is its
/// first (smallest) monomial, so the surviving basis favours b_1-heavy terms.
class SliceEchelon {
 public:
  SliceEchelon(RingPtr ring, int degree, std::size_t budget)
      : ring_(std::move(ring)), degree_(degree) {
    columns_ = monomials_of_degree(*ring_, degree, budget);
    std::reverse(columns_.begin(), columns_.end());
    for (std::size_t i = 0; i < columns_.size(); ++i) index_.emplace(columns_[i], int(i));
    pivot_row_.assign(columns_.size(), -1);
  }

  int degree() const { return degree_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& columns() const { return columns_; }
  std::size_t monomial_count() const { return columns_.size(); }
  std::size_t rank() const { return full_ ? columns_.size() : rows_.size(); }
  bool is_full() const { return full_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  // Marks the slice as containing every monomial.
  void fill() {
    full_ = true;
    rows_.clear();
    pivot_row_.assign(columns_.size(), -1);
  }

  int column_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  SparseRow to_row(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "slice row ring");
    Integer den = 1;
    for (const auto& [m, c] : f.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    SparseRow row;
    for (const auto& [m, c] : f.terms()) {
      const int col = column_of(m);
      if (col < 0)
        throw Error(ErrorCode::NotHomogeneous,
                    f.to_string() + " has a term outside degree " + std::to_string(degree_));
      row.emplace_back(col, c.get_num() * (den / c.get_den()));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  Polynomial to_polynomial(const SparseRow& row) const {
    Polynomial p(ring_);
    for (const auto& [c, v] : row) p.add_term(columns_[c], Rational(v));
    return p;
  }

  /// Adds a row to the span; returns true when the rank grew.
  bool insert(SparseRow row) {
    if (full_) return false;
    while (!row.empty()) {
      const int lead = row.front().first;
      const int p = pivot_row_[lead];
      if (p < 0) break;
      eliminate(row, rows_[p]);
    }
    if (row.empty()) return false;
    detail::make_primitive(row);
    pivot_row_[row.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  /// Fully reduces `row` against the basis. The result is supported on
  /// non-pivot columns and equals scale*row minus an element of the span.
  std::pair<SparseRow, Integer> reduce(SparseRow row) const {
    Integer scale = 1;
    if (full_) return {SparseRow{}, scale};
    std::size_t cursor = 0;
    while (cursor < row.size()) {
      const int p = pivot_row_[row[cursor].first];
      if (p < 0) {
        ++cursor;
        continue;
      }
      const SparseRow& piv = rows_[p];
      const Integer& pl = piv.front().second;
      const Integer& rl = row[cursor].second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), pl.get_mpz_t(), rl.get_mpz_t());
      const Integer a = pl / g, b = rl / g;
      // Entries before the cursor are scaled but otherwise unchanged.
      SparseRow head(row.begin(), row.begin() + cursor);
      SparseRow tail(row.begin() + cursor, row.end());
      for (auto& [c, v] : head) v *= a;
      tail = detail::combine(a, tail, b, piv);
      head.insert(head.end(), std::make_move_iterator(tail.begin()),
                  std::make_move_iterator(tail.end()));
      row = std::move(head);
      scale *= a;
    }
    return {std::move(row), scale};
  }

  bool contains(const SparseRow& row) const { return reduce(row).first.empty(); }

  /// Pivot-free monomials, in column order; these span the quotient slice.
  std::vector<int> free_columns() const {
    std::vector<int> out;
    if (full_) return out;
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (pivot_row_[c] < 0) out.push_back(int(c));
    return out;
  }

 private:
  static void eliminate(SparseRow& row, const SparseRow& piv) {
    const Integer& pl = piv.front().second;
    const Integer& rl = row.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), pl.get_mpz_t(), rl.get_mpz_t());
    row = detail::combine(pl / g, row, rl / g, piv);
  }

  RingPtr ring_;
  int degree_;
  std::vector<Monomial> columns_;
  std::map<Monomial, int> index_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
  bool full_ = false;
};

/// Coordinates of a homogeneous element modulo an ideal slice, over the
/// surviving (pivot-free) monomial basis of its degree.
struct NormalForm {
  int degree = 0;
  std::vector<Monomial> basis;
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
};

/// Degree-by-degree linear algebra for one ideal. Slice d is spanned by the
/// degree-d generators and x_v * (slice d - deg x_v) for every variable,
/// which equals the span of {m*g : deg m = d - deg g}.
class GradedQuotient {
 public:
  explicit GradedQuotient(GradedIdeal ideal, SliceOptions options = {})
      : ideal_(std::move(ideal)), options_(options) {}

  const GradedIdeal& ideal() const { return ideal_; }

  const SliceEchelon& slice(int d) {
    if (d < 0) throw Error(ErrorCode::DimensionMismatch, "negative degree");
    while (static_cast<int>(slices_.size()) <= d) build_next();
    return *slices_[d];
  }

  HilbertTable hilbert(int max_degree) {
    if (max_degree < 0) throw Error(ErrorCode::DimensionMismatch, "max_degree < 0");
    HilbertTable t;
    for (int d = 0; d <= max_degree; ++d) {
      const auto& s = slice(d);
      t.dims.push_back(static_cast<long long>(s.monomial_count() - s.rank()));
    }
    return t;
  }

  NormalForm normal_form(const Polynomial& f, std::optional<int> degree = std::nullopt) {
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());
    const int d = f.is_zero() ? degree.value_or(0) : f.degree();
    const auto& s = slice(d);
    NormalForm nf;
    nf.degree = d;
    const auto free = s.free_columns();
    for (int c : free) nf.basis.push_back(s.columns()[c]);
    nf.coords.assign(free.size(), 0);
    // Scale f to integers, reduce, then undo both scalings.
    Integer den = 1;
    for (const auto& [m, c] : f.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    auto [rem, scale] = s.reduce(s.to_row(f));
    for (const auto& [c, v] : rem) {
      auto it = std::lower_bound(free.begin(), free.end(), c);
      nf.coords[it - free.begin()] = Rational(v) / Rational(scale * den);
    }
    return nf;
  }

  bool contains(const Polynomial& f) { return normal_form(f).is_zero(); }

 private:
  void build_next() {
    const int d = static_cast<int>(slices_.size());
    auto s = std::make_unique<SliceEchelon>(ideal_.ring(), d, options_.monomial_budget);
    if (ideal_.truncation_degree() && d >= *ideal_.truncation_degree()) {
      s->fill();
      slices_.push_back(std::move(s));
      return;
    }
    for (const auto& g : ideal_.generators())
      if (g.degree() == d) s->insert(s->to_row(g));
    const PolyRing& ring = *ideal_.ring();
    for (std::size_t v = 0; v < ring.size(); ++v) {
      const int w = ring.variable(v).degree;
      if (w > d) continue;
      const SliceEchelon& lower = *slices_[d - w];
      if (lower.rank() == 0) continue;
      // Column map lower -> this slice under multiplication by x_v.
      std::vector<int> shift(lower.monomial_count());
      for (std::size_t c = 0; c < lower.monomial_count(); ++c) {
        Monomial m = lower.columns()[c];
        m.exps[v] += 1;
        m.degree += w;
        shift[c] = s->column_of(m);
      }
      if (lower.is_full()) {
        for (std::size_t c = 0; c < lower.monomial_count(); ++c) {
          SparseRow row{{shift[c], Integer(1)}};
          s->insert(std::move(row));
        }
        continue;
      }
      for (const auto& r : lower.rows()) {
        SparseRow row;
        row.reserve(r.size());
        for (const auto& [c, val] : r) row.emplace_back(shift[c], val);
        // Multiplication by a monomial preserves graded-lex order.
        s->insert(std::move(row));
      }
    }
    slices_.push_back(std::move(s));
  }

  GradedIdeal ideal_;
  SliceOptions options_;
  std::vector<std::unique_ptr<SliceEchelon>> slices_;
};

inline HilbertTable hilbert_function(const GradedIdeal& ideal, int max_degree,
                                     SliceOptions options = {}) {
  GradedQuotient q(ideal, options);
  return q.hilbert(max_degree);
}

inline NormalForm normal_form(const Polynomial& f, const GradedIdeal& ideal,
                              SliceOptions options = {}) {
  GradedQuotient q(ideal, options);
  return q.normal_form(f);
}

struct SliceComparison {
  bool equal = true;
  std::optional<int> first_divergence;
  std::string detail;
};

/// Compares the degree-d slices of two ideals for d = 0..max_degree.
inline SliceComparison ideal_slices_equal(const GradedIdeal& a, const GradedIdeal& b,
                                          int max_degree, SliceOptions options = {}) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorCode::RingMismatch, "slice comparison across different rings");
  GradedQuotient qa(a, options), qb(b, options);
  for (int d = 0; d <= max_degree; ++d) {
    const auto& sa = qa.slice(d);
    const auto& sb = qb.slice(d);
    bool same = sa.rank() == sb.rank();
    if (same && !sa.is_full()) {
      if (sb.is_full()) {
        same = sa.rank() == sa.monomial_count();
      } else {
        for (const auto& r : sb.rows())
          if (!sa.contains(r)) {
            same = false;
            break;
          }
      }
    }
    if (!same)
      return {false, d,
              "degree " + std::to_string(d) + ": ranks " + std::to_string(sa.rank()) + " vs " +
                  std::to_string(sb.rank())};
  }
  return {true, std::nullopt, "equal through degree " + std::to_string(max_degree)};
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_GRADED_HPP
