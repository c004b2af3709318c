#ifndef HYPERPOLY_CLAIMS_HPP
#define HYPERPOLY_CLAIMS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/combinat.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/graded.hpp"
#include "hyperpoly/linalg.hpp"
#include "hyperpoly/poly.hpp"
#include "hyperpoly/presentations.hpp"

namespace hyperpoly {

struct SubsetLess {
  bool operator()(const Subset& a, const Subset& b) const { return subset_order_less(a, b); }
};

using Coefficients = std::map<Subset, Rational, SubsetLess>;

/// Proper subsets A of {2..n}, cardinality then lexicographic.
inline std::vector<Subset> basis_index_sets(int n) {
  std::vector<Subset> out;
  const Subset rest = Subset::full(n).without(1);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    Subset a(n, m);
    if (a.is_subset_of(rest) && a != rest) out.push_back(a);
  }
  sort_subsets(out);
  return out;
}

/// b_A = (-1)^{|A|} b_1^{n-2-|A|} prod_{k in A} b_k.
inline Polynomial basis_element_bA(const Subset& a, int n) {
  if (a.n() != n) throw Error(ErrorCode::DimensionMismatch, "A over the wrong ground set");
  if (a.contains(1)) throw Error(ErrorCode::IndexOutOfRange, "A must lie in {2..n}");
  if (a.size() == n - 1) throw Error(ErrorCode::NotProper, "A = {2..n} is not proper");
  const RingPtr r = b_ring(n, false);
  const Polynomial b1 = detail::v(r, "b", 1);
  std::vector<Polynomial> f{pow(b1, n - 2 - a.size())};
  for (int k : a.elements()) f.push_back(detail::v(r, "b", k));
  return product(r, f) * Rational(a.size() % 2 == 0 ? 1 : -1);
}

/// v_S = (-1)^n prod_{j in Sc-bar}(b_j + b_{n_S} - b_1) prod_{i in S-bar}(2 b_i - b_1).
inline Polynomial v_S(const Subset& s) {
  const int n = s.n();
  const auto mk = subset_markers(s);
  const RingPtr r = b_ring(n, false);
  const Polynomial b1 = detail::v(r, "b", 1);
  const Polynomial bn = detail::v(r, "b", mk.n_s);
  std::vector<Polynomial> f;
  for (int j : mk.sc_bar.elements()) f.push_back(detail::v(r, "b", j) + bn - b1);
  for (int i : mk.s_bar.elements()) f.push_back(Rational(2) * detail::v(r, "b", i) - b1);
  return product(r, f) * Rational(n % 2 == 0 ? 1 : -1);
}

/// The same element written in c-variables.
inline Polynomial v_S_c_form(const Subset& s) {
  const int n = s.n();
  const auto mk = subset_markers(s);
  const RingPtr r = indexed_ring("c", n);
  const Polynomial cn = detail::v(r, "c", mk.n_s);
  std::vector<Polynomial> f;
  for (int j : mk.sc_bar.elements()) f.push_back(detail::v(r, "c", j) + cn);
  for (int i : mk.s_bar.elements()) f.push_back(detail::v(r, "c", i));
  Rational scale(n % 2 == 0 ? 1 : -1);
  scale /= Rational(Integer(1) << mk.sc_bar.size());
  return product(r, f) * scale;
}

/// c_k -> 2 b_k - b_1.
inline Polynomial c_to_b(const Polynomial& f, int n) {
  const RingPtr r = b_ring(n, false);
  std::map<std::string, Polynomial> img;
  for (int k = 1; k <= n; ++k)
    img.emplace(detail::idx("c", k), Rational(2) * detail::v(r, "b", k) - detail::v(r, "b", 1));
  return evaluate_substitution(f, img, r);
}

/// Normal form in Q[b]/(b_k^2 - b_1 b_k : k >= 2): every b_k^e with k >= 2,
/// e >= 1 becomes b_1^{e-1} b_k.
inline Polynomial reduce_quadratic(const Polynomial& f) {
  Polynomial out(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial q = m;
    int shift = 0;
    for (std::size_t k = 1; k < q.exps.size(); ++k)
      if (q.exps[k] > 1) {
        shift += q.exps[k] - 1;
        q.exps[k] = 1;
      }
    q.exps[0] = static_cast<Exponent>(q.exps[0] + shift);
    out.add_term(std::move(q), c);
  }
  return out;
}

/// Coefficients of a reduced degree-(n-2) element on the b_A basis.
inline Coefficients coefficients_on_bA(const Polynomial& f, int n) {
  const Polynomial red = reduce_quadratic(f);
  Coefficients out;
  for (const auto& a : basis_index_sets(n)) out[a] = 0;
  for (const auto& [m, c] : red.terms()) {
    if (m.degree != n - 2)
      throw Error(ErrorCode::NotHomogeneous, "expected degree " + std::to_string(n - 2));
    std::vector<int> el;
    for (std::size_t k = 1; k < m.exps.size(); ++k)
      if (m.exps[k]) el.push_back(static_cast<int>(k) + 1);
    const Subset a = Subset::of(n, el);
    out[a] += a.size() % 2 == 0 ? c : Rational(-c);
  }
  return out;
}

using VsClosedForm = std::function<Rational(const Subset& s, const Subset& a)>;

/// Closed-form coefficient of b_A in v_S.
inline Rational vs_closed_form(const Subset& s, const Subset& a) {
  const auto mk = subset_markers(s);
  const Rational pow2(Integer(1) << (a & mk.s_bar).size());
  if (!s.contains(1))
    return (mk.sc_bar.is_subset_of(a) && !a.contains(mk.m)) ? pow2 : Rational(0);
  return s.complement().is_subset_of(a) ? Rational(0) : pow2;
}

struct ExpansionCheck {
  Subset s;
  Coefficients expanded;
  Coefficients closed_form;
  bool match = true;
  std::optional<Subset> witness;  // first A where the two disagree
};

inline std::string describe(const ExpansionCheck& e) {
  if (e.match) return "v_" + e.s.to_string() + " matches";
  return "v_" + e.s.to_string() + " at A=" + e.witness->to_string() + ": expanded " +
         to_string(e.expanded.at(*e.witness)) + ", closed form " +
         to_string(e.closed_form.at(*e.witness));
}

/// Expands v_S on the b_A basis and compares it with the closed form.
inline ExpansionCheck expand_vS(const Subset& s, const VsClosedForm& closed = vs_closed_form,
                                bool throw_on_mismatch = false) {
  const int n = s.n();
  ExpansionCheck out{s, coefficients_on_bA(v_S(s), n), {}, true, std::nullopt};
  for (const auto& [a, c] : out.expanded) {
    out.closed_form[a] = closed(s, a);
    if (out.match && out.closed_form[a] != c) {
      out.match = false;
      out.witness = a;
    }
  }
  if (!out.match && throw_on_mismatch) throw ClaimViolation(describe(out));
  return out;
}

namespace detail {

inline void require_short(const Alpha& a, const Subset& s) {
  a.check(s);
  if (s.is_empty()) throw Error(ErrorCode::EmptySubset, "subset must be nonempty");
  if (!is_short(a, s)) throw Error(ErrorCode::NotShort, s.to_string() + " is long");
}

}  // namespace detail

/// w_T = v_T + sum_{k=1}^{|T|-1} 2^{k-1} v_{T_k}, T_k = T minus its k smallest elements.
inline Polynomial w_T(const Subset& t, const Alpha& a) {
  detail::require_short(a, t);
  if (!t.contains(1)) throw Error(ErrorCode::RequiresOneInS, t.to_string() + " lacks 1");
  Polynomial out = v_S(t);
  Subset tk = t;
  const auto el = t.elements();
  for (int k = 1; k < t.size(); ++k) {
    tk = tk.without(el[k - 1]);
    out += v_S(tk) * Rational(Integer(1) << (k - 1));
  }
  return out;
}

/// sum_A 2^{|A n T-bar|} b_A, the reduced form of w_T.
inline Coefficients w_T_closed_form(const Subset& t) {
  const Subset tbar = t.without(t.min_element());
  Coefficients out;
  for (const auto& a : basis_index_sets(t.n())) out[a] = Rational(Integer(1) << (a & tbar).size());
  return out;
}

struct TelescopeCheck {
  Subset t;
  bool match = true;
  std::optional<Subset> witness;
};

inline TelescopeCheck check_w_T(const Subset& t, const Alpha& a) {
  const auto got = coefficients_on_bA(w_T(t, a), a.n());
  const auto want = w_T_closed_form(t);
  TelescopeCheck out{t, true, std::nullopt};
  for (const auto& [A, c] : want)
    if (got.at(A) != c) {
      out.match = false;
      out.witness = A;
      break;
    }
  return out;
}

/// Alternating sum of w_T over 1 in T within S; v_S when 1 is not in S.
inline Polynomial x_S(const Subset& s, const Alpha& a) {
  detail::require_short(a, s);
  if (!s.contains(1)) return v_S(s);
  Polynomial out(b_ring(a.n(), false));
  const Subset rest = s.without(1);
  for (std::uint32_t m = 0; m < (1u << a.n()); ++m) {
    Subset sub(a.n(), m);
    if (!sub.is_subset_of(rest)) continue;
    const Subset t = sub.with(1);
    const Rational sign((s.size() + t.size()) % 2 == 0 ? 1 : -1);
    out += w_T(t, a) * sign;
  }
  return out;
}

/// The column label attached to row A: {2..n} \ A if short, else A u {1}.
inline Subset transition_column(const Alpha& a, const Subset& row) {
  const Subset c = Subset::full(a.n()).without(1) - row;
  return is_short(a, c) ? c : row.with(1);
}

struct TransitionMatrix {
  std::vector<Subset> rows;     // A
  std::vector<Subset> columns;  // S(A)
  Matrix q;                     // q(i, j) = coefficient of b_{A_i} in x_{S(A_j)}
  bool lower_unitriangular = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline std::string describe(const TransitionMatrix& t) {
  if (t.lower_unitriangular) return "transition matrix is lower triangular with unit diagonal";
  const auto [i, j] = *t.witness;
  return "entry (A=" + t.rows[i].to_string() + ", S=" + t.columns[j].to_string() +
         ") = " + to_string(t.q(i, j)) + (i == j ? " on the diagonal" : " above the diagonal");
}

inline TransitionMatrix transition_matrix(const Alpha& a, bool throw_on_violation = true) {
  TransitionMatrix t;
  t.rows = basis_index_sets(a.n());
  const std::size_t k = t.rows.size();
  t.q = Matrix(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    t.columns.push_back(transition_column(a, t.rows[j]));
    const auto coeffs = coefficients_on_bA(x_S(t.columns[j], a), a.n());
    for (std::size_t i = 0; i < k; ++i) t.q(i, j) = coeffs.at(t.rows[i]);
  }
  for (std::size_t i = 0; i < k && t.lower_unitriangular; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Rational want = i == j ? 1 : 0;
      if (t.q(i, j) != want) {
        t.lower_unitriangular = false;
        t.witness = {i, j};
        break;
      }
    }
  if (!t.lower_unitriangular && throw_on_violation) throw ClaimViolation(describe(t));
  return t;
}

struct SpanningReport {
  std::size_t slice_dimension = 0;  // degree n-2 of Q[b]/(b_k^2 - b_1 b_k)
  std::size_t rank = 0;             // of the v_S coefficient matrix
  long long deficit = 0;
  bool graded_route = false;        // the v_S kill the whole slice
  bool triangular_route = false;
  bool spans = false;
};

/// Checks that {v_S : nonempty short S} spans the degree-(n-2) slice of
/// Q[b]/(b_k^2 - b_1 b_k), by coefficient rank and by the graded engine.
/// `exclude` drops one v_S for negative controls.
inline SpanningReport spanning_check(const Alpha& a, std::optional<Subset> exclude = std::nullopt,
                                     bool throw_on_violation = true) {
  const int n = a.n();
  const RingPtr r = b_ring(n, false);
  const Polynomial b1 = detail::v(r, "b", 1);
  std::vector<Polynomial> quad;
  for (int k = 2; k <= n; ++k) {
    const Polynomial bk = detail::v(r, "b", k);
    quad.push_back(bk * bk - b1 * bk);
  }
  SpanningReport rep;
  rep.slice_dimension = static_cast<std::size_t>(hilbert_function(GradedIdeal(r, quad), n - 2).dims[n - 2]);

  std::vector<Polynomial> vs;
  for (const auto& s : enumerate_shorts(a, 1))
    if (!exclude || s != *exclude) vs.push_back(v_S(s));
  const auto rows = basis_index_sets(n);
  Matrix m(vs.size(), rows.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto c = coefficients_on_bA(vs[i], n);
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = c.at(rows[j]);
  }
  rep.rank = hyperpoly::rank(m);
  rep.deficit = static_cast<long long>(rep.slice_dimension) - static_cast<long long>(rep.rank);

  auto gens = quad;
  gens.insert(gens.end(), vs.begin(), vs.end());
  rep.graded_route = hilbert_function(GradedIdeal(r, gens), n - 2).dims[n - 2] == 0;
  rep.triangular_route = exclude ? false : transition_matrix(a, false).lower_unitriangular;
  rep.spans = rep.deficit == 0 && rep.graded_route && (exclude || rep.triangular_route);
  if (throw_on_violation && !exclude && !rep.spans)
    throw ClaimViolation("v_S span rank " + std::to_string(rep.rank) + " of " +
                         std::to_string(rep.slice_dimension));
  return rep;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_CLAIMS_HPP
