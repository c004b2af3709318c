#ifndef HYPERPOLY_POLY_HPP
#define HYPERPOLY_POLY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpoly/error.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

struct Variable {
  std::string name;
  int degree = 1;  // algebraic degree; cohomological degree is twice this
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// An ordered, graded set of polynomial variables.
class PolyRing {
 public:
  explicit PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].degree < 1)
        throw Error(ErrorCode::RingMismatch, "variable " + vars_[i].name + " has degree < 1");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[j].name == vars_[i].name)
          throw Error(ErrorCode::RingMismatch, "duplicate variable " + vars_[i].name);
    }
  }

  std::size_t size() const { return vars_.size(); }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t require(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorCode::RingMismatch, "ring has no variable " + name);
  }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<Variable> vars) {
  return std::make_shared<const PolyRing>(std::move(vars));
}

/// Q[prefix_1, ..., prefix_n, extra...], each indexed variable of degree 1.
inline RingPtr indexed_ring(const std::string& prefix, int n, std::vector<Variable> extra = {}) {
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({prefix + "_" + std::to_string(i), 1});
  for (auto& v : extra) vars.push_back(std::move(v));
  return make_ring(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

using Exponent = std::uint8_t;

/// Exponent vector tagged with its weighted degree. Ordered graded-lex:
/// degree first, then lexicographic on exponents (first variable heaviest).
struct Monomial {
  int degree = 0;
  std::vector<Exponent> exps;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial make_monomial(const PolyRing& ring, std::vector<Exponent> exps) {
  if (exps.size() != ring.size())
    throw Error(ErrorCode::RingMismatch, "exponent vector length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * ring.variable(i).degree;
  return {d, std::move(exps)};
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial m{a.degree + b.degree, a.exps};
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    const int e = int(m.exps[i]) + int(b.exps[i]);
    if (e > 255) throw Error(ErrorCode::DegreeBoundExceeded, "exponent overflow");
    m.exps[i] = static_cast<Exponent>(e);
  }
  return m;
}

/// All monomials of the given weighted degree, in descending graded-lex order.
inline std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree,
                                                 std::size_t budget = SIZE_MAX) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Exponent> exps(ring.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == ring.size()) {
      if (left == 0) {
        if (out.size() >= budget)
          throw Error(ErrorCode::DegreeBoundExceeded,
                      "more than " + std::to_string(budget) + " monomials in degree " +
                          std::to_string(degree));
        out.push_back({degree, exps});
      }
      return;
    }
    const int w = ring.variable(i).degree;
    for (int e = left / w; e >= 0; --e) {
      exps[i] = static_cast<Exponent>(e);
      rec(i + 1, left - e * w);
    }
    exps[i] = 0;
  };
  rec(0, degree);
  return out;
}

/// Sparse polynomial with exact rational coefficients; zero terms are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_[Monomial{0, std::vector<Exponent>(ring->size(), 0)}] = c;
    return p;
  }
  static Polynomial variable(RingPtr ring, const std::string& name) {
    return variable(ring, ring->require(name));
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    std::vector<Exponent> e(ring->size(), 0);
    e.at(index) = 1;
    Polynomial p(ring);
    p.terms_[make_monomial(*ring, std::move(e))] = 1;
    return p;
  }
  static Polynomial from_monomial(RingPtr ring, Monomial m, const Rational& c = 1) {
    Polynomial p(std::move(ring));
    p.add_term(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
      if (m.degree != d) return false;
    return true;
  }

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      first = false;
      const bool unit = mag == 1;
      std::string mono;
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->variable(i).name;
        if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
      }
      if (mono.empty()) {
        s += hyperpoly::to_string(mag);
      } else if (unit) {
        s += mono;
      } else {
        s += hyperpoly::to_string(mag) + "*" + mono;
      }
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
      throw Error(ErrorCode::RingMismatch, "operands live in different rings");
  }

  RingPtr ring_;
  Terms terms_;
};

inline Polynomial pow(const Polynomial& f, int k) {
  Polynomial out = Polynomial::constant(f.ring(), 1);
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

/// Product over a list of factors; the empty product is 1.
inline Polynomial product(const RingPtr& ring, const std::vector<Polynomial>& factors) {
  Polynomial out = Polynomial::constant(ring, 1);
  for (const auto& f : factors) out = out * f;
  return out;
}

/// Reinterprets f in `target`, matching variables by name. Every variable
/// carrying a nonzero exponent must exist in the target ring.
inline Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
  const PolyRing& src = *f.ring();
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.variable(i).name);
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!where[i])
        throw Error(ErrorCode::RingMismatch,
                    "target ring lacks variable " + src.variable(i).name);
      if (target->variable(*where[i]).degree != src.variable(i).degree)
        throw Error(ErrorCode::RingMismatch, "degree mismatch for " + src.variable(i).name);
      e[*where[i]] = m.exps[i];
    }
    out.add_term(make_monomial(*target, std::move(e)), c);
  }
  return out;
}

/// Sets the named variable to zero and maps the result into `target` by name.
inline Polynomial substitute_variable_to_zero(const Polynomial& f, const std::string& name,
                                              const RingPtr& target) {
  const std::size_t v = f.ring()->require(name);
  Polynomial kept(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.exps[v] == 0) kept.add_term(m, c);
  return map_to_ring(kept, target);
}

/// Replaces each source variable by a polynomial in `target`. Variables
/// without an image are carried over by name.
inline Polynomial evaluate_substitution(const Polynomial& f,
                                        const std::map<std::string, Polynomial>& images,
                                        const RingPtr& target) {
  const PolyRing& src = *f.ring();
  std::vector<Polynomial> img;
  img.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(src.variable(i).name);
    if (it != images.end()) {
      if (!same_ring(it->second.ring(), target))
        throw Error(ErrorCode::RingMismatch, "image of " + src.variable(i).name +
                                                 " is not in the target ring");
      img.push_back(it->second);
    } else {
      img.push_back(Polynomial::variable(target, target->require(src.variable(i).name)));
    }
  }
  // Cache powers per variable; exponents are small.
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& ps = powers[i];
    if (ps.empty()) ps.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * img[i]);
    return ps[k];
  };
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (m.exps[i] > 0) term = term * power(i, m.exps[i]);
    out += term;
  }
  return out;
}

inline Polynomial evaluate_linear_substitution(const Polynomial& f,
                                               const std::map<std::string, Polynomial>& images,
                                               const RingPtr& target) {
  return evaluate_substitution(f, images, target);
}

/// Exact quotient f / v; every monomial of f must contain v.
inline Polynomial divide_by_variable(const Polynomial& f, const std::string& name) {
  const std::size_t v = f.ring()->require(name);
  const int w = f.ring()->variable(v).degree;
  Polynomial out(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.exps[v] == 0)
      throw Error(ErrorCode::NotDivisible, f.to_string() + " is not divisible by " + name);
    Monomial q = m;
    q.exps[v] -= 1;
    q.degree -= w;
    out.add_term(std::move(q), c);
  }
  return out;
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_POLY_HPP
