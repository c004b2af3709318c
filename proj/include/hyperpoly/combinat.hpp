#ifndef HYPERPOLY_COMBINAT_HPP
#define HYPERPOLY_COMBINAT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpoly/error.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

// Exhaustive subset scans are exponential; keep them at desk scale.
inline constexpr int kMaxEdges = 24;

/// A subset of the ground set {1,...,n}. Element i lives in bit i-1.
class Subset {
 public:
  Subset() = default;
  Subset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxEdges)
      throw Error(ErrorCode::DegreeBoundExceeded, "ground set size " + std::to_string(n) +
                                                      " outside [0, " +
                                                      std::to_string(kMaxEdges) + "]");
    if (n < 32 && (mask >> n) != 0)
      throw Error(ErrorCode::IndexOutOfRange, "mask has bits beyond n=" + std::to_string(n));
  }

  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, n == 0 ? 0u : (~0u >> (32 - n))); }

  static Subset of(int n, std::span<const int> elements) {
    std::uint32_t mask = 0;
    for (int e : elements) {
      if (e < 1 || e > n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "element " + std::to_string(e) + " not in 1.." + std::to_string(n));
      mask |= 1u << (e - 1);
    }
    return Subset(n, mask);
  }
  static Subset of(int n, std::initializer_list<int> elements) {
    return of(n, std::span<const int>(elements.begin(), elements.size()));
  }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return *this == full(n_); }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u); }

  Subset complement() const { return Subset(n_, full(n_).mask_ & ~mask_); }
  Subset with(int i) const { return Subset::of(n_, {i}) | *this; }
  Subset without(int i) const { return Subset(n_, mask_ & ~(1u << (i - 1))); }

  bool is_subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }

  /// Smallest element; requires a nonempty subset.
  int min_element() const {
    if (mask_ == 0) throw Error(ErrorCode::EmptySubset, "min of empty subset");
    return std::countr_zero(mask_) + 1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    check_same(a, b);
    return Subset(a.n_, a.mask_ | b.mask_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    check_same(a, b);
    return Subset(a.n_, a.mask_ & b.mask_);
  }
  friend Subset operator-(const Subset& a, const Subset& b) {
    check_same(a, b);
    return Subset(a.n_, a.mask_ & ~b.mask_);
  }
  friend bool operator==(const Subset&, const Subset&) = default;

  // "{1,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  // "1_2_5", used for stable graph identifiers.
  std::string to_id() const {
    std::string s;
    for (int e : elements()) {
      if (!s.empty()) s += "_";
      s += std::to_string(e);
    }
    return s.empty() ? "empty" : s;
  }

 private:
  static void check_same(const Subset& a, const Subset& b) {
    if (a.n_ != b.n_)
      throw Error(ErrorCode::DimensionMismatch, "subsets over different ground sets (" +
                                                    std::to_string(a.n_) + " vs " +
                                                    std::to_string(b.n_) + ")");
  }

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Cardinality first, then lexicographic on the sorted element lists.
inline bool subset_order_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

inline void sort_subsets(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), subset_order_less);
}

/// Validated generic edge-length vector.
class Alpha {
 public:
  static Alpha from_rationals(std::vector<Rational> lengths) {
    const int n = static_cast<int>(lengths.size());
    if (n < 3)
      throw Error(ErrorCode::TooFewEdges, "need at least 3 edges, got " + std::to_string(n));
    if (n > kMaxEdges)
      throw Error(ErrorCode::DegreeBoundExceeded,
                  "genericity scan limited to n <= " + std::to_string(kMaxEdges));
    for (int i = 0; i < n; ++i) {
      lengths[i].canonicalize();
      if (sgn(lengths[i]) <= 0)
        throw Error(ErrorCode::NonPositiveLength,
                    "alpha_" + std::to_string(i + 1) + " = " + hyperpoly::to_string(lengths[i]) + " <= 0");
    }
    Alpha a(std::move(lengths));
    if (auto witness = a.find_balanced_split())
      throw NonGeneric(*witness);
    return a;
  }

  int n() const { return static_cast<int>(lengths_.size()); }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& length(int i) const { return lengths_.at(i - 1); }
  const Rational& total() const { return total_; }

  Rational sum(const Subset& s) const {
    check(s);
    Rational r = 0;
    for (int e : s.elements()) r += lengths_[e - 1];
    return r;
  }

  // Integer-scaled comparison: sign of sum(S) - sum(S^c).
  int balance_sign(const Subset& s) const {
    check(s);
    if (fast_) {
      std::int64_t acc = 0;
      for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) acc += small_[std::countr_zero(m)];
      const std::int64_t diff = 2 * acc - small_total_;
      return (diff > 0) - (diff < 0);
    }
    Integer acc = 0;
    for (int e : s.elements()) acc += weights_[e - 1];
    return sgn(Integer(2 * acc - weight_total_));
  }

  void check(const Subset& s) const {
    if (s.n() != n())
      throw Error(ErrorCode::DimensionMismatch, "subset over n=" + std::to_string(s.n()) +
                                                    " used with alpha of n=" +
                                                    std::to_string(n()));
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + hyperpoly::to_string(lengths_[i]);
    return s + ")";
  }

  class NonGeneric : public Error {
   public:
    explicit NonGeneric(Subset witness)
        : Error(ErrorCode::NonGenericAlpha,
                "balanced split with witness " + witness.to_string()),
          witness_(witness) {}
    const Subset& witness() const { return witness_; }

   private:
    Subset witness_;
  };

 private:
  explicit Alpha(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
    Integer lcm = 1;
    for (const auto& l : lengths_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), l.get_den_mpz_t());
    total_ = 0;
    weight_total_ = 0;
    for (const auto& l : lengths_) {
      total_ += l;
      Integer w = l.get_num() * (lcm / l.get_den());
      weights_.push_back(w);
      weight_total_ += w;
    }
    // int64 fast path: 2 * total must not overflow.
    fast_ = weight_total_ < Integer(std::numeric_limits<std::int64_t>::max() / 4);
    if (fast_) {
      for (const auto& w : weights_) small_.push_back(w.get_si());
      small_total_ = weight_total_.get_si();
    }
  }

  // Scans the 2^{n-1} complementary pairs {S, S^c} with n not in S.
  std::optional<Subset> find_balanced_split() const {
    const int n = this->n();
    const std::uint32_t half = 1u << (n - 1);
    for (std::uint32_t mask = 1; mask < half; ++mask) {
      Subset s(n, mask);
      if (balance_sign(s) == 0) return s;
    }
    return std::nullopt;
  }

  std::vector<Rational> lengths_;
  Rational total_;
  std::vector<Integer> weights_;
  Integer weight_total_;
  bool fast_ = false;
  std::vector<std::int64_t> small_;
  std::int64_t small_total_ = 0;
};

inline Alpha validate_alpha(std::span<const std::string> lengths) {
  if (lengths.size() < 3)
    throw Error(ErrorCode::TooFewEdges,
                "need at least 3 edges, got " + std::to_string(lengths.size()));
  std::vector<Rational> parsed;
  parsed.reserve(lengths.size());
  for (const auto& s : lengths) parsed.push_back(parse_rational(s));
  return Alpha::from_rationals(std::move(parsed));
}

inline Alpha validate_alpha(std::initializer_list<const char*> lengths) {
  std::vector<std::string> v(lengths.begin(), lengths.end());
  return validate_alpha(v);
}

/// Sum over S strictly below the sum over S^c.
inline bool is_short(const Alpha& a, const Subset& s) { return a.balance_sign(s) < 0; }
inline bool is_long(const Alpha& a, const Subset& s) { return a.balance_sign(s) > 0; }

inline std::vector<Subset> enumerate_shorts(const Alpha& a, int min_size) {
  const int n = a.n();
  if (min_size < 0 || min_size > n)
    throw Error(ErrorCode::DimensionMismatch,
                "min_size " + std::to_string(min_size) + " outside [0, " + std::to_string(n) + "]");
  std::vector<Subset> out;
  const std::uint32_t end = n == 32 ? 0 : (1u << n);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    Subset s(n, mask);
    if (s.size() >= min_size && is_short(a, s)) out.push_back(s);
  }
  sort_subsets(out);
  return out;
}

/// The short subsets of size at least two; these index the core components.
inline std::vector<Subset> core_shorts(const Alpha& a) { return enumerate_shorts(a, 2); }

struct SubsetMarkers {
  int m;               // min S
  int n_s;             // min S^c
  Subset s_bar;        // S \ {m}
  Subset sc_bar;       // S^c \ {n_s}
};

inline SubsetMarkers subset_markers(const Subset& s) {
  if (s.is_empty()) throw Error(ErrorCode::EmptySubset, "markers need a nonempty subset");
  if (s.is_full()) throw Error(ErrorCode::FullSubset, "markers need a proper subset");
  const int m = s.min_element();
  const Subset sc = s.complement();
  const int ns = sc.min_element();
  return {m, ns, s.without(m), sc.without(ns)};
}

/// Index permutation; perm[k-1] is the old index now carried by new index k.
struct Relabeling {
  std::vector<int> perm;

  int old_index(int new_index) const { return perm.at(new_index - 1); }
  int new_index(int old_index) const {
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k] == old_index) return static_cast<int>(k) + 1;
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(old_index));
  }
  bool is_identity() const {
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  Subset apply(const Subset& s) const {
    std::vector<int> out;
    for (int e : s.elements()) out.push_back(new_index(e));
    return Subset::of(s.n(), out);
  }
  Alpha apply(const Alpha& a) const {
    std::vector<Rational> l(a.n());
    for (int k = 1; k <= a.n(); ++k) l[k - 1] = a.length(old_index(k));
    return Alpha::from_rationals(std::move(l));
  }
  static Relabeling identity(int n) {
    Relabeling r;
    r.perm.resize(n);
    std::iota(r.perm.begin(), r.perm.end(), 1);
    return r;
  }
};

struct RelabeledSubset {
  Alpha alpha;
  Subset s;
  Relabeling relabeling;
};

/// Swaps index 1 with min S when 1 is not in S, so that the standing
/// convention 1 in S holds; the permutation is recorded, never implicit.
inline RelabeledSubset relabel_to_contain_one(const Alpha& a, const Subset& s) {
  a.check(s);
  Relabeling r = Relabeling::identity(a.n());
  if (!s.is_empty() && !s.contains(1)) std::swap(r.perm[0], r.perm[s.min_element() - 1]);
  return {r.apply(a), r.apply(s), r};
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_COMBINAT_HPP
