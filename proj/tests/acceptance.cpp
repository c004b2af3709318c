// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpoly/hyperpoly.hpp"

using namespace hyperpoly;

namespace {

// Floating-point tolerance for criterion 9; every other criterion is exact.
constexpr double kNumericTol = 1e-9;
constexpr int kPairSamples = 1000;
constexpr int kGroupSamples = 100;
constexpr std::uint64_t kSeed = 20240611;

const std::vector<std::vector<const char*>> kBattery = {
    {"1", "2", "2"},          {"1", "1", "1", "2"},       {"1", "2", "3", "3"},       {"2", "2", "2", "3"},
    {"1", "1", "3", "3", "3"}, {"1", "1", "1", "1", "1"}, {"1", "2", "2", "3", "3"}, {"2", "3", "4", "5", "7"},
    {"1", "1", "1", "1", "1", "2"}, {"1", "1", "1", "1", "2", "3"}, {"1", "2", "3", "4", "5", "6"},
    {"2", "2", "2", "2", "2", "1"}};

Alpha make(const std::vector<const char*>& v) {
  std::vector<std::string> s(v.begin(), v.end());
  return validate_alpha(std::span<const std::string>(s));
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Polynomial b(const RingPtr& r, int i) { return Polynomial::variable(r, "b_" + std::to_string(i)); }

Outcome genericity_and_shorts() {
  Outcome o;
  const Alpha a = make({"1", "1", "3", "3", "3"});
  // Oracle: direct subset-sum scan.
  int scan_all = 0, scan_core = 0;
  for (std::uint32_t m = 1; m < 32; ++m) {
    const Subset s(5, m);
    Rational in = 0, out = 0;
    for (int i = 1; i <= 5; ++i) (s.contains(i) ? in : out) += a.length(i);
    if (in < out) {
      ++scan_all;
      scan_core += s.size() >= 2;
    }
  }
  o.require(scan_all == 15 && scan_core == 10, "subset-sum scan disagrees with 15/10");
  o.require(enumerate_shorts(a, 1).size() == 15u && (1 << 4) - 1 == 15, "nonempty shorts != 15");
  o.require(core_shorts(a).size() == 10u, "shorts of size >= 2 != 10");
  try {
    make({"1", "1", "1", "1"});
    o.require(false, "(1,1,1,1) accepted");
  } catch (const Alpha::NonGeneric& e) {
    o.require(e.witness() == Subset::of(4, {1, 2}), "witness " + e.witness().to_string());
  }
  return o;
}

Outcome konno_tables() {
  Outcome o;
  const Alpha a = make({"1", "1", "3", "3", "3"}), c = make({"1", "1", "1", "2"});
  const auto ta = betti(konno_ideal(a)).trimmed(), tc = betti(konno_ideal(c)).trimmed();
  o.require(ta == std::vector<long long>{1, 5, 11}, "table for (1,1,3,3,3)");
  o.require(tc == std::vector<long long>{1, 4}, "table for (1,1,1,2)");
  o.require(ta.back() == 11 && static_cast<long long>(core_components(a).size()) == 11, "top dim vs components (11)");
  o.require(tc.back() == 4 && static_cast<long long>(core_components(c).size()) == 4, "top dim vs components (4)");
  return o;
}

Outcome equivariant_freeness() {
  Outcome o;
  for (const auto& v : kBattery) {
    const Alpha a = make(v);
    const auto f = freeness_check(a);
    // Partial sums of the ordinary table through degree n.
    std::vector<long long> partial;
    long long acc = 0;
    for (int d = 0; d <= a.n(); ++d) {
      acc += d < static_cast<int>(f.ordinary.dims.size()) ? f.ordinary.dims[d] : 0;
      partial.push_back(acc);
    }
    bool match = true;
    for (int d = 0; d <= a.n(); ++d) match = match && f.equivariant.dims.at(d) == partial[d];
    o.require(f.free && match, "not free for " + a.to_string());
  }
  return o;
}

Outcome x_to_zero_specialization() {
  Outcome o;
  for (const auto& v : kBattery) {
    const Alpha a = make(v);
    const auto cmp = ideal_slices_equal(x_to_zero(equivariant_ideal(a)).ideal, konno_ideal(a).ideal, a.n() - 2);
    o.require(cmp.equal, "phi(J) != I for " + a.to_string() + ": " + cmp.detail);
  }
  return o;
}

Outcome claims_suite() {
  Outcome o;
  for (int n = 3; n <= 7; ++n)
    for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
      const auto e = expand_vS(Subset(n, m));
      o.require(e.match, describe(e));
    }
  for (const auto& v : kBattery) {
    const Alpha a = make(v);
    for (const auto& t : enumerate_shorts(a, 1))
      if (t.contains(1)) o.require(check_w_T(t, a).match, "w_T fails for " + t.to_string());
    const auto tm = transition_matrix(a, false);
    o.require(tm.lower_unitriangular, a.to_string() + ": " + describe(tm));
    const auto sp = spanning_check(a, std::nullopt, false);
    o.require(sp.spans && sp.rank == (std::size_t(1) << (a.n() - 1)) - 1, "span rank for " + a.to_string());
  }
  try {
    expand_vS(Subset::of(4, {1, 2}), [](const Subset& s, const Subset& A) { return vs_closed_form(s, A) + 1; }, true);
    o.require(false, "corrupted closed form not flagged");
  } catch (const ClaimViolation&) {
  }
  return o;
}

Outcome core_component_rings() {
  Outcome o;
  const Alpha a = make({"1", "1", "3", "3", "3"});
  const auto r = b_ring(5, false);

  const auto again = core_ordinary_ideal(a, Subset::of(5, {1, 2}));
  o.require(betti(again).trimmed() == std::vector<long long>{1, 4, 1}, "again: Betti");
  const auto fa = intersection_form(a, Subset::of(5, {1, 2}), {b(r, 1) - b(r, 3) - b(r, 4) - b(r, 5), b(r, 3), b(r, 4), b(r, 5)});
  o.require(fa.normalizing_index == 3, "again: normalization is not -b_1 b_3 = 1");
  o.require(fa.gram == Matrix::diagonal({1, -1, -1, -1}), "again: form != diag(1,-1,-1,-1)");

  const auto third = core_ordinary_ideal(a, Subset::of(5, {1, 3}));
  const auto tr = third.ring();
  const GradedIdeal expect(tr, {b(tr, 1) * b(tr, 1), b(tr, 2) * (b(tr, 1) - b(tr, 2)), b(tr, 3) - b(tr, 1), b(tr, 4), b(tr, 5)});
  o.require(ideal_slices_equal(third.ideal, expect, 5).equal, "third: slice equivalence");
  o.require(betti(third).trimmed() == std::vector<long long>{1, 2, 1}, "third: Betti");
  const auto ft = intersection_form(a, Subset::of(5, {1, 3}), {b(r, 1) - b(r, 2), b(r, 2)});
  std::ostringstream got;
  got << "third: form is diag(" << to_string(ft.gram(0, 0)) << "," << to_string(ft.gram(1, 1)) << "), expected diag(-1,1)";
  o.require(ft.gram == Matrix::diagonal({-1, 1}), got.str());

  const auto proj = core_ordinary_ideal(a, Subset::of(5, {1, 2, 3}));
  const auto pr = proj.ring();
  const GradedIdeal pexpect(pr, {pow(b(pr, 1), 3), b(pr, 2) - b(pr, 1), b(pr, 3) - b(pr, 1), b(pr, 4), b(pr, 5)});
  o.require(ideal_slices_equal(proj.ideal, pexpect, 5).equal, "projective: slice equivalence");
  return o;
}

Outcome euler_cross_checks() {
  Outcome o;
  for (const auto& v : kBattery) {
    const Alpha a = make(v);
    for (const auto& s : core_shorts(a)) {
      const auto c = euler_cross_check(a, s, false);
      o.require(c.holds(), a.to_string() + " S=" + s.to_string());
    }
  }
  const Alpha a = make({"1", "1", "3", "3", "3"});
  auto val = [&](std::initializer_list<int> s) {
    const auto c = euler_cross_check(a, Subset::of(5, s), false);
    return std::array<long long, 3>{c.core, c.polygon_subspace, (Subset::of(5, s).size() - 1) * c.supersets};
  };
  o.require(val({1, 2}) == std::array<long long, 3>{6, 2, 4}, "6 = 2 + 4");
  o.require(val({1, 3}) == std::array<long long, 3>{4, 2, 2}, "4 = 2 + 2");
  o.require(val({1, 2, 3}) == std::array<long long, 3>{3, 1, 2}, "3 = 1 + 2");
  return o;
}

Outcome core_geometry() {
  Outcome o;
  const Alpha a = make({"1", "1", "3", "3", "3"});
  const auto g = core_graph(a, GraphScope::Component, Subset::of(5, {1, 2}));
  o.require(g.nodes.size() == 5 && g.edges.size() == 4, "ooh graph shape");
  for (const auto& v : kBattery) {
    const Alpha b = make(v);
    const auto shorts = core_shorts(b);
    for (const auto& s : shorts)
      for (const auto& t : shorts) {
        if (s == t) continue;
        const auto c = classify_intersection(b, s, t);
        IntersectionKind want = IntersectionKind::SubbundleInUUnion;
        if ((s & t).is_empty())
          want = IntersectionKind::PolygonSubspace;
        else if (is_long(b, s | t))
          want = IntersectionKind::Empty;
        o.require(c.kind == want, b.to_string() + " " + s.to_string() + " " + t.to_string());
        if (want == IntersectionKind::SubbundleInUUnion) o.require(c.within == (s | t), "within");
      }
  }
  return o;
}

Outcome moment_numerics() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  double worst_roundtrip = 0, worst_norm = 0, worst_equiv = 0;
  const std::vector<Alpha> reduced = {make({"1", "1", "3", "3", "3"}), make({"1", "2", "2", "3", "3"}),
                                      make({"1", "1", "1", "1", "1", "2"})};
  for (const auto& a : reduced) {
    for (const auto& s : enumerate_shorts(a, 1)) {
      for (int k = 0; k < kPairSamples; ++k) {
        const auto data = random_polygon_pair(a, s, rng);
        const auto back = point_from_polygon_pair(a, data, kNumericTol);
        const auto fwd = polygon_pair_from_point(a, s, back.point, kNumericTol);
        worst_roundtrip = std::max({worst_roundtrip, back.moment.max(), distance(fwd.data, data.conjugated(back.rotation))});
        worst_norm = std::max(worst_norm, fwd.norm_identity);
        o.require(is_stable(a, back.point).stable, "constructed point unstable");
      }
    }
    PointPQ x = PointPQ::zero(a.n());
    for (int i = 0; i < a.n(); ++i) {
      x.p[i] = {random_complex(rng), random_complex(rng)};
      x.q[i] = {random_complex(rng), random_complex(rng)};
    }
    const auto r = mu_real(x);
    const auto c = mu_complex(x);
    for (int k = 0; k < kGroupSamples; ++k) {
      const auto kc = random_compact_element(a.n(), rng);
      const auto rk = mu_real(group_act(x, kc));
      worst_equiv = std::max(worst_equiv, (rk.su2_matrix() - kc.a.inverse() * r.su2_matrix() * kc.a).norm());
      for (int i = 0; i < a.n(); ++i) worst_equiv = std::max(worst_equiv, std::abs(rk.u1[i] - r.u1[i]));
      const auto gc = random_complex_element(a.n(), rng);
      const auto cg = mu_complex(group_act(x, gc));
      worst_equiv = std::max(worst_equiv, (cg.sl2 - gc.a.inverse() * c.sl2 * gc.a).norm());
      for (int i = 0; i < a.n(); ++i) worst_equiv = std::max(worst_equiv, std::abs(cg.u1[i] - c.u1[i]));
    }
    // Stability against the symbolic classification, over every straightness pattern.
    for (std::uint32_t m = 0; m < (1u << a.n()); ++m) {
      const Subset straight(a.n(), m);
      for (bool p_zero_off : {false, true}) {
        const PointPQ y = random_straightness_point(a.n(), straight, p_zero_off, rng);
        const bool expect = !((p_zero_off || straight.is_full()) && is_long(a, straight));
        o.require(is_stable(a, y).stable == expect, "stability " + straight.to_string());
      }
    }
  }
  std::ostringstream os;
  os << "round trip " << worst_roundtrip << ", norm identity " << worst_norm << ", equivariance " << worst_equiv;
  o.require(worst_roundtrip <= kNumericTol && worst_norm <= kNumericTol && worst_equiv <= kNumericTol, os.str());
  if (o.pass) o.detail = os.str();
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  FILE* pipe = popen(("\"" HYPERPOLY_CLI_PATH "\" " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
  Outcome o;
  const auto first = run_cli("selftest --seed 42");
  const auto second = run_cli("selftest --seed 42");
  o.require(first.first == 0, "selftest exit " + std::to_string(first.first));
  o.require(!first.second.empty() && first.second == second.second, "selftest output differs between runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"genericity and short subsets", genericity_and_shorts},
      {"H*(X) Hilbert tables", konno_tables},
      {"equivariant freeness", equivariant_freeness},
      {"x -> 0 specialization", x_to_zero_specialization},
      {"claims suite", claims_suite},
      {"core component rings", core_component_rings},
      {"Euler fixed-point cross-check", euler_cross_checks},
      {"core geometry", core_geometry},
      {"moment-map numerics", moment_numerics},
      {"selftest determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
