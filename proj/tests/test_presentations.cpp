#include <gtest/gtest.h>

#include "hyperpoly/presentations.hpp"

using namespace hyperpoly;

namespace {

using Dims = std::vector<long long>;

Polynomial b(const RingPtr& r, int i) { return Polynomial::variable(r, "b_" + std::to_string(i)); }

const std::vector<std::vector<const char*>> kBattery = {
    {"1", "2", "2"},          {"1", "1", "1", "2"},     {"1", "2", "3", "3"},
    {"2", "2", "2", "3"},     {"1", "1", "3", "3", "3"}, {"1", "1", "1", "1", "1"},
    {"1", "2", "2", "3", "3"}, {"2", "3", "4", "5", "7"}, {"1", "1", "1", "1", "1", "2"},
    {"1", "1", "1", "1", "2", "3"}, {"1", "2", "3", "4", "5", "6"},
    {"2", "2", "2", "2", "2", "1"}};

Alpha make(const std::vector<const char*>& v) {
  std::vector<std::string> s(v.begin(), v.end());
  return validate_alpha(s);
}

// Oracle: Konno dims are sum_{k<=d} C(n-1,k) below degree n-2.
Dims konno_closed_form(int n) {
  Dims out;
  long long acc = 0, binom = 1;
  for (int d = 0; d < n - 2; ++d) {
    acc += binom;
    binom = binom * (n - 1 - d) / (d + 1);
    out.push_back(acc);
  }
  return out;
}

// Oracle: chi(M_S) from the reduced polygon {alpha_j : j in S^c} u {sum_S}.
long long euler_polygon_subspace(const Alpha& a, const Subset& s) {
  std::vector<Rational> l;
  for (int j : s.complement().elements()) l.push_back(a.length(j));
  l.push_back(a.sum(s));
  if (l.size() < 3) return 0;
  const Alpha r = Alpha::from_rationals(l);
  const auto konno = betti(konno_ideal(r)).euler();
  long long fixed = 0;
  for (const auto& t : core_shorts(r)) fixed += t.size() - 1;
  // An empty polygon space has empty Konno ring only when some edge is long.
  for (int i = 1; i <= r.n(); ++i)
    if (is_long(r, Subset::of(r.n(), {i}))) return 0;
  return konno - fixed;
}

long long count_short_supersets(const Alpha& a, const Subset& s) {
  long long c = 0;
  for (const auto& t : enumerate_shorts(a, 0))
    if (s.is_subset_of(t)) ++c;
  return c;
}

}  // namespace

TEST(Konno, Examples) {
  EXPECT_EQ(betti(konno_ideal(validate_alpha({"1", "1", "3", "3", "3"}))).trimmed(),
            (Dims{1, 5, 11}));
  EXPECT_EQ(betti(konno_ideal(validate_alpha({"1", "1", "3", "3", "3"}))).euler(), 17);
  EXPECT_EQ(betti(konno_ideal(validate_alpha({"1", "1", "1", "2"}))).trimmed(), (Dims{1, 4}));
  EXPECT_EQ(betti(konno_ideal(validate_alpha({"1", "2", "2"}))).trimmed(), (Dims{1}));
  EXPECT_EQ(betti(konno_ideal(validate_alpha({"1", "1", "3", "3", "3"}))).poincare(),
            "1 + 5t^2 + 11t^4");
}

TEST(Konno, ClosedFormAndTopDegree) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    auto t = betti(konno_ideal(a)).trimmed();
    EXPECT_EQ(t, konno_closed_form(a.n())) << a.to_string();
    if (a.n() >= 4) {
      EXPECT_EQ(t[a.n() - 3], static_cast<long long>(core_shorts(a).size()) + 1);
    }
  }
}

TEST(MainJ, Generators) {
  auto a = validate_alpha({"1", "1", "1", "2"});
  auto j = equivariant_ideal(a);
  EXPECT_EQ(j.ideal.generators().size(), 11u);
  for (std::size_t i = 4; i < 11; ++i) EXPECT_EQ(j.ideal.generators()[i].degree(), 2);
  EXPECT_EQ(betti(j, 4).dims, (Dims{1, 5, 5, 5, 5}));

  auto a5 = validate_alpha({"1", "1", "3", "3", "3"});
  auto r = c_ring(5, true);
  auto c = [&](int i) { return Polynomial::variable(r, "c_" + std::to_string(i)); };
  auto x = Polynomial::variable(r, "x");
  EXPECT_EQ(equivariant_generator(r, Subset::of(5, {1})), (c(3) + c(2)) * (c(4) + c(2)) * (c(5) + c(2)));
  EXPECT_EQ(equivariant_generator(r, Subset::of(5, {1, 2})), (c(4) + c(3)) * (c(5) + c(3)) * (c(2) + x));
  (void)a5;
}

TEST(MainJ, FreenessAndSpecializationOnBattery) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    auto rep = freeness_check(a);
    EXPECT_TRUE(rep.free) << a.to_string();
    auto img = x_to_zero(equivariant_ideal(a));
    auto konno = konno_ideal(a);
    auto cmp = ideal_slices_equal(img.ideal, konno.ideal, a.n() - 2);
    EXPECT_TRUE(cmp.equal) << a.to_string() << " " << cmp.detail;
  }
}

TEST(MainJ, MutatedIsNotFree) {
  auto a = validate_alpha({"1", "1", "1", "2"});
  auto j = equivariant_ideal(a);
  auto gens = j.ideal.generators();
  gens.pop_back();
  Presentation mutated{Provenance::Derived, a, std::nullopt, GradedIdeal(j.ring(), gens)};
  auto rep = freeness_check(mutated, konno_ideal(a), a.n());
  EXPECT_FALSE(rep.free);
  EXPECT_EQ(rep.first_divergence, 2);
}

TEST(Core, FamilyThreeMinimal) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto r = detail::completing_sets(a, Subset::of(5, {1, 2}), false);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], Subset::of(5, {3, 4}));
  EXPECT_EQ(r[1], Subset::of(5, {3, 5}));
  EXPECT_EQ(r[2], Subset::of(5, {4, 5}));
}

TEST(Core, FamilyFourExample) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto j = core_equivariant_ideal(a, Subset::of(5, {1, 2}));
  auto r = j.ring();
  auto x = Polynomial::variable(r, "x");
  auto expect = (b(r, 1) + x) * (b(r, 1) - b(r, 3) - b(r, 4));
  bool found = false;
  for (const auto& g : j.ideal.generators()) found = found || g == expect;
  EXPECT_TRUE(found);
}

TEST(Core, Errors) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto code = [&](const Subset& s) {
    try {
      core_ordinary_ideal(a, s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ClaimViolation;
  };
  EXPECT_EQ(code(Subset::of(5, {3, 4})), ErrorCode::NotShort);
  EXPECT_EQ(code(Subset::of(5, {1})), ErrorCode::SubsetTooSmall);
  EXPECT_EQ(code(Subset::of(5, {2, 3})), ErrorCode::RequiresOneInS);
}

TEST(Ordcore, WorkedExamples) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  EXPECT_EQ(betti(core_ordinary_ideal(a, Subset::of(5, {1, 2}))).trimmed(), (Dims{1, 4, 1}));
  EXPECT_EQ(betti(core_ordinary_ideal(a, Subset::of(5, {1, 2}))).poincare(), "1 + 4t^2 + t^4");
  EXPECT_EQ(betti(core_ordinary_ideal(a, Subset::of(5, {1, 3}))).trimmed(), (Dims{1, 2, 1}));
  EXPECT_EQ(betti(core_ordinary_ideal(a, Subset::of(5, {1, 2, 3}))).trimmed(), (Dims{1, 1, 1}));
}

TEST(Ordcore, AgainRelations) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto pres = core_ordinary_ideal(a, Subset::of(5, {1, 2}));
  auto r = pres.ring();
  std::vector<Polynomial> listed;
  for (int j = 3; j <= 5; ++j) listed.push_back(b(r, j) * (b(r, 1) - b(r, j)));
  listed.push_back(b(r, 3) * b(r, 4));
  listed.push_back(b(r, 3) * b(r, 5));
  listed.push_back(b(r, 4) * b(r, 5));
  listed.push_back(b(r, 1) * (b(r, 1) - b(r, 3) - b(r, 4)));
  listed.push_back(b(r, 1) * (b(r, 1) - b(r, 3) - b(r, 5)));
  listed.push_back(b(r, 1) * (b(r, 1) - b(r, 4) - b(r, 5)));
  listed.push_back(b(r, 1) - b(r, 2));
  EXPECT_TRUE(ideal_slices_equal(pres.ideal, GradedIdeal(r, listed), 4).equal);
  GradedQuotient q(pres.ideal);
  EXPECT_TRUE(q.normal_form(b(r, 1) * (b(r, 1) - b(r, 3) - b(r, 4))).is_zero());
}

TEST(Ordcore, ThirdAndProjectiveSliceEquivalence) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto third = core_ordinary_ideal(a, Subset::of(5, {1, 3}));
  auto r = third.ring();
  // Eliminated variables: b_3 = b_1; b_4, b_5 killed by family 3.
  GradedIdeal expect(r, {b(r, 1) * b(r, 1), b(r, 2) * (b(r, 1) - b(r, 2)), b(r, 3) - b(r, 1),
                         b(r, 4), b(r, 5)});
  EXPECT_TRUE(ideal_slices_equal(third.ideal, expect, 5).equal);

  auto proj = core_ordinary_ideal(a, Subset::of(5, {1, 2, 3}));
  auto pr = proj.ring();
  GradedIdeal pexpect(pr, {pow(b(pr, 1), 3), b(pr, 2) - b(pr, 1), b(pr, 3) - b(pr, 1), b(pr, 4),
                           b(pr, 5)});
  EXPECT_TRUE(ideal_slices_equal(proj.ideal, pexpect, 5).equal);
}

TEST(Ordcore, MaximalShortIsProjectiveOnBattery) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    for (const auto& s : core_shorts(a)) {
      if (!s.contains(1)) continue;
      bool maximal = true;
      for (int j : s.complement().elements()) maximal = maximal && is_long(a, s.with(j));
      if (!maximal) continue;
      Dims expect(a.n() - 2, 1);
      EXPECT_EQ(betti(core_ordinary_ideal(a, s)).trimmed(), expect) << a.to_string() << s.to_string();
    }
  }
}

TEST(Eqcore, FreenessAndSpecialization) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    for (const auto& s : core_shorts(a)) {
      if (!s.contains(1)) continue;
      EXPECT_TRUE(freeness_check(a, s).free) << a.to_string() << s.to_string();
      auto img = x_to_zero(core_equivariant_ideal(a, s));
      EXPECT_TRUE(ideal_slices_equal(img.ideal, core_ordinary_ideal(a, s).ideal, a.n() - 1).equal);
    }
  }
}

TEST(Eqcore, AllRFlagGivesSameSlices) {
  auto a = validate_alpha({"1", "1", "1", "1", "2", "3"});
  for (const auto& s : core_shorts(a)) {
    if (!s.contains(1)) continue;
    EXPECT_TRUE(ideal_slices_equal(core_equivariant_ideal(a, s).ideal,
                                   core_equivariant_ideal(a, s, true).ideal, 6)
                    .equal);
  }
}

// Families 1-3 alone: the monomial basis count gives the Hilbert function.
TEST(Ordcore, FamiliesOneToThreeBasis) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    for (const auto& s : core_shorts(a)) {
      if (!s.contains(1)) continue;
      auto pres = core_ordinary_ideal(a, s);
      std::vector<Polynomial> gens;
      const auto all = detail::completing_sets(a, s, false).size();
      const std::size_t n13 = (s.size() - 1) + (a.n() - s.size()) + all;
      gens.assign(pres.ideal.generators().begin(), pres.ideal.generators().begin() + n13);
      auto t = hilbert_function(GradedIdeal(pres.ring(), gens), a.n());
      EXPECT_EQ(t, families_one_to_three_closed_form(a, s, a.n())) << a.to_string() << s.to_string();
    }
  }
}

TEST(Pols, Examples) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  EXPECT_EQ(betti(x_to_zero(polygon_subspace_kernel(a, Subset::of(5, {1, 2})))).trimmed(),
            (Dims{1, 1}));
  EXPECT_EQ(betti(x_to_zero(polygon_subspace_kernel(a, Subset::of(5, {1, 2, 3})))).euler(), 1);
  EXPECT_EQ(betti(x_to_zero(polygon_subspace_kernel(a, Subset::of(5, {1, 3})))).euler(), 2);
  auto b4 = validate_alpha({"1", "1", "1", "2"});
  EXPECT_EQ(betti(x_to_zero(polygon_subspace_kernel(b4, Subset::of(4, {1})))).euler(), 2);
}

TEST(Pols, VerbatimPrefactorCollapsesToOrdcore) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto s = Subset::of(5, {1, 2});
  auto verb = x_to_zero(polygon_subspace_kernel(a, s, true));
  auto ord = core_ordinary_ideal(a, s);
  EXPECT_EQ(betti(verb).euler(), 6);
  EXPECT_EQ(betti(verb), betti(ord));
}

TEST(Pols, EulerMatchesReducedPolygonOracle) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    for (const auto& s : enumerate_shorts(a, 1)) {
      if (!s.contains(1)) continue;
      EXPECT_EQ(betti(x_to_zero(polygon_subspace_kernel(a, s))).euler(),
                euler_polygon_subspace(a, s))
          << a.to_string() << s.to_string();
    }
  }
}

TEST(Euler, FixedPointIdentities) {
  for (const auto& v : kBattery) {
    auto a = make(v);
    long long fixed = 0;
    for (const auto& s : core_shorts(a)) fixed += s.size() - 1;
    const long long chi_m = betti(x_to_zero(polygon_subspace_kernel(a, Subset::of(a.n(), {1})))).euler();
    EXPECT_EQ(betti(konno_ideal(a)).euler(), chi_m + fixed) << a.to_string();
    for (const auto& s : core_shorts(a)) {
      if (!s.contains(1)) continue;
      EXPECT_EQ(betti(core_ordinary_ideal(a, s)).euler(),
                euler_polygon_subspace(a, s) + (s.size() - 1) * count_short_supersets(a, s));
    }
  }
}

TEST(Relabel, HilbertTablesInvariant) {
  auto a = validate_alpha({"1", "2", "2", "3", "3"});
  for (const auto& s : core_shorts(a)) {
    auto rl = relabel_to_contain_one(a, s);
    auto base = betti(core_ordinary_ideal(rl.alpha, rl.s));
    // A further transposition of two indices outside S leaves the table fixed.
    auto sc = rl.s.complement().elements();
    if (sc.size() < 2) continue;
    Relabeling swap = Relabeling::identity(a.n());
    std::swap(swap.perm[sc[0] - 1], swap.perm[sc[1] - 1]);
    EXPECT_EQ(betti(core_ordinary_ideal(swap.apply(rl.alpha), swap.apply(rl.s))), base);
  }
}

TEST(IntersectionForm, Again) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto r = b_ring(5, false);
  auto f = intersection_form(a, Subset::of(5, {1, 2}),
                             {b(r, 1) - b(r, 3) - b(r, 4) - b(r, 5), b(r, 3), b(r, 4), b(r, 5)});
  EXPECT_EQ(f.gram, Matrix::diagonal({1, -1, -1, -1}));
  EXPECT_EQ(f.normalizing_index, 3);
  EXPECT_EQ(f.blowup_points, 3);
  EXPECT_TRUE(f.normalized);
}

// Normalization -b_1 b_2 = 1 (j = 2) forces (b_1 - b_2)^2 = 1 and b_2^2 = -1.
TEST(IntersectionForm, ThirdUnderStatedNormalization) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto r = b_ring(5, false);
  auto f = intersection_form(a, Subset::of(5, {1, 3}), {b(r, 1) - b(r, 2), b(r, 2)});
  EXPECT_EQ(f.normalizing_index, 2);
  EXPECT_EQ(f.gram, Matrix::diagonal({1, -1}));
  EXPECT_EQ(f.blowup_points, 1);
}

TEST(IntersectionForm, Errors) {
  auto a = validate_alpha({"1", "1", "3", "3", "3"});
  auto r = b_ring(5, false);
  auto code = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ClaimViolation;
  };
  EXPECT_EQ(code([&] { intersection_form(a, Subset::of(5, {1, 2}), {b(r, 3), b(r, 3)}); }),
            ErrorCode::BasisNotIndependent);
  auto a6 = validate_alpha({"1", "1", "1", "1", "2", "3"});
  auto r6 = b_ring(6, false);
  EXPECT_EQ(code([&] { intersection_form(a6, Subset::of(6, {1, 2}), {b(r6, 1)}); }),
            ErrorCode::NotASurface);
  EXPECT_EQ(code([&] {
              intersection_form(a, Subset::of(5, {1, 2, 3}), {b(r, 1)}, IntersectionMode::Normalized);
            }),
            ErrorCode::NotASurface);
  auto f = intersection_form(a, Subset::of(5, {1, 2, 3}), {b(r, 1)});
  EXPECT_FALSE(f.normalized);
  EXPECT_TRUE(f.warning.has_value());
  EXPECT_NE(f.gram(0, 0), 0);
}
