#include <doctest.h>

#include "hstrata/harness.hpp"
#include "hstrata/higgs.hpp"
#include "test_util.hpp"

using namespace tu;

TEST_CASE("validate_higgs") {
  const FieldSpec f = Q();
  SUBCASE("commuting pair is accepted") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}}), mat(f, {{1, 1}, {0, 1}})});
    CHECK(theta.rank() == 2);
    CHECK(theta.dim() == 2);
  }
  SUBCASE("standard non-commuting pair is rejected with indices") {
    CHECK_THROWS_WITH_AS(
        (void)HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}}), mat(f, {{0, 0}, {1, 0}})}),
        "NotHiggs(1,2)", Error);
  }
  SUBCASE("a single component always passes") {
    CHECK(HiggsField::validated(f, {mat(f, {{3, 1}, {4, 1}})}).dim() == 1);
  }
}

TEST_CASE("power_traces examples") {
  const FieldSpec f = Q();
  const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
  SUBCASE("diagonal") {
    const auto theta = HiggsField::validated(f, {mat(f, {{1, 0}, {0, 0}}), mat(f, {{0, 0}, {0, 1}})});
    const PowerTraces p = power_traces(theta);
    CHECK(p.traces[0] == x1 + x2);
    CHECK(p.traces[1] == x1 * x1 + x2 * x2);
  }
  SUBCASE("nilpotent traces vanish") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}})});
    const PowerTraces p = power_traces(theta);
    CHECK(p.traces[0].is_zero());
    CHECK(p.traces[1].is_zero());
  }
  SUBCASE("upper triangular pair") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}}), mat(f, {{1, 1}, {0, 1}})});
    const PowerTraces p = power_traces(theta);
    CHECK(p.traces[0] == x2.scaled(sc(f, 2)));
    CHECK(p.traces[1] == (x2 * x2).scaled(sc(f, 2)));
  }
  SUBCASE("degrees are homogeneous") {
    const auto theta = HiggsField::validated(f, {mat(f, {{1, 2}, {3, 4}})});
    const PowerTraces p = power_traces(theta);
    CHECK(p.traces[0].is_homogeneous(1));
    CHECK(p.traces[1].is_homogeneous(2));
  }
}

TEST_CASE("char_poly examples") {
  const FieldSpec f = Q();
  const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
  SUBCASE("diagonal gives elementary symmetric coefficients") {
    const auto theta = HiggsField::validated(f, {mat(f, {{1, 0}, {0, 0}}), mat(f, {{0, 0}, {0, 1}})});
    const HitchinPoint s = char_poly(theta);
    CHECK(s.coeff(1) == x1 + x2);
    CHECK(s.coeff(2) == x1 * x2);
  }
  SUBCASE("nilpotent gives zero coefficients") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}})});
    const HitchinPoint s = char_poly(theta);
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2).is_zero());
  }
  SUBCASE("repeated eigenvalue pair") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}}), mat(f, {{1, 1}, {0, 1}})});
    const HitchinPoint s = char_poly(theta);
    CHECK(s.coeff(1) == x2.scaled(sc(f, 2)));
    CHECK(s.coeff(2) == x2 * x2);
  }
}

TEST_CASE("diagonal char poly matches elementary symmetric polynomials") {
  const FieldSpec f = Q();
  // diag(t_1, t_2, t_3) with t_i spanning distinct forms in 2 variables.
  const auto theta = HiggsField::validated(
      f, {mat(f, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), mat(f, {{4, 0, 0}, {0, 5, 0}, {0, 0, 6}})});
  const HitchinPoint s = char_poly(theta);
  const HitchinPoint expect = from_roots(f, 2, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(s == expect);
}

TEST_CASE("newton_convert") {
  const FieldSpec f = Q();
  const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
  SUBCASE("power sums of two variables") {
    const std::vector<GradedPoly> p{x1 + x2, x1 * x1 + x2 * x2};
    const auto e = newton_convert(p, NewtonDirection::PowerToElementary);
    CHECK(e[0] == x1 + x2);
    CHECK(e[1] == x1 * x2);
    CHECK(newton_convert(e, NewtonDirection::ElementaryToPower) == p);
  }
  SUBCASE("zero tuple") {
    const std::vector<GradedPoly> p{GradedPoly(f, 2), GradedPoly(f, 2)};
    const auto e = newton_convert(p, NewtonDirection::PowerToElementary);
    CHECK(e[0].is_zero());
    CHECK(e[1].is_zero());
  }
  SUBCASE("characteristic too small") {
    const FieldSpec f3 = F(3);
    const std::vector<GradedPoly> p{GradedPoly(f3, 1), GradedPoly(f3, 1), GradedPoly(f3, 1)};
    CHECK_THROWS_AS((void)newton_convert(p, NewtonDirection::PowerToElementary), Error);
  }
}

TEST_CASE("direct_sum") {
  const FieldSpec f = Q();
  SUBCASE("diagonal blocks concatenate") {
    const auto a = HiggsField::validated(f, {mat(f, {{1}})});
    const auto b = HiggsField::validated(f, {mat(f, {{2}})});
    const auto sum = direct_sum(a, b);
    CHECK(sum.rank() == 2);
    CHECK(sum.component(0) == mat(f, {{1, 0}, {0, 2}}));
  }
  SUBCASE("rank zero is neutral") {
    const auto theta = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}})});
    CHECK(direct_sum(theta, HiggsField::empty(f, 1)) == theta);
    CHECK(direct_sum(HiggsField::empty(f, 1), theta) == theta);
  }
  SUBCASE("block char poly multiplies") {
    const auto nil = HiggsField::validated(f, {mat(f, {{0, 1}, {0, 0}})});
    const auto diag = HiggsField::validated(f, {mat(f, {{1}})});
    const HitchinPoint s = char_poly(direct_sum(nil, diag));
    // y^2 (y - x_1): s_1 = x_1, s_2 = 0, s_3 = 0.
    CHECK(s.coeff(1) == var(f, 1, 0));
    CHECK(s.coeff(2).is_zero());
    CHECK(s.coeff(3).is_zero());
    CHECK(s == hb_product(char_poly(nil), char_poly(diag)));
  }
  SUBCASE("mismatched dims are rejected") {
    const auto a = HiggsField::validated(f, {mat(f, {{1}})});
    const auto b = HiggsField::validated(f, {mat(f, {{1}}), mat(f, {{2}})});
    CHECK_THROWS_AS((void)direct_sum(a, b), Error);
  }
}

TEST_CASE("Berkowitz agrees with Faddeev-LeVerrier on commuting tuples") {
  for (int i = 0; i < 25; ++i) {
    GenConfig cfg;
    cfg.seed = 900 + static_cast<uint64_t>(i);
    cfg.height = 3;
    const auto gen = gen_commuting_tuple(cfg, i % 2 == 0 ? TupleMode::Diagonalizable
                                                         : TupleMode::Companion);
    const HitchinPoint sb = char_poly(gen.theta);
    CHECK(sb == char_poly_faddeev(gen.theta));
    for (int k = 1; k <= sb.r(); ++k) CHECK(sb.coeff(k).is_homogeneous(k));
    const PowerTraces p = power_traces(gen.theta);
    CHECK(newton_convert(p.traces, NewtonDirection::PowerToElementary) == sb.coeffs());
  }
}

TEST_CASE("char_poly works over small prime fields where the cross-check cannot") {
  const FieldSpec f3 = F(3);
  const auto theta = HiggsField::validated(
      f3, {mat(f3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}), mat(f3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  const HitchinPoint s = char_poly(theta);
  CHECK(s == from_roots(f3, 2, {{1, 2}, {2, 1}, {0, 1}}));
  CHECK_THROWS_AS((void)char_poly_faddeev(theta), Error);
}
