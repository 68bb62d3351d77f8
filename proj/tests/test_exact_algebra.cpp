#include <doctest.h>

#include "hstrata/rng.hpp"
#include "hstrata/ypoly.hpp"
#include "test_util.hpp"

using namespace tu;

namespace {

GradedPoly random_poly(SplitMix64& rng, const FieldSpec& f, int d, int max_deg) {
  GradedPoly p(f, d);
  const int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) e[static_cast<size_t>(i)] = static_cast<uint32_t>(rng.below(static_cast<uint64_t>(max_deg + 1)));
    p.add_term(e, Scalar(f, rng.range(-5, 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::parse(Q(), "2/4").str() == "1/2");
  CHECK(Scalar::parse(Q(), "-6/4").str() == "-3/2");
  CHECK(Scalar(F(7), -3).str() == "4");
  CHECK(Scalar::parse(F(5), "7").str() == "2");
  CHECK((Scalar(F(5), 2) / Scalar(F(5), 3)).str() == "4");  // 2 * 3^{-1} = 2 * 2
  CHECK_THROWS_AS(Scalar(F(5), 0).inverse(), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);
  CHECK(FieldSpec::parse("Fp:11").characteristic() == 11);
  CHECK_THROWS_AS((void)(Scalar(Q(), 1) + Scalar(F(3), 1)), Error);
}

TEST_CASE("poly_eval examples") {
  const FieldSpec f = Q();
  const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
  CHECK((x1 * x2).eval(pt(f, {2, 3})) == sc(f, 6));
  CHECK((x1 + x2).eval(pt(f, {0, 0})).is_zero());
  const GradedPoly p = x1 * x1 - x2;
  const std::vector<Scalar> half{Scalar::parse(f, "1/2"), Scalar::parse(f, "1/4")};
  CHECK(p.eval(half).is_zero());
  CHECK_THROWS_AS(p.eval(pt(f, {1})), Error);
  CHECK_THROWS_AS(p.eval(pt(F(3), {1, 1})), Error);
}

TEST_CASE("poly_eval is a ring homomorphism") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FieldSpec f = i % 2 == 0 ? Q() : F(5);
    const int d = 1 + static_cast<int>(rng.below(3));
    const GradedPoly a = random_poly(rng, f, d, 3);
    const GradedPoly b = random_poly(rng, f, d, 3);
    std::vector<Scalar> point;
    for (int j = 0; j < d; ++j) point.emplace_back(f, rng.range(-4, 4));
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(13);
  for (int i = 0; i < 60; ++i) {
    const FieldSpec f = i % 2 == 0 ? Q() : F(7);
    const int d = 1 + static_cast<int>(rng.below(3));
    const GradedPoly a = random_poly(rng, f, d, 2);
    const GradedPoly b = random_poly(rng, f, d, 2);
    const GradedPoly c = random_poly(rng, f, d, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("homogeneity is preserved by products") {
  SplitMix64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const FieldSpec f = Q();
    const int d = 1 + static_cast<int>(rng.below(3));
    // Build homogeneous factors from linear forms.
    GradedPoly a = GradedPoly::constant(f, d, Scalar::one(f));
    GradedPoly b = GradedPoly::constant(f, d, Scalar::one(f));
    const int da = static_cast<int>(rng.below(3)), db = static_cast<int>(rng.below(3));
    for (int k = 0; k < da; ++k) {
      std::vector<Scalar> c;
      for (int j = 0; j < d; ++j) c.emplace_back(f, rng.range(-3, 3));
      a = a * LinearForm(f, c).to_poly();
    }
    for (int k = 0; k < db; ++k) {
      std::vector<Scalar> c;
      for (int j = 0; j < d; ++j) c.emplace_back(f, rng.range(-3, 3));
      b = b * LinearForm(f, c).to_poly();
    }
    CHECK(a.is_homogeneous(a.is_zero() ? 0 : da));
    CHECK((a * b).is_homogeneous((a * b).is_zero() ? 0 : da + db));
  }
}

TEST_CASE("ypoly_divrem examples") {
  const FieldSpec f = Q();
  const LinearForm x1 = lin(f, {1, 0}), x2 = lin(f, {0, 1});

  SUBCASE("constructed product divides") {
    const HitchinPoint s = from_roots(f, 2, {{1, 0}, {0, 1}});
    const YDivRem dr = ypoly_divrem(s.to_ypoly(), x1);
    CHECK(dr.remainder.is_zero());
    CHECK(dr.quotient == YPoly::linear_root(x2));
  }
  SUBCASE("non-divisor leaves the synthetic remainder") {
    // y^2 - x1 x2, stored as s_1 = 0, s_2 = -x1 x2.
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    const HitchinPoint s(f, 2, {GradedPoly(f, 2), m});
    const YDivRem dr = ypoly_divrem(s.to_ypoly(), x1);
    const GradedPoly expect = var(f, 2, 0) * var(f, 2, 0) - var(f, 2, 0) * var(f, 2, 1);
    CHECK(dr.remainder == expect);
  }
  SUBCASE("degree one") {
    const HitchinPoint s = from_roots(f, 2, {{1, 0}});
    const YDivRem dr = ypoly_divrem(s.to_ypoly(), x1);
    CHECK(dr.remainder.is_zero());
    CHECK(dr.quotient.degree() == 0);
  }
}

TEST_CASE("ypoly_divrem identity on random inputs") {
  SplitMix64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const FieldSpec f = i % 2 == 0 ? Q() : F(5);
    const int d = 1 + static_cast<int>(rng.below(3));
    const int r = 1 + static_cast<int>(rng.below(4));
    std::vector<std::vector<long>> roots;
    for (int k = 0; k < r; ++k) {
      std::vector<long> c;
      for (int j = 0; j < d; ++j) c.push_back(rng.range(-4, 4));
      roots.push_back(std::move(c));
    }
    const YPoly s = from_roots(f, d, roots).to_ypoly();
    std::vector<Scalar> tc;
    for (int j = 0; j < d; ++j) tc.emplace_back(f, rng.range(-4, 4));
    const LinearForm t(f, tc);
    const YDivRem dr = ypoly_divrem(s, t);
    YPoly recomposed = YPoly::linear_root(t) * dr.quotient;
    std::vector<GradedPoly> coeffs = recomposed.coeffs();
    coeffs[0] = coeffs[0] + dr.remainder;
    CHECK(YPoly(f, d, coeffs) == s);
  }
}

TEST_CASE("interpolate_linear examples") {
  const FieldSpec f = Q();
  SUBCASE("unit vectors") {
    const LinearForm got = interpolate_linear({{pt(f, {1, 0}), sc(f, 1)}, {pt(f, {0, 1}), sc(f, 0)}}, f, 2);
    CHECK(got == lin(f, {1, 0}));
  }
  SUBCASE("redundant consistent sample") {
    const LinearForm got = interpolate_linear({{pt(f, {1}), sc(f, 2)}, {pt(f, {2}), sc(f, 4)}}, f, 1);
    CHECK(got == lin(f, {2}));
  }
  SUBCASE("collinear points are rank deficient") {
    CHECK_THROWS_WITH_AS(
        (void)interpolate_linear({{pt(f, {1, 0}), sc(f, 1)}, {pt(f, {2, 0}), sc(f, 1)}}, f, 2),
        "sample points do not span", Error);
  }
  SUBCASE("inconsistent samples") {
    CHECK_THROWS_WITH_AS(
        (void)interpolate_linear({{pt(f, {1}), sc(f, 1)}, {pt(f, {2}), sc(f, 3)}}, f, 1),
        "no linear form fits the samples", Error);
  }
}
