#include <doctest.h>

#include "hstrata/rng.hpp"
#include "test_util.hpp"

using namespace tu;

TEST_CASE("hb_product") {
  const FieldSpec f = Q();
  const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
  SUBCASE("two degree-one points") {
    const HitchinPoint a(f, 2, {x1});
    const HitchinPoint b(f, 2, {x2});
    const HitchinPoint ab = hb_product(a, b);
    CHECK(ab.coeff(1) == x1 + x2);
    CHECK(ab.coeff(2) == x1 * x2);
  }
  SUBCASE("general degree-one formula v_1 = s_1 + t_1, v_2 = s_1 t_1") {
    const GradedPoly s1 = x1 + x2.scaled(sc(f, 3));
    const GradedPoly t1 = x1.scaled(sc(f, -2));
    const HitchinPoint ab = hb_product(HitchinPoint(f, 2, {s1}), HitchinPoint(f, 2, {t1}));
    CHECK(ab.coeff(1) == s1 + t1);
    CHECK(ab.coeff(2) == s1 * t1);
  }
  SUBCASE("zero tuples multiply to the zero tuple") {
    const HitchinPoint a(f, 2, {GradedPoly(f, 2), GradedPoly(f, 2)});
    const HitchinPoint b(f, 2, {GradedPoly(f, 2)});
    const HitchinPoint ab = hb_product(a, b);
    CHECK(ab.r() == 3);
    for (int i = 1; i <= 3; ++i) CHECK(ab.coeff(i).is_zero());
  }
}

TEST_CASE("hb_product is associative and commutative") {
  SplitMix64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const FieldSpec f = i % 2 == 0 ? Q() : F(5);
    const int d = 1 + static_cast<int>(rng.below(3));
    auto draw = [&]() {
      const int r = 1 + static_cast<int>(rng.below(3));
      std::vector<std::vector<long>> roots;
      for (int k = 0; k < r; ++k) {
        std::vector<long> c;
        for (int j = 0; j < d; ++j) c.push_back(rng.range(-3, 3));
        roots.push_back(std::move(c));
      }
      return from_roots(f, d, roots);
    };
    const HitchinPoint a = draw(), b = draw(), c = draw();
    CHECK(hb_product(a, b) == hb_product(b, a));
    CHECK(hb_product(hb_product(a, b), c) == hb_product(a, hb_product(b, c)));
  }
}

TEST_CASE("projective points normalize and multiply") {
  const FieldSpec f = Q();
  const GradedPoly x = var(f, 1, 0);
  SUBCASE("equality up to scalar") {
    const ProjHitchinPoint a(f, 1, sc(f, 2), {x.scaled(sc(f, 4))});
    const ProjHitchinPoint b(f, 1, sc(f, 1), {x.scaled(sc(f, 2))});
    CHECK(a == b);
  }
  SUBCASE("zero tuple is rejected") {
    CHECK_THROWS_AS(ProjHitchinPoint(f, 1, sc(f, 0), {GradedPoly(f, 1)}), Error);
  }
  SUBCASE("affine chart restriction recovers hb_product") {
    const HitchinPoint a = from_roots(f, 1, {{2}});
    const HitchinPoint b = from_roots(f, 1, {{3}, {5}});
    const ProjHitchinPoint p =
        proj_product(ProjHitchinPoint::from_affine(a), ProjHitchinPoint::from_affine(b));
    CHECK(p.in_affine_chart());
    CHECK(p.to_affine() == hb_product(a, b));
  }
  SUBCASE("worked boundary examples") {
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    const GradedPoly c1 = GradedPoly::constant(f, 1, one);
    const ProjHitchinPoint inf(f, 1, zero, {c1});
    const GradedPoly tau = GradedPoly::constant(f, 1, sc(f, 7));
    CHECK(proj_product(inf, ProjHitchinPoint(f, 1, one, {tau})) ==
          ProjHitchinPoint(f, 1, zero, {c1, tau}));
    CHECK(proj_product(inf, inf) == ProjHitchinPoint(f, 1, zero, {GradedPoly(f, 1), c1}));
    const ProjHitchinPoint pa(f, 1, one, {x.scaled(sc(f, 2))});
    const ProjHitchinPoint pb(f, 1, one, {x.scaled(sc(f, 3))});
    CHECK(proj_product(pa, pb) ==
          ProjHitchinPoint(f, 1, one, {x.scaled(sc(f, 5)), (x * x).scaled(sc(f, 6))}));
  }
}

TEST_CASE("total_split examples") {
  SUBCASE("constructed product splits") {
    const FieldSpec f = Q();
    const HitchinPoint s = from_roots(f, 2, {{1, 0}, {0, 1}});
    const SplitResult res = total_split(s, SplitConfig{5});
    REQUIRE(res.verdict == SplitVerdict::Split);
    RootMultiset want(f, 2);
    want.add(lin(f, {1, 0}));
    want.add(lin(f, {0, 1}));
    CHECK(*res.roots == want);
  }
  SUBCASE("repeated root") {
    const FieldSpec f = Q();
    const HitchinPoint s = from_roots(f, 2, {{1, 0}, {1, 0}});
    const SplitResult res = total_split(s, SplitConfig{5});
    REQUIRE(res.verdict == SplitVerdict::Split);
    RootMultiset want(f, 2);
    want.add(lin(f, {1, 0}), 2);
    CHECK(*res.roots == want);
  }
  SUBCASE("y^2 - x1 x2 does not split over F_3") {
    const FieldSpec f = F(3);
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    const HitchinPoint s(f, 2, {GradedPoly(f, 2), m});
    CHECK(total_split(s, SplitConfig{5}).verdict == SplitVerdict::NotSplit);
  }
  SUBCASE("y^2 - x1 x2 does not split over Q either") {
    const FieldSpec f = Q();
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    const HitchinPoint s(f, 2, {GradedPoly(f, 2), m});
    CHECK(total_split(s, SplitConfig{5}).verdict == SplitVerdict::NotSplit);
  }
  SUBCASE("zero draw budget forces inconclusive") {
    const FieldSpec f = Q();
    const HitchinPoint s = from_roots(f, 2, {{1, 0}, {0, 1}});
    SplitConfig cfg;
    cfg.max_retries = 0;
    CHECK(total_split(s, cfg).verdict == SplitVerdict::Inconclusive);
  }
  SUBCASE("degree one always splits") {
    const FieldSpec f = Q();
    const HitchinPoint s = from_roots(f, 3, {{1, -2, 3}});
    SplitConfig cfg;
    cfg.max_retries = 0;  // no sampling needed
    const SplitResult res = total_split(s, cfg);
    REQUIRE(res.verdict == SplitVerdict::Split);
    CHECK(res.roots->entries()[0].first == lin(f, {1, -2, 3}));
  }
}

TEST_CASE("split_profile examples") {
  SUBCASE("fully split") {
    const FieldSpec f = Q();
    const SplitProfile p = split_profile(from_roots(f, 2, {{1, 0}, {0, 1}}), SplitConfig{5});
    CHECK(p.linear_part.size() == 2);
    CHECK(p.residual_degree == 0);
    CHECK(p.residual_certified);
  }
  SUBCASE("linear factor times an irreducible quadratic over F_3") {
    const FieldSpec f = F(3);
    // (y - x1)(y^2 - x1 x2)
    const GradedPoly x1 = var(f, 2, 0), x2 = var(f, 2, 1);
    const HitchinPoint quad(f, 2, {GradedPoly(f, 2), -(x1 * x2)});
    const HitchinPoint s = hb_product(from_roots(f, 2, {{1, 0}}), quad);
    const SplitProfile p = split_profile(s, SplitConfig{5});
    CHECK(p.linear_part.size() == 1);
    CHECK(p.linear_part.entries()[0].first == lin(f, {1, 0}));
    CHECK(p.residual_degree == 2);
    CHECK(p.residual_certified);
  }
  SUBCASE("irreducible quadratic alone over F_3") {
    const FieldSpec f = F(3);
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    const SplitProfile p = split_profile(HitchinPoint(f, 2, {GradedPoly(f, 2), m}), SplitConfig{5});
    CHECK(p.linear_part.size() == 0);
    CHECK(p.residual_degree == 2);
    CHECK(p.residual_certified);
  }
  SUBCASE("rational residual is never certified") {
    const FieldSpec f = Q();
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    const SplitProfile p = split_profile(HitchinPoint(f, 2, {GradedPoly(f, 2), m}), SplitConfig{5});
    CHECK(p.residual_degree == 2);
    CHECK_FALSE(p.residual_certified);
  }
}

TEST_CASE("brute_split") {
  SUBCASE("y^2 - x^2 over F_3") {
    const FieldSpec f = F(3);
    const GradedPoly x = var(f, 1, 0);
    // roots x and 2x
    const HitchinPoint s(f, 1, {GradedPoly(f, 1), -(x * x)});
    const SplitResult res = brute_split(s);
    REQUIRE(res.verdict == SplitVerdict::Split);
    RootMultiset want(f, 1);
    want.add(lin(f, {1}));
    want.add(lin(f, {2}));
    CHECK(*res.roots == want);
  }
  SUBCASE("degree one") {
    const FieldSpec f = F(3);
    const SplitResult res = brute_split(from_roots(f, 2, {{1, 0}}));
    REQUIRE(res.verdict == SplitVerdict::Split);
    CHECK(res.roots->entries()[0].first == lin(f, {1, 0}));
  }
  SUBCASE("not split") {
    const FieldSpec f = F(3);
    const GradedPoly m = -(var(f, 2, 0) * var(f, 2, 1));
    CHECK(brute_split(HitchinPoint(f, 2, {GradedPoly(f, 2), m})).verdict ==
          SplitVerdict::NotSplit);
  }
  SUBCASE("bound and field guards") {
    const FieldSpec f101 = F(101);
    CHECK_THROWS_AS((void)brute_split(from_roots(f101, 2, {{1, 0}})), Error);
    CHECK_THROWS_AS((void)brute_split(from_roots(Q(), 1, {{1}})), Error);
  }
}

TEST_CASE("factor-product round trip with distinct products (small)") {
  SplitMix64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const FieldSpec f = i % 2 == 0 ? Q() : F(5);
    const int d = 1 + static_cast<int>(rng.below(3));
    const int r = 1 + static_cast<int>(rng.below(5));
    RootMultiset roots(f, d);
    for (int k = 0; k < r; ++k) {
      std::vector<Scalar> c;
      for (int j = 0; j < d; ++j) c.emplace_back(f, rng.range(-9, 9));
      roots.add(LinearForm(f, std::move(c)));
    }
    const SplitResult res = total_split(roots.product(), SplitConfig{rng.next()});
    REQUIRE(res.verdict == SplitVerdict::Split);
    CHECK(*res.roots == roots);
  }
}

TEST_CASE("distinct multisets give distinct products") {
  const FieldSpec f = Q();
  const HitchinPoint a = from_roots(f, 2, {{1, 0}, {0, 1}});
  const HitchinPoint b = from_roots(f, 2, {{1, 0}, {1, 0}});
  const HitchinPoint c = from_roots(f, 2, {{1, 1}, {0, 0}});
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
}

TEST_CASE("profile extracts exactly the linear part of mixed products") {
  SplitMix64 rng(61);
  for (int i = 0; i < 25; ++i) {
    const FieldSpec f = Q();
    const int d = 2 + static_cast<int>(rng.below(2));
    RootMultiset linear(f, d);
    const int nlin = static_cast<int>(rng.below(4));
    for (int k = 0; k < nlin; ++k) {
      std::vector<Scalar> c;
      for (int j = 0; j < d; ++j) c.emplace_back(f, rng.range(-6, 6));
      linear.add(LinearForm(f, std::move(c)));
    }
    // Irreducible quadratics y^2 - n x_a x_b (a != b) or y^2 - n x_a^2 with
    // n a non-square: no linear form squares to either.
    const int nquad = 1 + static_cast<int>(rng.below(2));
    YPoly acc = linear.size() > 0 ? linear.product().to_ypoly() : YPoly::one(f, d);
    for (int k = 0; k < nquad; ++k) {
      const long n = 2 + 2 * static_cast<long>(rng.below(3));  // 2, 4, 6... use squarefree-ish
      const long nn = (n == 4) ? 3 : n;
      const int a = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
      int b = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
      GradedPoly mono = var(f, d, a) * var(f, d, b);
      if (a == b) mono = var(f, d, a) * var(f, d, a);
      const HitchinPoint quad(f, d, {GradedPoly(f, d), mono.scaled(sc(f, -nn))});
      acc = acc * quad.to_ypoly();
    }
    const SplitProfile p = split_profile(HitchinPoint::from_ypoly(acc), SplitConfig{rng.next()});
    CHECK(p.linear_part == linear);
    CHECK(p.residual_degree == 2 * nquad);
    CHECK_FALSE(p.residual_certified);
    CHECK(total_split(HitchinPoint::from_ypoly(acc), SplitConfig{rng.next()}).verdict ==
          (nquad == 0 ? SplitVerdict::Split : SplitVerdict::NotSplit));
  }
}

TEST_CASE("high multiplicities and fractional roots split back") {
  const FieldSpec f = Q();
  SUBCASE("a fifth power") {
    RootMultiset roots(f, 2);
    roots.add(lin(f, {2, -3}), 5);
    const SplitResult res = total_split(roots.product(), SplitConfig{3});
    REQUIRE(res.verdict == SplitVerdict::Split);
    CHECK(*res.roots == roots);
  }
  SUBCASE("roots with denominators") {
    RootMultiset roots(f, 2);
    roots.add(LinearForm(f, {Scalar::parse(f, "1/2"), Scalar::parse(f, "-3/2")}));
    roots.add(LinearForm(f, {Scalar::parse(f, "2/3"), Scalar::parse(f, "5")}));
    roots.add(LinearForm(f, {Scalar::parse(f, "0"), Scalar::parse(f, "1/6")}), 2);
    const SplitResult res = total_split(roots.product(), SplitConfig{3});
    REQUIRE(res.verdict == SplitVerdict::Split);
    CHECK(*res.roots == roots);
  }
}

TEST_CASE("univariate_roots is complete with multiplicities") {
  const FieldSpec f = Q();
  // (y - 2)^2 (y + 1/2) y = y^4 - 7/2 y^3 + 2 y^2 + 2 y ... build by convolution.
  std::vector<Scalar> poly{Scalar::zero(f), Scalar::one(f)};  // y
  auto mul_root = [&](const Scalar& rho) {
    std::vector<Scalar> out(poly.size() + 1, Scalar::zero(f));
    for (size_t i = 0; i < poly.size(); ++i) {
      out[i + 1] = out[i + 1] + poly[i];
      out[i] = out[i] - rho * poly[i];
    }
    poly = out;
  };
  mul_root(sc(f, 2));
  mul_root(sc(f, 2));
  mul_root(Scalar::parse(f, "-1/2"));
  const UnivariateRoots roots = univariate_roots(poly, f);
  REQUIRE(roots.complete);
  CHECK(roots.total == 4);
  bool saw2 = false, sawhalf = false, saw0 = false;
  for (const auto& [rho, m] : roots.roots) {
    if (rho == sc(f, 2)) {
      CHECK(m == 2);
      saw2 = true;
    }
    if (rho == Scalar::parse(f, "-1/2")) {
      CHECK(m == 1);
      sawhalf = true;
    }
    if (rho.is_zero()) {
      CHECK(m == 1);
      saw0 = true;
    }
  }
  CHECK(saw2);
  CHECK(sawhalf);
  CHECK(saw0);
}
