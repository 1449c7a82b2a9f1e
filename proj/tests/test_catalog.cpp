#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qserre/catalog.hpp"

using namespace qserre;

TEST_CASE("catalog builds validate") {
  const Catalog cat = Catalog::build();
  SECTION("confluence and Serre hold by construction") {
    for (const char* n : {"u", "gru", "b4", "b3", "b2", "q4", "ugeq0", "vcheck"})
      REQUIRE(cat.by_name(n) != nullptr);
  }
  SECTION("invertibility flags along the chain") {
    REQUIRE(cat.b4.spec.invertible(0));
    REQUIRE_FALSE(cat.b4.spec.invertible(1));
    REQUIRE(cat.b3.spec.invertible(1));
    REQUIRE_FALSE(cat.b3.spec.invertible(2));
    REQUIRE(cat.b2.spec.invertible(2));
    REQUIRE_FALSE(cat.b2.spec.invertible(3));
    for (int i = 0; i < 4; ++i) REQUIRE(cat.q4.spec.invertible(i));
  }
  SECTION("B4 monomials may carry X1^-1 but not X2^-1") {
    REQUIRE_NOTHROW(element_var(cat.b4.spec, 0, -1));
    REQUIRE_THROWS_AS(element_var(cat.b4.spec, 1, -1), std::invalid_argument);
  }
  SECTION("Serre relators vanish in every chain algebra and under the embedding") {
    for (const NamedAlgebra* alg : {&cat.u, &cat.b4, &cat.b3, &cat.b2, &cat.q4}) {
      const auto res = serre_residuals(alg->spec, alg->e1, alg->e2);
      REQUIRE(res[0].is_zero());
      REQUIRE(res[1].is_zero());
    }
  }
  SECTION("named elements registered for the CLI grammar") {
    REQUIRE(cat.u.parse("Zp") == element_Zprime(cat.u));
    REQUIRE(cat.u.parse("X1 W - s^4 W X1") == cat.u.parse("Zp"));
    REQUIRE(cat.u.parse("lambda").scalar_value() == lambda_value());
  }
}

TEST_CASE("U presentation against the definition") {
  const NamedAlgebra u = build_u();
  SECTION("both Serre relators vanish on (X1, X4)") {
    const auto res = serre_residuals(u.spec, u.e1, u.e2);
    REQUIRE(res[0].is_zero());
    REQUIRE(res[1].is_zero());
  }
  SECTION("X4 X2 - s^-2 X2 X4 normalizes to X3") {
    const Element lhs = mul(u.spec, element_var(u.spec, 3), element_var(u.spec, 1)) -
                        mul(u.spec, element_var(u.spec, 1), element_var(u.spec, 3))
                            .scaled(RatF::s(-2));
    REQUIRE(lhs == element_var(u.spec, 2));
  }
}

TEST_CASE("graded algebra") {
  const NamedAlgebra gru = build_gr_u();
  SECTION("X4 X2 has no X3 correction") {
    const Element prod = mul(gru.spec, element_var(gru.spec, 3), element_var(gru.spec, 1));
    Element expect;
    expect.add_term({0, 1, 0, 1}, RatF::s(-2));
    REQUIRE(prod == expect);
  }
}

TEST_CASE("W and Z'") {
  const NamedAlgebra u = build_u();
  const Element W = element_W(u), Z = element_Zprime(u);
  SECTION("shapes and weights") {
    REQUIRE(is_homogeneous(u.spec, W) == std::array<int, 2>{1, 2});
    REQUIRE(is_homogeneous(u.spec, Z) == std::array<int, 2>{2, 2});
  }
  SECTION("Z' = X1 W - s^4 W X1 by definition") {
    const Element x1 = element_var(u.spec, 0);
    REQUIRE(Z == mul(u.spec, x1, W) - mul(u.spec, W, x1).scaled(RatF::s(4)));
  }
  SECTION("all eight identities hold") {
    for (const auto& check : verify_w_identities(u)) {
      INFO(check.id);
      REQUIRE(check.ok());
    }
  }
  SECTION("specific identities from the statement") {
    const AlgebraSpec& S = u.spec;
    const Element X1 = element_var(S, 0), X2 = element_var(S, 1);
    REQUIRE((mul(S, X2, W) - mul(S, W, X2).scaled(RatF::s(2))).is_zero());
    const Element res = mul(S, X1, W) - mul(S, W, X1).scaled(RatF::rs(2, 2)) -
                        mul(S, X2, X2).scaled(RatF(1) - RatF::rs(-1, 1));
    REQUIRE(res.is_zero());
  }
  SECTION("they agree with the free-algebra expansion") {
    const FreeImages im;
    REQUIRE(to_pbw(u.spec, im.W, u.e1, u.e2) == W);
    REQUIRE(to_pbw(u.spec, im.Zp, u.e1, u.e2) == Z);
  }
}

TEST_CASE("embedding into the quantum torus") {
  const Catalog cat = Catalog::build();
  const Morphism& I = cat.I;
  SECTION("images as stated") {
    REQUIRE(I.images[0] == element_var(cat.q4.spec, 0));
    REQUIRE(I.images[1] == element_var(cat.q4.spec, 1));
    REQUIRE(I.images[2] == element_var(cat.q4.spec, 2));
    REQUIRE(I.images[3].size() == 3);
  }
  SECTION("relation preservation, including both Serre relators") {
    REQUIRE(I.verify().empty());
  }
  SECTION("image of relation (4): T1 I(X4) - r^2 I(X4) T1 = T2") {
    const AlgebraSpec& Q = cat.q4.spec;
    const Element lhs = mul(Q, element_var(Q, 0), I.images[3]) -
                        mul(Q, I.images[3], element_var(Q, 0)).scaled(RatF::r(2));
    REQUIRE(lhs == element_var(Q, 1));
  }
  SECTION("image of relation (5): T2 I(X4) - s^2 I(X4) T2 = -s^2 T3") {
    const AlgebraSpec& Q = cat.q4.spec;
    const Element lhs = mul(Q, element_var(Q, 1), I.images[3]) -
                        mul(Q, I.images[3], element_var(Q, 1)).scaled(RatF::s(2));
    REQUIRE(lhs == element_var(Q, 2).scaled(-RatF::s(2)));
  }
  SECTION("localization coherence: U identities re-verified through I") {
    const AlgebraSpec& S = cat.u.spec;
    const AlgebraSpec& Q = cat.q4.spec;
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < j; ++i) {
        const Element lhs = mul(Q, I.images[j], I.images[i]);
        const Element rhs =
            mul(Q, I.images[i], I.images[j]).scaled(S.q(j, i)) + I.apply(S.c(j, i));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("lambda") {
  const Catalog cat = Catalog::build();
  SECTION("solved value matches the closed form") {
    const auto sol = solve_lambda(cat.q4);
    REQUIRE(sol.lambda.has_value());
    REQUIRE(*sol.lambda == lambda_value());
    REQUIRE(sol.unique);
  }
  SECTION("closed form is r/((r^2-s^2)(r-s))") {
    const RatF r = RatF::r(), s = RatF::s();
    REQUIRE(lambda_value() == r / ((r * r - s * s) * (r - s)));
  }
  SECTION("corrupting the third coefficient moves lambda to 1/(s^2-r^2)") {
    const auto sol = solve_lambda(cat.q4, RatF(1));
    REQUIRE(sol.lambda.has_value());
    const RatF r = RatF::r(), s = RatF::s();
    REQUIRE(*sol.lambda == RatF(1) / (s * s - r * r));
    REQUIRE(sol.unique);
  }
}

TEST_CASE("T4 consistency") {
  const Catalog cat = Catalog::build();
  const auto t4 = t4_consistency(cat.u, cat.q4, cat.I);
  REQUIRE(t4.residual_t4.is_zero());
  REQUIRE(t4.residual_w.is_zero());
  REQUIRE(t4.residual_z.is_zero());
  REQUIRE(t4.ok());
}

TEST_CASE("centers") {
  const Catalog cat = Catalog::build();
  SECTION("center of U at degree 6 is the base field") {
    const auto basis = center_scan(cat.u, 6);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis.front().is_scalar());
  }
  SECTION("center of Q4 within window 3 is the base field") {
    const auto basis = center_scan(cat.q4, 0, 3);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis.front().is_scalar());
  }
  SECTION("center of gr U at degree 4 is the base field") {
    const auto basis = center_scan(cat.gru, 4);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis.front().is_scalar());
  }
}

TEST_CASE("graded center exponent system") {
  SECTION("zero tuple satisfies all equations") {
    REQUIRE(graded_center_system(0, 0, 0, 0) == std::array<long, 4>{0, 0, 0, 0});
  }
  SECTION("(1,0,-2,2) violates the first equation") {
    const auto vals = graded_center_system(1, 0, -2, 2);
    REQUIRE(vals[0] == -4);
  }
  SECTION("the only integer solution is zero") {
    REQUIRE(graded_center_system_only_zero());
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
          for (long d = -3; d <= 3; ++d) {
            const auto v = graded_center_system(a, b, c, d);
            const bool zero = v == std::array<long, 4>{0, 0, 0, 0};
            REQUIRE(zero == (a == 0 && b == 0 && c == 0 && d == 0));
          }
  }
}

TEST_CASE("GK growth") {
  const NamedAlgebra u = build_u();
  for (int n = 0; n <= 8; ++n) {
    const std::uint64_t binom =
        static_cast<std::uint64_t>(n + 4) * (n + 3) * (n + 2) * (n + 1) / 24;
    REQUIRE(dimension_count(u.spec, n) == binom);
  }
}

TEST_CASE("group-like adjunctions") {
  const Catalog cat = Catalog::build();
  SECTION("U>=0: w1 e1 = r^2 s^-2 e1 w1") {
    const AlgebraSpec& S = cat.ugeq0.spec;
    const Element w1 = element_var(S, 0), e1 = element_var(S, 2);
    REQUIRE(mul(S, w1, e1) == mul(S, e1, w1).scaled(RatF::rs(2, -2)));
  }
  SECTION("V: k1 X2 = r s^-1 X2 k1 (derived through the weights)") {
    const AlgebraSpec& S = cat.vcheck.spec;
    const Element k1 = element_var(S, 0), x2 = element_var(S, 3);
    REQUIRE(mul(S, k1, x2) == mul(S, x2, k1).scaled(RatF::rs(1, -1)));
  }
  SECTION("V: k1 X3 = r^2 X3 k1") {
    const AlgebraSpec& S = cat.vcheck.spec;
    REQUIRE(mul(S, element_var(S, 0), element_var(S, 4)) ==
            mul(S, element_var(S, 4), element_var(S, 0)).scaled(RatF::r(2)));
  }
  SECTION("w1 = k1^2 k2^-2 and w2 = k1^-1 k2^2 satisfy the w-relations in V") {
    const AlgebraSpec& V = cat.vcheck.spec;
    const Element w1 = cat.vcheck.parse("k1^2 k2^-2"), w2 = cat.vcheck.parse("k1^-1 k2^2");
    const Element e1 = element_var(V, 2), e2 = element_var(V, 5);
    REQUIRE(mul(V, w1, e1) == mul(V, e1, w1).scaled(RatF::rs(2, -2)));
    REQUIRE(mul(V, w1, e2) == mul(V, e2, w1).scaled(RatF::s(2)));
    REQUIRE(mul(V, w2, e1) == mul(V, e1, w2).scaled(RatF::r(-2)));
    REQUIRE(mul(V, w2, e2) == mul(V, e2, w2).scaled(RatF::rs(1, -1)));
  }
  SECTION("k1 = w1 w2 and k2^2 = w1 w2^2 commutation consistency in U>=0") {
    const AlgebraSpec& S = cat.ugeq0.spec;
    const Element k1 = cat.ugeq0.parse("w1 w2"), k2sq = cat.ugeq0.parse("w1 w2^2");
    const Element e1 = element_var(S, 2), e2 = element_var(S, 5);
    // k1 e1 = s^-2 e1 k1 and k2^2 e1 = (r^-1 s^-1)^2 e1 k2^2
    REQUIRE(mul(S, k1, e1) == mul(S, e1, k1).scaled(RatF::s(-2)));
    REQUIRE(mul(S, k1, e2) == mul(S, e2, k1).scaled(RatF::rs(1, 1)));
    REQUIRE(mul(S, k2sq, e1) == mul(S, e1, k2sq).scaled(RatF::rs(-2, -2)));
    REQUIRE(mul(S, k2sq, e2) == mul(S, e2, k2sq).scaled(RatF::r(2)));
  }
}

TEST_CASE("localization coherence of the chain") {
  const Catalog cat = Catalog::build();
  // the inclusions are the identity on exponent tuples
  std::mt19937_64 rng(20240914);
  for (int t = 0; t < 20; ++t) {
    Expo e(4, 0);
    for (int k = 0; k < 4; ++k) e[k] = static_cast<int>(rng() % 3);
    Expo f(4, 0);
    for (int k = 0; k < 4; ++k) f[k] = static_cast<int>(rng() % 3);
    const Element prod_u =
        mul(cat.u.spec, element_monomial(e, RatF(1)), element_monomial(f, RatF(1)));
    const Element prod_b4 =
        mul(cat.b4.spec, element_monomial(e, RatF(1)), element_monomial(f, RatF(1)));
    REQUIRE(prod_u.terms == prod_b4.terms);
  }
}
