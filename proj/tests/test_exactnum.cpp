#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sncstab/poly.hpp"
#include "sncstab/signregion.hpp"
#include "sncstab/univariate.hpp"

using namespace sncstab;

TEST_CASE("rational parse and print") {
    CHECK(rat_to_string(rat_parse("6/4")) == "3/2");
    CHECK(rat_to_string(rat_parse("-10/5")) == "-2");
    CHECK(rat_to_string(Rational(0)) == "0");
    CHECK(rat_parse("7") == Rational(7));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK(rat_floor(Rational(-7, 2)) == BigInt(-4));
    CHECK(rat_ceil(Rational(-7, 2)) == BigInt(-3));
}

TEST_CASE("bivariate polynomial arithmetic") {
    Poly p = Poly::var_m() * Poly::var_m() + Poly::monomial(0, 1, 2) + Poly(Rational(3));
    CHECK(p.deg_m() == 2);
    CHECK(p.deg_b() == 1);
    CHECK(p.coeff(2, 0) == Rational(1));
    CHECK(p.coeff(0, 1) == Rational(2));
    CHECK(p.eval(2, Rational(-1, 2)) == Rational(6));

    Poly q = p - p;
    CHECK(q.is_zero());

    // cancellation must drop the stored term entirely
    Poly a = Poly::monomial(1, 1, Rational(5)) + Poly::monomial(1, 1, Rational(-5));
    CHECK(a.terms().empty());

    Poly prod = (Poly::var_m() + Poly(Rational(1))) * (Poly::var_m() - Poly(Rational(1)));
    CHECK(prod == Poly::var_m() * Poly::var_m() - Poly(Rational(1)));
}

TEST_CASE("substitutions and slices") {
    // p = m^2 b - 3 m + b^2
    Poly p = Poly::monomial(2, 1, 1) + Poly::monomial(1, 0, -3) + Poly::monomial(0, 2, 1);
    CHECK(p.coeff_of_b(1) == Poly::monomial(2, 0, 1));
    CHECK(p.subst_b(Rational(2)) ==
          Poly::monomial(2, 0, 2) + Poly::monomial(1, 0, -3) + Poly(Rational(4)));
    CHECK(p.subst_m(Rational(0)) == Poly::monomial(0, 2, 1));
    CHECK(p.shift_b(Rational(1)).subst_b(Rational(0)) == p.subst_b(Rational(1)));

    auto by_m = p.coeffs_by_m();
    REQUIRE(by_m.size() == 3);
    CHECK(by_m[2] == Poly::var_b());
    CHECK(by_m[1] == Poly(Rational(-3)));
    CHECK(by_m[0] == Poly::var_b() * Poly::var_b());
}

TEST_CASE("eventual sign") {
    CHECK(eventual_sign(Poly::monomial(3, 0, -2) + Poly::monomial(0, 0, 1000)) == -1);
    CHECK(eventual_sign(Poly(Rational(5))) == 1);
    CHECK(eventual_sign(Poly()) == 0);
}

static UPoly up(std::vector<long long> cs) {
    UPoly p;
    for (auto c : cs) p.push_back(Rational(c));
    return up_normalize(p);
}

TEST_CASE("univariate division and gcd") {
    UPoly a = up({-1, 0, 1});     // x^2 - 1
    UPoly b = up({-1, 1});        // x - 1
    UPoly q, r;
    up_divmod(a, b, q, r);
    CHECK(r.empty());
    CHECK(q == up({1, 1}));
    CHECK(up_gcd(a, up({1, 1})) == up({1, 1}));  // gcd with x + 1 (monic already)

    // squarefree decomposition of (x-1)^2 (x+2)
    UPoly p = up_mul(up_mul(b, b), up({2, 1}));
    auto dec = up_squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    bool saw1 = false, saw2 = false;
    for (auto& [f, mult] : dec) {
        if (mult == 1) { saw1 = true; CHECK(up_eval(f, Rational(-2)).is_zero()); }
        if (mult == 2) { saw2 = true; CHECK(up_eval(f, Rational(1)).is_zero()); }
    }
    CHECK(saw1);
    CHECK(saw2);
}

TEST_CASE("root isolation") {
    // (x^2 - 2)(2x - 1)^2: roots -sqrt2, 1/2 (double), sqrt2
    UPoly p = up_mul(up({-2, 0, 1}), up_mul(up({-1, 2}), up({-1, 2})));
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 2);
    CHECK(roots[2].multiplicity == 1);
    CHECK(roots[1].root.is_rational());
    CHECK(roots[1].root.rational_value() == Rational(1, 2));
    CHECK(AlgReal::compare(roots[0].root, roots[1].root) < 0);
    CHECK(AlgReal::compare(roots[1].root, roots[2].root) < 0);
    // sqrt2 from two different defining polynomials compares equal
    auto r2 = isolate_real_roots(up({-2, 0, 1}));
    REQUIRE(r2.size() == 2);
    CHECK(AlgReal::compare(roots[2].root, r2[1].root) == 0);
    CHECK(r2[1].root.floor() == BigInt(1));
    CHECK(!r2[1].root.as_integer().has_value());
    CHECK(sign_at(up({0, 1}), r2[1].root) == 1);       // x at sqrt2
    CHECK(sign_at(up({-2, 0, 1}), r2[0].root) == 0);   // defining poly vanishes
    CHECK(vanishes_at(up({-2, 0, 1}), r2[1].root));
    CHECK(!vanishes_at(up({-3, 0, 1}), r2[1].root));
    CHECK_THROWS(isolate_real_roots(UPoly{}));
}

TEST_CASE("algreal shift and integer detection") {
    auto r2 = isolate_real_roots(up({-2, 0, 1}))[1].root;  // sqrt2
    AlgReal shifted = r2 + Rational(-1);
    CHECK(shifted.floor() == BigInt(0));
    AlgReal three(Rational(3));
    CHECK(three.as_integer().value() == BigInt(3));
    CHECK(AlgReal::compare(shifted, AlgReal(Rational(1, 2))) < 0);
    double ap = r2.approx();
    CHECK(ap > 1.41);
    CHECK(ap < 1.42);
}

TEST_CASE("eventual sign region") {
    // leading coefficient (b^2 - 2), then constant-in-m coefficient (b - 5)
    std::vector<Poly> coeffs = {
        Poly::var_b() - Poly(Rational(5)),                        // m^0
        Poly::var_b() * Poly::var_b() - Poly(Rational(2)),        // m^1
    };
    SignRegion r = eventual_sign_region(coeffs);
    REQUIRE(r.cuts.size() == 2);  // +-sqrt2; b=5 is masked by the m^1 term
    CHECK(r.interval_sign == std::vector<int>{1, -1, 1});
    // at b = +-sqrt2 the m-coefficient vanishes and the sign falls through
    CHECK(r.point_sign == std::vector<int>{-1, -1});
    CHECK(r.sign_at_point(AlgReal(Rational(0))) == -1);
    CHECK(r.sign_at_point(AlgReal(Rational(10))) == 1);
    CHECK(r.sign_at_point(r.cuts[0]) == -1);

    auto pieces = region_pieces(r);
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].lo_unbounded);
    CHECK(pieces[0].sign == 1);
    CHECK(pieces[1].sign == -1);
    CHECK(pieces[1].lo_closed);
    CHECK(pieces[1].hi_closed);
    CHECK(pieces[2].hi_unbounded);

    auto samples = interleave_samples(r.cuts);
    REQUIRE(samples.size() == 3);
    CHECK(samples[0] < Rational(-1));
    CHECK(samples[2] > Rational(1));
}

TEST_CASE("degenerate regions") {
    // all coefficients identically zero in b at every point
    SignRegion z = eventual_sign_region({Poly()});
    CHECK(z.cuts.empty());
    CHECK(z.interval_sign == std::vector<int>{0});
    auto pieces = region_pieces(z);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].lo_unbounded);
    CHECK(pieces[0].hi_unbounded);
    CHECK(pieces[0].sign == 0);
}

TEST_CASE("merge cuts") {
    auto r2 = isolate_real_roots(up({-2, 0, 1}));
    std::vector<AlgReal> a = {r2[0].root, AlgReal(Rational(3))};
    std::vector<AlgReal> b = {r2[1].root, AlgReal(Rational(3))};
    auto m = merge_cuts(a, b);
    REQUIRE(m.size() == 3);
    CHECK(AlgReal::compare(m[0], m[1]) < 0);
    CHECK(AlgReal::compare(m[1], m[2]) < 0);
}
