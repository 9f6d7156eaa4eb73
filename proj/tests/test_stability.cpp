#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sncstab/stability.hpp"

using namespace sncstab;
using sncfix::fix_c1;
using sncfix::fix_c2;

static ClassExpr bundle(const Configuration& cfg, const std::string& name) {
    return ClassExpr::basis(cfg.syms.lookup(name));
}

TEST_CASE("defect values on the fixtures") {
    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L");
    CHECK(e_value(cfg, 1u, L) == Rational(1, 2));
    CHECK(e_value(cfg, 2u, L) == Rational(-5, 2));
    CHECK(e_value(cfg, cfg.full_mask(), L) == Rational(0));
    CHECK_THROWS_AS(e_value(cfg, 0u, L), PreconditionError);

    Configuration c2 = fix_c2();
    CHECK(e_value(c2, 1u, bundle(c2, "L")) == Rational(0));
}

TEST_CASE("defect polynomial in twist and asymptotic variables") {
    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L"), K = bundle(cfg, "K");
    Poly p = e_poly(cfg, 1u, L, K, 1u);
    CHECK(p == Poly::monomial(0, 1, 2) + Poly(Rational(1, 2)));
    CHECK(p.subst_b(Rational(0)) == e_poly_m(cfg, 1u, L, K));
    // substituting an integer twist matches the twisted plain value at m = 0
    ClassExpr twisted = L;
    twisted.add(0, -1);
    CHECK(p.eval(0, Rational(-1)) == e_value(cfg, 1u, twisted));
}

TEST_CASE("eventual sign conditions") {
    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L"), K = bundle(cfg, "K");
    // e_{Y1}(L + mK) has positive leading coefficient, so Y1 fails minus
    CHECK(!eventually_nonpositive(cfg, 1u, L, K));
    CHECK(eventually_nonnegative(cfg, 1u, L, K));
    CHECK(eventually_nonpositive(cfg, 2u, L, K));
    // the twist (0,1) fixes it
    ClassExpr Lt = L;
    Lt.add(1, 1);
    CHECK(eventually_nonpositive(cfg, 1u, Lt, K));
    CHECK(eventually_nonpositive(cfg, 2u, Lt, K));
}

TEST_CASE("semistability with failure reporting") {
    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L"), K = bundle(cfg, "K");
    uint32_t failing = 0;
    Poly fp;
    CHECK(!is_semistable(cfg, L, K, Mode::Minus, Scope::ConnectedPairs, &failing, &fp));
    CHECK(failing == 1u);
    CHECK(eventual_sign(fp) == 1);

    ClassExpr Lt = L;
    Lt.add(1, 1);
    CHECK(is_semistable(cfg, Lt, K, Mode::Minus, Scope::ConnectedPairs));
    CHECK(is_semistable(cfg, Lt, K, Mode::Minus, Scope::AllUnions));
    // the same twist is plus-unstable on this fixture
    CHECK(!is_semistable(cfg, Lt, K, Mode::Plus, Scope::ConnectedPairs));
}

TEST_CASE("twistable interval on the first fixture") {
    Configuration cfg = fix_c1();
    auto rep = twistable_interval(cfg, 1u, bundle(cfg, "L"), bundle(cfg, "K"), Mode::Minus);
    REQUIRE(rep.kind == IntervalReport::Kind::UnitInterval);
    CHECK(rep.s.is_rational());
    CHECK(rep.s.rational_value() == Rational(-1, 4));
    CHECK(rep.left_closed);
    CHECK(rep.right_closed);
    CHECK(rep.label == CaseLabel::CurveExact);
    REQUIRE(rep.candidates.size() == 1);
    CHECK(rep.candidates[0] == BigInt(-1));
}

TEST_CASE("twistable interval on the second fixture") {
    Configuration cfg = fix_c2();
    auto rep = twistable_interval(cfg, 1u, bundle(cfg, "L"), bundle(cfg, "K"), Mode::Minus);
    REQUIRE(rep.kind == IntervalReport::Kind::UnitInterval);
    CHECK(rep.s.rational_value() == Rational(0));
    CHECK(rep.left_closed);
    CHECK(rep.right_closed);
    REQUIRE(rep.candidates.size() == 2);
    CHECK(rep.candidates[0] == BigInt(-1));
    CHECK(rep.candidates[1] == BigInt(0));
}

TEST_CASE("twistable interval preconditions") {
    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L"), K = bundle(cfg, "K");
    CHECK_THROWS_AS(twistable_interval(cfg, 0u, L, K, Mode::Minus), PreconditionError);
    CHECK_THROWS_AS(twistable_interval(cfg, cfg.full_mask(), L, K, Mode::Minus),
                    PreconditionError);
    // disconnected side of a path: {Y1, Y3} in a 3-chain
    Configuration chain = curve_builder({2, 1, 2}, {{0, 1, 1}, {1, 2, 1}}, {{"L", {1, 2, 3}}});
    CHECK_THROWS_AS(twistable_interval(chain, 0b101u, bundle(chain, "L"), bundle(chain, "K"),
                                       Mode::Minus),
                    PreconditionError);
}

TEST_CASE("degenerate interval for a genus-one total space") {
    // two elliptic-type components, one node: total genus 1, K trivial on top
    Configuration cfg = curve_builder({0, 0}, {{0, 1, 2}}, {{"L", {1, -1}}});
    auto rep = twistable_interval(cfg, 1u, bundle(cfg, "L"), bundle(cfg, "K"), Mode::Minus);
    CHECK(rep.kind == IntervalReport::Kind::Degenerate);
    CHECK(!rep.reason.empty());
    CHECK(!rep.region.empty());
}

TEST_CASE("kx criterion trichotomy") {
    Configuration cfg = fix_c1();
    auto [val, cls] = kx_criterion(cfg, 1u);
    CHECK(val == Rational(-4));
    CHECK(cls == KxClass::MinusTwistable);

    Configuration rational = curve_builder({0, 0}, {{0, 1, 1}}, {{"L", {1, 0}}});
    auto [v0, c0] = kx_criterion(rational, 1u);
    CHECK(v0 > Rational(0));
    CHECK(c0 == KxClass::PlusTwistable);

    Configuration elliptic = curve_builder({0, 0}, {{0, 1, 2}}, {{"L", {1, 0}}});
    auto [v1, c1] = kx_criterion(elliptic, 1u);
    CHECK(v1 == Rational(0));
    CHECK(c1 == KxClass::Inconclusive);
}

TEST_CASE("duality identity on random curves") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 25; ++t) {
        Configuration cfg = sncfix::random_curve(gen, 0);
        uint32_t y = sncfix::random_proper_mask(cfg, gen);
        uint32_t z = cfg.full_mask() & ~y;
        ClassExpr M = sncfix::random_class(cfg, gen);
        ClassExpr MY = M + subset_class(cfg, y);
        Rational lhs = e_value(cfg, z, M);
        Rational rhs = -e_value(cfg, y, MY);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("surface interval with cross-checked case label") {
    Configuration s = synth_generator(2, 2, {{0, 1}}, 42);
    auto [kv, kc] = kx_criterion(s, 1u);
    REQUIRE(kc != KxClass::Inconclusive);
    Mode md = (kc == KxClass::PlusTwistable) ? Mode::Plus : Mode::Minus;
    auto rep = twistable_interval(s, 1u, bundle(s, "L"), bundle(s, "K"), md);
    REQUIRE(rep.kind == IntervalReport::Kind::UnitInterval);
    // case label against endpoint closures
    switch (rep.label) {
        case CaseLabel::Case1:
            CHECK(!rep.left_closed);
            CHECK(rep.right_closed);
            break;
        case CaseLabel::Case2:
            CHECK(rep.left_closed);
            CHECK(!rep.right_closed);
            break;
        case CaseLabel::Case3:
            CHECK(rep.left_closed);
            CHECK(rep.right_closed);
            break;
        case CaseLabel::CurveExact: CHECK(false); break;
    }
}
