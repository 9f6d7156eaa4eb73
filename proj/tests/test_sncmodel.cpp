#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sncstab/builders.hpp"

using namespace sncstab;
using sncfix::fix_c1;

TEST_CASE("curve builder assembles the fixture") {
    Configuration cfg = fix_c1();
    CHECK(cfg.dim == 1);
    CHECK(cfg.n() == 2);
    CHECK(cfg.syms.components == std::vector<std::string>{"Y1", "Y2"});
    CHECK(cfg.syms.bundles == std::vector<std::string>{"L", "K"});
    REQUIRE(cfg.canonical.has_value());
    CHECK(cfg.syms.name(*cfg.canonical) == "K");
    CHECK(cfg.adjacent(0, 1));
    CHECK(cfg.is_tree());

    Sym L = cfg.syms.lookup("L"), K = cfg.syms.lookup("K");
    CHECK(cfg.table_at(mono_sorted({0, 1})) == Rational(1));
    CHECK(cfg.table_at(mono_sorted({0, 0})) == Rational(-1));
    CHECK(cfg.table_at(mono_sorted({L, 0})) == Rational(3));
    CHECK(cfg.table_at(mono_sorted({L, 1})) == Rational(2));
    CHECK(cfg.table_at(mono_sorted({K, 0})) == Rational(3));  // 2*2-2+1
    CHECK(cfg.table_at(mono_sorted({K, 1})) == Rational(1));  // 2*1-2+1
    CHECK_THROWS_AS(cfg.syms.lookup("nope"), std::invalid_argument);
}

TEST_CASE("curve builder input validation") {
    CHECK_THROWS_AS(curve_builder({2, -1}, {{0, 1, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(curve_builder({2, 1}, {{0, 1, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(curve_builder({2, 1}, {{0, 2, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(curve_builder({2, 1}, {}, {}), std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(curve_builder({2, 1}, {{0, 1, 1}}, {{"K", {1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(curve_builder({2, 1}, {{0, 1, 1}}, {{"L", {1}}}), std::invalid_argument);
}

TEST_CASE("validate passes on fixtures and random curves") {
    CHECK(validate_ok(fix_c1()));
    CHECK(validate_ok(sncfix::fix_c2()));
    std::mt19937_64 gen(31);
    for (int t = 0; t < 10; ++t) CHECK(validate_ok(sncfix::random_curve(gen, 0)));
}

TEST_CASE("validate flags corrupted data") {
    Configuration cfg = fix_c1();
    cfg.table[mono_sorted({0, 0})] = Rational(-2);  // breaks the X relation
    auto checks = validate(cfg);
    bool relation_failed = false;
    for (auto& c : checks)
        if (c.name == "fiber-class-relations" && !c.pass) relation_failed = true;
    CHECK(relation_failed);
    CHECK(!validate_ok(cfg));

    Configuration cfg2 = fix_c1();
    cfg2.chi_components[0].add(0, Mono{}, Rational(1));  // breaks chi additivity
    CHECK(!validate_ok(cfg2));
}

TEST_CASE("structural checks reject malformed configurations") {
    Configuration cfg = fix_c1();
    cfg.table[mono_sorted({0, 0, 1})] = Rational(1);  // wrong arity
    CHECK_THROWS_AS(cfg.check_structure(), std::invalid_argument);

    Configuration cfg2 = fix_c1();
    cfg2.syms.components[1] = "Y1";  // duplicate name
    CHECK_THROWS_AS(cfg2.check_structure(), std::invalid_argument);
}

TEST_CASE("intersection numbers") {
    Configuration cfg = fix_c1();
    Sym L = cfg.syms.lookup("L");
    ClassExpr Lc = ClassExpr::basis(L);
    ClassExpr Y1 = ClassExpr::basis(0), Y2 = ClassExpr::basis(1);
    ClassExpr X = subset_class(cfg, cfg.full_mask());
    CHECK(intersect(cfg, {Lc, Y1}) == Rational(3));
    CHECK(intersect(cfg, {Y1, Y2}) == Rational(1));
    CHECK(intersect(cfg, {Y1, Y1}) == Rational(-1));
    CHECK(intersect(cfg, {Lc, X}) == Rational(5));
    CHECK(intersect(cfg, {X, X}) == Rational(0));
    // multilinearity in each slot
    ClassExpr A = Lc + Y1 + Y1;
    Rational lhs = intersect(cfg, {A, Y2});
    Rational rhs = intersect(cfg, {Lc, Y2}) + Rational(2) * intersect(cfg, {Y1, Y2});
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(intersect(cfg, {Lc, Y1, Y2}), PreconditionError);  // wrong arity
}

TEST_CASE("chi of unions") {
    Configuration cfg = fix_c1();
    Sym L = cfg.syms.lookup("L");
    ClassExpr Lc = ClassExpr::basis(L);
    ClassExpr zero;
    // chi(Y1, L) = 3 + 1 - 2, chi(Y2, L) = 2 + 1 - 1
    CHECK(chi_union(cfg, 1u, Lc) == Rational(2));
    CHECK(chi_union(cfg, 2u, Lc) == Rational(2));
    // union subtracts the node
    CHECK(chi_union(cfg, 3u, Lc) == Rational(3));
    CHECK(chi_union(cfg, 3u, zero) == Rational(-2));  // 1 - g_X with g_X = 3
    CHECK_THROWS_AS(chi_union(cfg, 0u, Lc), PreconditionError);
}

TEST_CASE("synth generator produces valid surfaces deterministically") {
    Configuration a = synth_generator(2, 2, {{0, 1}}, 1234);
    Configuration b = synth_generator(2, 2, {{0, 1}}, 1234);
    CHECK(validate_ok(a));
    CHECK(a.table == b.table);
    Configuration c = synth_generator(2, 2, {{0, 1}}, 1235);
    CHECK(validate_ok(c));
    CHECK(a.table != c.table);

    Configuration p3 = synth_generator(2, 3, {{0, 1}, {1, 2}}, 77);
    CHECK(validate_ok(p3));
    CHECK(p3.n() == 3);
    CHECK(p3.dim == 2);
    // genericity guarantees
    Sym K = p3.syms.lookup("K");
    ClassExpr X = subset_class(p3, p3.full_mask());
    CHECK(intersect(p3, {ClassExpr::basis(K), ClassExpr::basis(K), X}) != Rational(0));
}

TEST_CASE("synth generator curve mode delegates to the curve builder") {
    Configuration c = synth_generator(1, 3, {{0, 1}, {1, 2}}, 5);
    CHECK(c.dim == 1);
    CHECK(c.n() == 3);
    CHECK(validate_ok(c));
    CHECK(c.canonical.has_value());
}

TEST_CASE("synth generator rejects non-trees") {
    CHECK_THROWS(synth_generator(2, 3, {{0, 1}, {1, 2}, {0, 2}}, 1));
}

TEST_CASE("nullspace basis") {
    // x + y = 0, y + z = 0 over 3 vars -> one-dimensional kernel (1,-1,1)
    std::vector<std::map<int, Rational>> rows = {
        {{0, Rational(1)}, {1, Rational(1)}},
        {{1, Rational(1)}, {2, Rational(1)}},
    };
    auto basis = nullspace_basis(rows, 3);
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    CHECK(v[0] + v[1] == Rational(0));
    CHECK(v[1] + v[2] == Rational(0));
    CHECK(!(v[0].is_zero() && v[1].is_zero() && v[2].is_zero()));
}
