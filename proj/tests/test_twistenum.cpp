#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sncstab/twistenum.hpp"

using namespace sncstab;
using sncfix::fix_c1;
using sncfix::fix_c2;

static ClassExpr bundle(const Configuration& cfg, const std::string& name) {
    return ClassExpr::basis(cfg.syms.lookup(name));
}

TEST_CASE("twist normalization and application") {
    Twist t = Twist::normalized({3, 4, 1});
    CHECK(t.a == std::vector<long long>{0, 1, -2});
    CHECK(Twist::normalized({0, 1, -2}) == t);

    Configuration cfg = fix_c1();
    ClassExpr L = bundle(cfg, "L");
    ClassExpr out = apply_twist(cfg, L, Twist{{0, 1}});
    ClassExpr want = L;
    want.add(1, 1);
    CHECK(out == want);
    // degrees of the twisted bundle on each component
    CHECK(intersect(cfg, {out, ClassExpr::basis(0)}) == Rational(4));
    CHECK(intersect(cfg, {out, ClassExpr::basis(1)}) == Rational(1));
}

TEST_CASE("enumeration on the fixtures") {
    Configuration c1 = fix_c1();
    auto set1 = enumerate_semistable_twists(c1, bundle(c1, "L"), bundle(c1, "K"), Mode::Minus);
    REQUIRE(set1.size() == 1);
    CHECK(set1.begin()->a == std::vector<long long>{0, 1});

    Configuration c2 = fix_c2();
    auto set2 = enumerate_semistable_twists(c2, bundle(c2, "L"), bundle(c2, "K"), Mode::Minus);
    REQUIRE(set2.size() == 2);
    auto it = set2.begin();
    CHECK(it->a == std::vector<long long>{0, 0});
    CHECK((++it)->a == std::vector<long long>{0, 1});
}

TEST_CASE("enumeration emits a usable trace") {
    Configuration c1 = fix_c1();
    EnumerationTrace trace;
    auto set1 =
        enumerate_semistable_twists(c1, bundle(c1, "L"), bundle(c1, "K"), Mode::Minus, &trace);
    CHECK(trace.order == std::vector<int>{0, 1});
    REQUIRE(trace.root.children.size() >= 1);
    // every accepted leaf corresponds to an output twist
    size_t accepted = 0;
    for (const auto& child : trace.root.children)
        if (child.accepted && child.leaf_twist) {
            ++accepted;
            CHECK(set1.count(*child.leaf_twist) == 1);
        }
    CHECK(accepted == set1.size());
}

TEST_CASE("single component enumeration is trivial") {
    Configuration one = curve_builder({3}, {}, {{"L", {7}}});
    auto s = enumerate_semistable_twists(one, bundle(one, "L"), bundle(one, "K"), Mode::Minus);
    REQUIRE(s.size() == 1);
    CHECK(s.begin()->a == std::vector<long long>{0});
}

TEST_CASE("non-tree graphs are rejected") {
    Configuration tri =
        curve_builder({2, 2, 2}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {{"L", {1, 1, 1}}});
    CHECK_THROWS_AS(
        enumerate_semistable_twists(tri, bundle(tri, "L"), bundle(tri, "K"), Mode::Minus),
        PreconditionError);
}

TEST_CASE("classification of individual twists") {
    Configuration c1 = fix_c1();
    ClassExpr L = bundle(c1, "L"), K = bundle(c1, "K");
    CHECK(classify(c1, L, K, Mode::Minus, Twist{{0, 1}}) == Classification::Stable);
    CHECK(classify(c1, L, K, Mode::Minus, Twist{{0, 0}}) == Classification::Unstable);

    Configuration c2 = fix_c2();
    ClassExpr L2 = bundle(c2, "L"), K2 = bundle(c2, "K");
    CHECK(classify(c2, L2, K2, Mode::Minus, Twist{{0, 0}}) == Classification::StrictlySemistable);
    CHECK(classify(c2, L2, K2, Mode::Minus, Twist{{0, 1}}) == Classification::StrictlySemistable);
    CHECK(classify(c2, L2, K2, Mode::Minus, Twist{{0, 5}}) == Classification::Unstable);
}

TEST_CASE("enumeration output size stays within the tree bound") {
    std::mt19937_64 gen(23);
    for (int t = 0; t < 15; ++t) {
        Configuration cfg = sncfix::random_curve(gen, 2);
        auto s = enumerate_semistable_twists(cfg, bundle(cfg, "L"), bundle(cfg, "K"), Mode::Minus);
        CHECK(s.size() >= 1);
        CHECK(s.size() <= (size_t{1} << (cfg.n() - 1)));
        for (const auto& tw : s) {
            CHECK(tw.a.size() == static_cast<size_t>(cfg.n()));
            CHECK(tw.a[0] == 0);
            CHECK(is_semistable(cfg, apply_twist(cfg, bundle(cfg, "L"), tw), bundle(cfg, "K"),
                                Mode::Minus, Scope::ConnectedPairs));
        }
    }
}
