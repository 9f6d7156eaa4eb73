#pragma once

#include <random>

#include "sncstab/builders.hpp"

namespace sncfix {

using namespace sncstab;

// two-component curve, genera (2,1), one node, L degrees (3,2)
inline Configuration fix_c1() {
    return curve_builder({2, 1}, {{0, 1, 1}}, {{"L", {3, 2}}});
}

// two-component curve, genera (2,2), one node, L degrees (1,2)
inline Configuration fix_c2() {
    return curve_builder({2, 2}, {{0, 1, 1}}, {{"L", {1, 2}}});
}

struct CurveParams {
    std::vector<int> genera;
    std::vector<CurveEdgeSpec> edges;
    std::vector<long long> ldeg;
};

/// Random tree curve with n in [2,6], genera <= 5, node counts <= 3,
/// |degrees| <= 10; when min_total_genus is set the draw is repeated
/// until the total arithmetic genus reaches it.
inline CurveParams random_curve_params(std::mt19937_64& gen, int min_total_genus = 2,
                                       int max_total_genus = 1 << 20) {
    auto draw = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(gen() % static_cast<uint64_t>(hi - lo + 1));
    };
    while (true) {
        CurveParams p;
        int n = static_cast<int>(draw(2, 6));
        long long total_nodes = 0;
        for (int i = 0; i < n; ++i) p.genera.push_back(static_cast<int>(draw(0, 5)));
        for (int v = 1; v < n; ++v) {
            int parent = static_cast<int>(draw(0, v - 1));
            int nodes = static_cast<int>(draw(1, 3));
            p.edges.push_back({parent, v, nodes});
            total_nodes += nodes;
        }
        for (int i = 0; i < n; ++i) p.ldeg.push_back(draw(-10, 10));
        long long gx = 0;
        for (int g : p.genera) gx += g;
        gx += total_nodes - n + 1;
        if (gx >= min_total_genus && gx <= max_total_genus) return p;
    }
}

inline Configuration random_curve(std::mt19937_64& gen, int min_total_genus = 2,
                                  int max_total_genus = 1 << 20) {
    CurveParams p = random_curve_params(gen, min_total_genus, max_total_genus);
    return curve_builder(p.genera, p.edges, {{"L", p.ldeg}});
}

inline ClassExpr random_class(const Configuration& cfg, std::mt19937_64& gen, long long bound = 5) {
    ClassExpr M;
    for (Sym s = 0; s < cfg.syms.n_syms(); ++s)
        M.add(s, -bound + static_cast<long long>(gen() % static_cast<uint64_t>(2 * bound + 1)));
    return M;
}

inline uint32_t random_proper_mask(const Configuration& cfg, std::mt19937_64& gen) {
    uint32_t full = cfg.full_mask();
    return 1 + static_cast<uint32_t>(gen() % (full - 1));
}

}  // namespace sncfix
