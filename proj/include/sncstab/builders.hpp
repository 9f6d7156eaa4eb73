#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sncstab/config.hpp"

namespace sncstab {

struct CurveEdgeSpec {
    int i, j;
    int nodes;  // >= 1
};

/// Nodal-curve configuration (dim 1). Components carry genera, edges carry
/// node counts, named bundles carry per-component degrees. A canonical
/// bundle K with deg K|_i = 2g_i - 2 + (nodes on i) is always added.
Configuration curve_builder(const std::vector<int>& genera,
                            const std::vector<CurveEdgeSpec>& edges,
                            const std::map<std::string, std::vector<long long>>& degrees);

/// Random formal configuration of the given dimension over a tree dual
/// graph, found by solving the full validation constraint system exactly
/// and drawing a seeded integer point of its solution space. Bundles are
/// "L" and the canonical "K". Deterministic per seed.
Configuration synth_generator(int d, int n_components, const std::vector<Edge>& tree,
                              uint64_t seed);

/// Exact nullspace basis of a sparse homogeneous system over the rationals.
/// rows[r] maps variable index -> coefficient; nvars columns.
std::vector<std::vector<Rational>> nullspace_basis(
    const std::vector<std::map<int, Rational>>& rows, int nvars);

}  // namespace sncstab
