#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sncstab/stability.hpp"

namespace sncstab {

/// Element of Z^n modulo the all-ones vector, normalized to first entry 0.
struct Twist {
    std::vector<long long> a;
    static Twist normalized(std::vector<long long> raw) {
        if (!raw.empty()) {
            long long base = raw.front();
            for (auto& v : raw) v -= base;
        }
        return Twist{std::move(raw)};
    }
    bool operator<(const Twist& o) const { return a < o.a; }
    bool operator==(const Twist& o) const { return a == o.a; }
};

ClassExpr apply_twist(const Configuration& cfg, const ClassExpr& M, const Twist& t);

struct TraceNode {
    int vertex = -1;      // component fixed by this node (-1 at the root)
    long long chosen = 0; // twist value assigned to that component
    std::optional<IntervalReport> report;  // interval solved for the next edge
    std::vector<TraceNode> children;
    std::optional<Twist> leaf_twist;
    bool accepted = false;
};

struct EnumerationTrace {
    std::vector<int> order;  // BFS vertex order from the root component
    TraceNode root;
};

/// All semistable twists of L on a tree dual graph, found by the per-edge
/// interval branch-and-filter construction. Throws PreconditionError on a
/// non-tree graph or when any edge's solution set is not a unit interval.
std::set<Twist> enumerate_semistable_twists(const Configuration& cfg, const ClassExpr& L,
                                            const ClassExpr& H, Mode mode,
                                            EnumerationTrace* trace = nullptr);

enum class Classification { Stable, StrictlySemistable, Unstable };
std::string classification_name(Classification c);

Classification classify(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H,
                        Mode mode, const Twist& t);

}  // namespace sncstab
