#include "sncstab/twistenum.hpp"

#include <deque>

namespace sncstab {

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Stable: return "Stable";
        case Classification::StrictlySemistable: return "StrictlySemistable";
        default: return "Unstable";
    }
}

ClassExpr apply_twist(const Configuration& cfg, const ClassExpr& M, const Twist& t) {
    if (t.a.size() != static_cast<size_t>(cfg.n()))
        throw PreconditionError("twist length must equal the number of components");
    ClassExpr out = M;
    for (int i = 0; i < cfg.n(); ++i) out.add(i, t.a[static_cast<size_t>(i)]);
    return out;
}

namespace {

struct StepInfo {
    int vertex;
    int parent;
    uint32_t subtree;  // vertex and everything hanging below it
};

void enumerate_rec(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H, Mode mode,
                   const std::vector<StepInfo>& steps, size_t idx, std::vector<long long>& a,
                   std::set<Twist>& out, TraceNode* node) {
    if (idx == steps.size()) {
        Twist t = Twist::normalized(a);
        ClassExpr twisted = apply_twist(cfg, L, t);
        bool good = is_semistable(cfg, twisted, H, mode, Scope::ConnectedPairs);
        if (good) out.insert(t);
        if (node) {
            node->leaf_twist = t;
            node->accepted = good;
        }
        return;
    }
    const StepInfo& st = steps[idx];
    ClassExpr cur = L;
    for (int i = 0; i < cfg.n(); ++i)
        if (!(st.subtree & (1u << i))) cur.add(i, a[static_cast<size_t>(i)]);
    IntervalReport rep = twistable_interval(cfg, st.subtree, cur, H, mode);
    if (rep.kind != IntervalReport::Kind::UnitInterval)
        throw PreconditionError("edge (" + cfg.syms.components[static_cast<size_t>(st.parent)] +
                                "," + cfg.syms.components[static_cast<size_t>(st.vertex)] +
                                ") has no unit twistable interval: " + rep.reason);
    if (node) node->report = rep;
    for (const BigInt& cand : rep.candidates) {
        if (cand > (std::numeric_limits<long long>::max)() ||
            cand < (std::numeric_limits<long long>::min)())
            throw PreconditionError("twist candidate out of machine range");
        a[static_cast<size_t>(st.vertex)] = static_cast<long long>(cand);
        TraceNode* child = nullptr;
        if (node) {
            node->children.emplace_back();
            child = &node->children.back();
            child->vertex = st.vertex;
            child->chosen = static_cast<long long>(cand);
        }
        enumerate_rec(cfg, L, H, mode, steps, idx + 1, a, out, child);
        a[static_cast<size_t>(st.vertex)] = 0;
    }
}

}  // namespace

std::set<Twist> enumerate_semistable_twists(const Configuration& cfg, const ClassExpr& L,
                                            const ClassExpr& H, Mode mode,
                                            EnumerationTrace* trace) {
    if (!cfg.is_tree()) throw PreconditionError("dual graph is not a tree");
    const int n = cfg.n();
    std::set<Twist> out;
    if (n == 1) {
        out.insert(Twist{{0}});
        if (trace) trace->order = {0};
        return out;
    }
    // BFS from component 0
    std::vector<int> order{0}, parent(static_cast<size_t>(n), -1);
    std::deque<int> q{0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        std::vector<int> nb = cfg.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (int w : nb)
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
                q.push_back(w);
            }
    }
    // subtree masks in reverse BFS order
    std::vector<uint32_t> subtree(static_cast<size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        subtree[static_cast<size_t>(*it)] |= 1u << *it;
        if (parent[static_cast<size_t>(*it)] >= 0)
            subtree[static_cast<size_t>(parent[static_cast<size_t>(*it)])] |=
                subtree[static_cast<size_t>(*it)];
    }
    std::vector<StepInfo> steps;
    for (size_t k = 1; k < order.size(); ++k)
        steps.push_back({order[k], parent[static_cast<size_t>(order[k])],
                         subtree[static_cast<size_t>(order[k])]});
    std::vector<long long> a(static_cast<size_t>(n), 0);
    TraceNode* node = nullptr;
    if (trace) {
        trace->order = order;
        trace->root = TraceNode{};
        node = &trace->root;
    }
    enumerate_rec(cfg, L, H, mode, steps, 0, a, out, node);
    return out;
}

Classification classify(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H,
                        Mode mode, const Twist& t) {
    ClassExpr twisted = apply_twist(cfg, L, t);
    if (!is_semistable(cfg, twisted, H, mode, Scope::ConnectedPairs))
        return Classification::Unstable;
    std::set<Twist> all = enumerate_semistable_twists(cfg, L, H, mode);
    return all.size() == 1 ? Classification::Stable : Classification::StrictlySemistable;
}

}  // namespace sncstab
