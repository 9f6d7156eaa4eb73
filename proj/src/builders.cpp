#include "sncstab/builders.hpp"

#include <deque>
#include <functional>
#include <random>
#include <set>
#include <tuple>

namespace sncstab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Configuration curve_builder(const std::vector<int>& genera,
                            const std::vector<CurveEdgeSpec>& edges,
                            const std::map<std::string, std::vector<long long>>& degrees) {
    const int n = static_cast<int>(genera.size());
    require(n >= 1, "at least one component");
    for (int g : genera) require(g >= 0, "genera must be nonnegative");

    Configuration cfg;
    cfg.dim = 1;
    for (int i = 0; i < n; ++i) cfg.syms.components.push_back("Y" + std::to_string(i + 1));
    for (const auto& [name, degs] : degrees) {
        require(name != "K", "bundle name 'K' is reserved for the canonical class");
        require(static_cast<int>(degs.size()) == n,
                "degree vector for '" + name + "' must have one entry per component");
        cfg.syms.bundles.push_back(name);
    }
    cfg.syms.bundles.push_back("K");
    const Sym K = cfg.syms.n_syms() - 1;
    cfg.canonical = K;

    std::vector<long long> nodes_on(static_cast<size_t>(n), 0);
    std::set<std::pair<int, int>> seen;
    for (auto e : edges) {
        if (e.i > e.j) std::swap(e.i, e.j);
        require(e.i >= 0 && e.j < n && e.i != e.j, "edge endpoint out of range");
        require(e.nodes >= 1, "node count must be positive");
        require(seen.insert({e.i, e.j}).second, "duplicate edge");
        cfg.edges.push_back({e.i, e.j});
        cfg.table[mono_sorted({e.i, e.j})] = e.nodes;
        nodes_on[static_cast<size_t>(e.i)] += e.nodes;
        nodes_on[static_cast<size_t>(e.j)] += e.nodes;
        ChiFunctional ce;
        ce.add(0, Mono{}, Rational(e.nodes));
        cfg.chi_edges.push_back(std::move(ce));
    }
    for (int i = 0; i < n; ++i)
        if (nodes_on[static_cast<size_t>(i)] != 0)
            cfg.table[Mono{i, i}] = Rational(-nodes_on[static_cast<size_t>(i)]);
    {
        Sym b = n;
        for (const auto& [name, degs] : degrees) {
            for (int i = 0; i < n; ++i)
                if (degs[static_cast<size_t>(i)] != 0)
                    cfg.table[mono_sorted({b, i})] = Rational(degs[static_cast<size_t>(i)]);
            ++b;
        }
    }
    for (int i = 0; i < n; ++i) {
        long long degk = 2LL * genera[static_cast<size_t>(i)] - 2 + nodes_on[static_cast<size_t>(i)];
        if (degk != 0) cfg.table[mono_sorted({K, i})] = Rational(degk);
    }
    // chi on each component: deg_i(M) + 1 - g_i
    for (int i = 0; i < n; ++i) {
        ChiFunctional ci;
        ci.add(0, Mono{}, Rational(1 - genera[static_cast<size_t>(i)]));
        for (Sym s = 0; s < cfg.syms.n_syms(); ++s) {
            Rational d = cfg.table_at(mono_sorted({s, i}));
            if (!d.is_zero()) ci.add(1, Mono{s}, d);
        }
        cfg.chi_components.push_back(std::move(ci));
    }
    cfg.check_structure();
    require(cfg.connected(), "dual graph must be connected");
    return cfg;
}

namespace {

/// Linear combination of solver variables with rational coefficients.
struct LinComb {
    std::map<int, Rational> c;
    LinComb() = default;
    explicit LinComb(Rational r) {
        if (!r.is_zero()) c[-1] = std::move(r);  // constant slot (unused here)
    }
    bool is_zero() const { return c.empty(); }
    LinComb& operator+=(const LinComb& o) {
        for (const auto& [v, r] : o.c) {
            auto [it, fresh] = c.try_emplace(v, r);
            if (!fresh && (it->second += r).is_zero()) c.erase(it);
        }
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [v, r] : o.c) {
            Rational nr = -r;
            auto [it, fresh] = c.try_emplace(v, nr);
            if (!fresh && (it->second -= r).is_zero()) c.erase(it);
        }
        return *this;
    }
    friend LinComb operator*(const LinComb& a, const Rational& r) {
        LinComb out;
        if (r.is_zero()) return out;
        for (const auto& [v, x] : a.c) out.c[v] = x * r;
        return out;
    }
};

LinComb lc_var(int v) {
    LinComb l;
    l.c[v] = 1;
    return l;
}

struct SynthKey {
    int d, n;
    std::vector<Edge> edges;
    bool operator<(const SynthKey& o) const {
        if (d != o.d) return d < o.d;
        if (n != o.n) return n < o.n;
        if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
        for (size_t k = 0; k < edges.size(); ++k) {
            if (edges[k].i != o.edges[k].i) return edges[k].i < o.edges[k].i;
            if (edges[k].j != o.edges[k].j) return edges[k].j < o.edges[k].j;
        }
        return false;
    }
};

struct SynthSystem {
    Configuration skeleton;  // symbols/edges/dim filled, no data
    // variable layout
    std::map<std::tuple<int, int, int, Mono>, int> var_id;  // (kind, owner, degree, mono)
    std::vector<std::tuple<int, int, int, Mono>> var_key;
    std::vector<std::vector<Rational>> basis;
};

int get_var(SynthSystem& sys, int kind, int owner, int degree, const Mono& m) {
    auto key = std::make_tuple(kind, owner, degree, m);
    auto it = sys.var_id.find(key);
    if (it != sys.var_id.end()) return it->second;
    int id = static_cast<int>(sys.var_key.size());
    sys.var_id.emplace(key, id);
    sys.var_key.push_back(key);
    return id;
}

// multisets of given size over syms [0, ns) whose distinct component
// symbols are pairwise adjacent in cfg
void for_each_clique_mono(const Configuration& cfg, int size,
                          const std::function<void(const Mono&)>& fn) {
    Mono cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int s = from; s < cfg.syms.n_syms(); ++s) {
            if (cfg.syms.is_component(s)) {
                bool ok = true;
                for (Sym t : cur)
                    if (cfg.syms.is_component(t) && t != s && !cfg.adjacent(t, s)) ok = false;
                if (!ok) continue;
            }
            cur.push_back(s);
            rec(s);
            cur.pop_back();
        }
    };
    rec(0);
}

void for_each_any_mono(int ns, int size, const std::function<void(const Mono&)>& fn) {
    Mono cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int s = from; s < ns; ++s) {
            cur.push_back(s);
            rec(s);
            cur.pop_back();
        }
    };
    rec(0);
}

// masks of the two sides of tree edge e
std::pair<uint32_t, uint32_t> tree_split(const Configuration& cfg, size_t e) {
    int a = cfg.edges[e].i, b = cfg.edges[e].j;
    uint32_t seen = 1u << a;
    std::deque<int> q{a};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (size_t f = 0; f < cfg.edges.size(); ++f) {
            if (f == e) continue;
            int w = -1;
            if (cfg.edges[f].i == v) w = cfg.edges[f].j;
            else if (cfg.edges[f].j == v) w = cfg.edges[f].i;
            if (w >= 0 && !(seen & (1u << w))) {
                seen |= 1u << w;
                q.push_back(w);
            }
        }
    }
    (void)b;
    return {seen, cfg.full_mask() & ~seen};
}

SynthSystem build_synth_system(int d, int n, const std::vector<Edge>& tree) {
    SynthSystem sys;
    Configuration& cfg = sys.skeleton;
    cfg.dim = d;
    for (int i = 0; i < n; ++i) cfg.syms.components.push_back("Y" + std::to_string(i + 1));
    cfg.syms.bundles = {"L", "K"};
    cfg.canonical = n + 1;
    cfg.edges = tree;
    cfg.chi_components.resize(static_cast<size_t>(n));
    cfg.chi_edges.resize(tree.size());
    if (!cfg.connected() || tree.size() + 1 != static_cast<size_t>(n))
        throw std::invalid_argument("synth generator requires a tree dual graph");

    const Sym K = n + 1;
    const int ns = cfg.syms.n_syms();

    // variables
    for_each_clique_mono(cfg, d + 1, [&](const Mono& m) {
        bool has_comp = false;
        for (Sym s : m) has_comp = has_comp || cfg.syms.is_component(s);
        if (has_comp) get_var(sys, 0, 0, 0, m);
    });
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= d; ++k)
            for_each_clique_mono(cfg, k, [&](const Mono& m) { get_var(sys, 1, i, k, m); });
    for (size_t e = 0; e < tree.size(); ++e)
        for (int k = 0; k <= d - 1; ++k)
            for_each_clique_mono(cfg, k,
                                 [&](const Mono& m) { get_var(sys, 2, static_cast<int>(e), k, m); });

    auto table_var = [&](const Mono& m) -> int {
        auto it = sys.var_id.find(std::make_tuple(0, 0, 0, m));
        return it == sys.var_id.end() ? -1 : it->second;
    };

    std::vector<std::map<int, Rational>> rows;

    // summing any component into a full monomial with a component gives 0
    for_each_any_mono(ns, d, [&](const Mono& m) {
        bool has_comp = false;
        for (Sym s : m) has_comp = has_comp || cfg.syms.is_component(s);
        if (!has_comp) return;
        std::map<int, Rational> row;
        for (int i = 0; i < n; ++i) {
            int v = table_var(mono_with(m, i));
            if (v >= 0) row[v] += 1;
        }
        if (!row.empty()) rows.push_back(std::move(row));
    });
    // pure-bundle double sum
    for_each_any_mono(ns, d - 1, [&](const Mono& m) {
        for (Sym s : m)
            if (cfg.syms.is_component(s)) return;
        std::map<int, Rational> row;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int v = table_var(mono_with(mono_with(m, i), j));
                if (v >= 0) row[v] += 1;
            }
        if (!row.empty()) rows.push_back(std::move(row));
    });
    // Riemann-Roch shape ties chi top terms to the table
    const Rational dfact = factorial(d);
    for (int w = 0; w < n; ++w) {
        for_each_any_mono(ns, d, [&](const Mono& m) {
            std::map<int, Rational> row;
            auto cit = sys.var_id.find(std::make_tuple(1, w, d, m));
            if (cit != sys.var_id.end()) row[cit->second] += dfact;
            int tv = table_var(mono_with(m, w));
            if (tv >= 0) row[tv] -= 1;
            if (!row.empty()) rows.push_back(std::move(row));
        });
        for_each_any_mono(ns, d - 1, [&](const Mono& m) {
            std::map<int, Rational> row;
            auto cit = sys.var_id.find(std::make_tuple(1, w, d - 1, m));
            if (cit != sys.var_id.end()) row[cit->second] += dfact;
            int t1 = table_var(mono_with(mono_with(m, K), w));
            if (t1 >= 0) row[t1] += Rational(d, 2);
            int t2 = table_var(mono_with(mono_with(m, w), w));
            if (t2 >= 0) row[t2] += Rational(d, 2);
            if (!row.empty()) rows.push_back(std::move(row));
        });
    }
    // chi additivity across each edge cut, both orientations
    auto chi_lc = [&](int kind, int owner, int maxdeg) {
        FormSum<LinComb> f;
        for (int k = 0; k <= maxdeg; ++k)
            for_each_clique_mono(cfg, k, [&](const Mono& m) {
                auto it = sys.var_id.find(std::make_tuple(kind, owner, k, m));
                if (it != sys.var_id.end()) f.add(k, m, lc_var(it->second));
            });
        return f;
    };
    std::vector<FormSum<LinComb>> chiC, chiE;
    for (int i = 0; i < n; ++i) chiC.push_back(chi_lc(1, i, d));
    for (size_t e = 0; e < tree.size(); ++e)
        chiE.push_back(chi_lc(2, static_cast<int>(e), d - 1));
    auto chi_of_mask = [&](uint32_t mask) {
        FormSum<LinComb> f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) form_accumulate(f, chiC[static_cast<size_t>(i)], Rational(1));
        for (size_t e = 0; e < tree.size(); ++e)
            if ((mask & (1u << tree[e].i)) && (mask & (1u << tree[e].j)))
                form_accumulate(f, chiE[e], Rational(-1));
        return f;
    };
    for (size_t e = 0; e < tree.size(); ++e) {
        auto [s1, s2] = tree_split(cfg, e);
        for (int orient = 0; orient < 2; ++orient) {
            uint32_t zmask = orient ? s2 : s1;
            uint32_t ymask = cfg.full_mask() & ~zmask;
            FormSum<LinComb> resid = chi_of_mask(cfg.full_mask());
            form_accumulate(resid, form_shift(chi_of_mask(ymask), subset_class(cfg, ymask)),
                            Rational(-1));
            form_accumulate(resid, chi_of_mask(zmask), Rational(-1));
            for (const auto& part : resid.parts)
                for (const auto& [m, lc] : part.vals)
                    if (!lc.is_zero()) rows.push_back(lc.c);
        }
    }

    sys.basis = nullspace_basis(rows, static_cast<int>(sys.var_key.size()));
    return sys;
}

const SynthSystem& cached_system(int d, int n, const std::vector<Edge>& tree) {
    static std::map<SynthKey, SynthSystem> cache;
    SynthKey key{d, n, tree};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_synth_system(d, n, tree)).first;
    return it->second;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace_basis(
    const std::vector<std::map<int, Rational>>& rows, int nvars) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> dense(static_cast<size_t>(nvars), Rational(0));
        for (const auto& [v, c] : r) dense[static_cast<size_t>(v)] = c;
        m.push_back(std::move(dense));
    }
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < nvars && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][static_cast<size_t>(col)].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        Rational inv = 1 / m[rank][static_cast<size_t>(col)];
        for (int c = col; c < nvars; ++c) m[rank][static_cast<size_t>(c)] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            Rational f = m[r][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c < nvars; ++c)
                m[r][static_cast<size_t>(c)] -= f * m[rank][static_cast<size_t>(c)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(nvars), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < nvars; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(nvars), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[r])] = -m[r][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Configuration synth_generator(int d, int n, const std::vector<Edge>& tree, uint64_t seed) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    std::mt19937_64 gen(seed);
    auto draw = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(gen() % static_cast<uint64_t>(hi - lo + 1));
    };
    if (d == 1) {
        std::vector<int> genera;
        for (int i = 0; i < n; ++i) genera.push_back(static_cast<int>(draw(0, 3)));
        std::vector<CurveEdgeSpec> es;
        for (const auto& e : tree) es.push_back({e.i, e.j, static_cast<int>(draw(1, 3))});
        std::map<std::string, std::vector<long long>> degs;
        std::vector<long long> ldeg;
        for (int i = 0; i < n; ++i) ldeg.push_back(draw(-6, 6));
        degs["L"] = ldeg;
        Configuration cfg = curve_builder(genera, es, degs);
        if (!cfg.connected()) throw std::invalid_argument("synth generator requires a tree");
        return cfg;
    }
    std::vector<Edge> sorted = tree;
    for (auto& e : sorted)
        if (e.i > e.j) std::swap(e.i, e.j);
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    const SynthSystem& sys = cached_system(d, n, sorted);
    if (sys.basis.empty())
        throw PreconditionError("constraint system has no nonzero solutions for this support");

    const int nvars = static_cast<int>(sys.var_key.size());
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rational> x(static_cast<size_t>(nvars), Rational(0));
        for (const auto& bvec : sys.basis) {
            long long c = draw(-9, 9);
            if (c == 0) continue;
            for (int v = 0; v < nvars; ++v)
                if (!bvec[static_cast<size_t>(v)].is_zero())
                    x[static_cast<size_t>(v)] += bvec[static_cast<size_t>(v)] * c;
        }
        BigInt den = 1;
        for (const auto& r : x) den = boost::multiprecision::lcm(den, denominator(r));
        for (auto& r : x) r *= Rational(den);

        Configuration cfg = sys.skeleton;
        for (int v = 0; v < nvars; ++v) {
            const auto& [kind, owner, degree, m] = sys.var_key[static_cast<size_t>(v)];
            const Rational& val = x[static_cast<size_t>(v)];
            if (val.is_zero()) continue;
            if (kind == 0) cfg.table[m] = val;
            else if (kind == 1)
                cfg.chi_components[static_cast<size_t>(owner)].add(degree, m, val);
            else
                cfg.chi_edges[static_cast<size_t>(owner)].add(degree, m, val);
        }
        if (!validate_ok(cfg)) continue;
        // genericity: nonzero canonical volume and nonzero top self-products
        // across every edge cut
        const Sym K = cfg.syms.lookup("K");
        std::vector<ClassExpr> kd(static_cast<size_t>(d), ClassExpr::basis(K));
        kd.push_back(subset_class(cfg, cfg.full_mask()));
        if (intersect(cfg, kd).is_zero()) continue;
        bool ok = true;
        for (size_t e = 0; e < cfg.edges.size() && ok; ++e) {
            auto [s1, s2] = tree_split(cfg, e);
            for (uint32_t side : {s1, s2}) {
                std::vector<ClassExpr> yy(static_cast<size_t>(d + 1), subset_class(cfg, side));
                if (intersect(cfg, yy).is_zero()) ok = false;
            }
        }
        if (!ok) continue;
        return cfg;
    }
    throw PreconditionError("could not draw a generic configuration from the solution space");
}

}  // namespace sncstab
