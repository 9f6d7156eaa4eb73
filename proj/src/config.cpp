#include "sncstab/config.hpp"

#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace sncstab {

Sym SymbolTable::lookup(const std::string& nm) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i] == nm) return static_cast<Sym>(i);
    for (size_t i = 0; i < bundles.size(); ++i)
        if (bundles[i] == nm) return static_cast<Sym>(components.size() + i);
    throw std::invalid_argument("unknown symbol: '" + nm + "'");
}

std::string mono_to_string(const SymbolTable& syms, const Mono& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += syms.name(m[i]);
    }
    return s;
}

Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Rational binomial(int nn, int kk) {
    if (kk < 0 || kk > nn) return 0;
    Rational r = 1;
    for (int i = 0; i < kk; ++i) r = r * (nn - i) / (i + 1);
    return r;
}

bool Configuration::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
        if (e.i == i && e.j == j) return true;
    return false;
}

std::vector<int> Configuration::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.i == v) out.push_back(e.j);
        if (e.j == v) out.push_back(e.i);
    }
    return out;
}

bool Configuration::connected_mask(uint32_t mask) const {
    if (mask == 0) return false;
    int start = -1;
    for (int i = 0; i < n(); ++i)
        if (mask & (1u << i)) {
            start = i;
            break;
        }
    uint32_t seen = 1u << start;
    std::deque<int> q{start};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : neighbors(v)) {
            uint32_t bit = 1u << w;
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                q.push_back(w);
            }
        }
    }
    return seen == mask;
}

bool Configuration::connected() const { return connected_mask(full_mask()); }

bool Configuration::is_tree() const {
    return connected() && edges.size() + 1 == static_cast<size_t>(n());
}

void Configuration::check_structure() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (dim < 1) fail("dimension must be at least 1");
    if (n() < 1) fail("at least one component is required");
    if (n() > 30) fail("too many components");
    std::set<std::string> names;
    for (const auto& nm : syms.components) {
        if (nm.empty()) fail("empty component name");
        if (!names.insert(nm).second) fail("duplicate symbol name: '" + nm + "'");
    }
    for (const auto& nm : syms.bundles) {
        if (nm.empty()) fail("empty bundle name");
        if (!names.insert(nm).second) fail("duplicate symbol name: '" + nm + "'");
    }
    std::set<std::pair<int, int>> eset;
    for (const auto& e : edges) {
        if (e.i < 0 || e.j >= n() || e.i >= e.j)
            fail("bad edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
        if (!eset.insert({e.i, e.j}).second)
            fail("duplicate edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    }
    for (const auto& [m, v] : table) {
        if (static_cast<int>(m.size()) != dim + 1)
            fail("intersection monomial of wrong length: " + mono_to_string(syms, m));
        bool has_comp = false;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] < 0 || m[k] >= syms.n_syms())
                fail("intersection monomial with unknown symbol");
            if (k > 0 && m[k] < m[k - 1]) fail("unsorted intersection monomial");
            has_comp = has_comp || syms.is_component(m[k]);
        }
        if (!has_comp)
            fail("intersection monomial without a component: " + mono_to_string(syms, m));
        if (v.is_zero()) fail("explicit zero in intersection table");
    }
    if (chi_components.size() != static_cast<size_t>(n()))
        fail("chi data must cover every component");
    if (chi_edges.size() != edges.size()) fail("chi data must cover every edge");
    auto check_chi = [&](const ChiFunctional& chi, int maxdeg, const std::string& where) {
        if (static_cast<int>(chi.parts.size()) > maxdeg + 1)
            fail("chi degree too high for " + where);
        for (size_t k = 0; k < chi.parts.size(); ++k) {
            if (chi.parts[k].arity != static_cast<int>(k)) fail("chi arity mismatch in " + where);
            for (const auto& [m, v] : chi.parts[k].vals) {
                if (m.size() != k) fail("chi monomial of wrong length in " + where);
                for (size_t t = 0; t < m.size(); ++t) {
                    if (m[t] < 0 || m[t] >= syms.n_syms())
                        fail("chi monomial with unknown symbol in " + where);
                    if (t > 0 && m[t] < m[t - 1]) fail("unsorted chi monomial in " + where);
                }
                if (v.is_zero()) fail("explicit zero chi coefficient in " + where);
            }
        }
    };
    for (int i = 0; i < n(); ++i)
        check_chi(chi_components[static_cast<size_t>(i)], dim, syms.components[static_cast<size_t>(i)]);
    for (size_t e = 0; e < edges.size(); ++e)
        check_chi(chi_edges[e], dim - 1,
                  "edge (" + std::to_string(edges[e].i) + "," + std::to_string(edges[e].j) + ")");
    if (canonical) {
        if (*canonical < n() || *canonical >= syms.n_syms())
            fail("canonical class must name a bundle symbol");
    }
}

ClassExpr subset_class(const Configuration& cfg, uint32_t mask) {
    ClassExpr e;
    for (int i = 0; i < cfg.n(); ++i)
        if (mask & (1u << i)) e.add(i, 1);
    return e;
}

Rational intersect(const Configuration& cfg, const std::vector<ClassExpr>& classes) {
    if (static_cast<int>(classes.size()) != cfg.dim + 1)
        throw PreconditionError("intersection number needs exactly dim+1 classes");
    bool any_comp = false;
    for (const auto& c : classes)
        for (const auto& [s, v] : c.coeffs)
            if (cfg.syms.is_component(s) && v != 0) any_comp = true;
    if (!any_comp)
        throw PreconditionError("intersection number needs a component class in some slot");
    std::vector<ClassVec<Rational>> vecs;
    vecs.reserve(classes.size());
    for (const auto& c : classes) vecs.push_back(class_to_vec<Rational>(c));
    std::vector<const ClassVec<Rational>*> ptrs;
    for (const auto& v : vecs) ptrs.push_back(&v);
    return multilinear_eval<Rational>(cfg.table, ptrs);
}

Rational chi_union(const Configuration& cfg, uint32_t mask, const ClassExpr& M) {
    if (mask == 0) throw PreconditionError("chi of the empty union is undefined");
    if (mask & ~cfg.full_mask()) throw PreconditionError("union mask out of range");
    return chi_union_gen<Rational>(cfg, mask, class_to_vec<Rational>(M));
}

namespace {

// All multisets of the given size over symbols [0, ns).
void enumerate_monos(int ns, int size, Mono& cur, int from,
                     const std::function<void(const Mono&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    for (int s = from; s < ns; ++s) {
        cur.push_back(s);
        enumerate_monos(ns, size, cur, s, fn);
        cur.pop_back();
    }
}

void for_each_mono(int ns, int size, const std::function<void(const Mono&)>& fn) {
    Mono cur;
    enumerate_monos(ns, size, cur, 0, fn);
}

// All multisets of the given size over bundle symbols only.
void for_each_bundle_mono(const SymbolTable& syms, int size,
                          const std::function<void(const Mono&)>& fn) {
    Mono cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int s = from; s < syms.n_syms(); ++s) {
            cur.push_back(s);
            rec(s);
            cur.pop_back();
        }
    };
    rec(syms.n_components());
}

ChiFunctional chi_poly_of_mask(const Configuration& cfg, uint32_t mask) {
    ChiFunctional out;
    for (int i = 0; i < cfg.n(); ++i)
        if (mask & (1u << i))
            form_accumulate(out, cfg.chi_components[static_cast<size_t>(i)], Rational(1));
    for (size_t e = 0; e < cfg.edges.size(); ++e)
        if ((mask & (1u << cfg.edges[e].i)) && (mask & (1u << cfg.edges[e].j)))
            form_accumulate(out, cfg.chi_edges[e], Rational(-1));
    return out;
}

bool form_sum_zero(const FormSum<Rational>& f, Mono* witness) {
    for (const auto& part : f.parts)
        for (const auto& [m, v] : part.vals)
            if (!v.is_zero()) {
                if (witness) *witness = m;
                return false;
            }
    return true;
}

// Component masks of the two sides after deleting edge e; nullopt if the
// edge is not a bridge.
std::optional<std::pair<uint32_t, uint32_t>> bridge_split(const Configuration& cfg, size_t e) {
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
    if (seen & (1u << b)) return std::nullopt;
    return std::make_pair(seen, cfg.full_mask() & ~seen);
}

}  // namespace

std::vector<CheckResult> validate(const Configuration& cfg) {
    cfg.check_structure();
    std::vector<CheckResult> out;
    const int d = cfg.dim;
    const int ns = cfg.syms.n_syms();

    // dual graph connectivity
    {
        CheckResult r{"connectivity", cfg.connected(), ""};
        if (!r.pass) r.witness = "the dual graph is disconnected";
        out.push_back(r);
    }

    // products over non-adjacent component pairs vanish
    {
        CheckResult r{"adjacency-vanishing", true, ""};
        for (const auto& [m, v] : cfg.table) {
            for (size_t p = 0; p < m.size() && r.pass; ++p)
                for (size_t q = p + 1; q < m.size(); ++q) {
                    if (!cfg.syms.is_component(m[p]) || !cfg.syms.is_component(m[q])) continue;
                    if (m[p] != m[q] && !cfg.adjacent(m[p], m[q])) {
                        r.pass = false;
                        r.witness = "nonzero product " + mono_to_string(cfg.syms, m) +
                                    " over non-adjacent components";
                        break;
                    }
                }
            if (!r.pass) break;
        }
        out.push_back(r);
    }

    // the total fiber class multiplies to zero: summing the table over one
    // extra component slot gives zero whenever a component is present
    {
        CheckResult r{"fiber-class-relations", true, ""};
        for_each_mono(ns, d, [&](const Mono& m) {
            if (!r.pass) return;
            bool has_comp = false;
            for (Sym s : m) has_comp = has_comp || cfg.syms.is_component(s);
            if (!has_comp) return;
            Rational sum = 0;
            for (int i = 0; i < cfg.n(); ++i) sum += cfg.table_at(mono_with(m, i));
            if (!sum.is_zero()) {
                r.pass = false;
                r.witness = "sum over components against " + mono_to_string(cfg.syms, m) +
                            " is " + rat_to_string(sum);
            }
        });
        // pure bundle slots: the double sum over two extra component slots
        if (r.pass && d >= 1) {
            for_each_bundle_mono(cfg.syms, d - 1, [&](const Mono& m) {
                if (!r.pass) return;
                Rational sum = 0;
                for (int i = 0; i < cfg.n(); ++i)
                    for (int j = 0; j < cfg.n(); ++j)
                        sum += cfg.table_at(mono_with(mono_with(m, i), j));
                if (!sum.is_zero()) {
                    r.pass = false;
                    r.witness = "double sum over components against " +
                                mono_to_string(cfg.syms, m) + " is " + rat_to_string(sum);
                }
            });
        }
        out.push_back(r);
    }

    // Mayer-Vietoris across every bridge, as an identity of polynomials
    {
        CheckResult r{"mayer-vietoris", true, ""};
        for (size_t e = 0; e < cfg.edges.size() && r.pass; ++e) {
            auto split = bridge_split(cfg, e);
            if (!split) continue;
            for (int orient = 0; orient < 2 && r.pass; ++orient) {
                uint32_t zmask = orient ? split->second : split->first;
                uint32_t ymask = cfg.full_mask() & ~zmask;
                FormSum<Rational> lhs = chi_poly_of_mask(cfg, zmask);
                FormSum<Rational> rhs = chi_poly_of_mask(cfg, cfg.full_mask());
                FormSum<Rational> shifted =
                    form_shift(chi_poly_of_mask(cfg, ymask), subset_class(cfg, ymask));
                form_accumulate(rhs, shifted, Rational(-1));
                form_accumulate(rhs, lhs, Rational(-1));
                Mono w;
                if (!form_sum_zero(rhs, &w)) {
                    r.pass = false;
                    r.witness = "cutting edge (" + std::to_string(cfg.edges[e].i) + "," +
                                std::to_string(cfg.edges[e].j) + ") breaks chi additivity at " +
                                mono_to_string(cfg.syms, w);
                }
            }
        }
        out.push_back(r);
    }

    // Riemann-Roch shape: with a canonical class designated, the top two
    // graded pieces of chi on each component are forced by the table
    if (cfg.canonical) {
        CheckResult r{"riemann-roch-shape", true, ""};
        Sym K = *cfg.canonical;
        for (int w = 0; w < cfg.n() && r.pass; ++w) {
            const ChiFunctional& chi = cfg.chi_components[static_cast<size_t>(w)];
            auto chi_at = [&](int k, const Mono& m) -> Rational {
                if (k >= static_cast<int>(chi.parts.size())) return 0;
                auto it = chi.parts[static_cast<size_t>(k)].vals.find(m);
                return it == chi.parts[static_cast<size_t>(k)].vals.end() ? Rational(0)
                                                                          : it->second;
            };
            for_each_mono(ns, d, [&](const Mono& m) {
                if (!r.pass) return;
                Rational lhs = factorial(d) * chi_at(d, m) - cfg.table_at(mono_with(m, w));
                if (!lhs.is_zero()) {
                    r.pass = false;
                    r.witness = "top chi term on " + cfg.syms.components[static_cast<size_t>(w)] +
                                " disagrees with the table at " + mono_to_string(cfg.syms, m);
                }
            });
            if (!r.pass) break;
            for_each_mono(ns, d - 1, [&](const Mono& m) {
                if (!r.pass) return;
                Rational lhs = factorial(d) * chi_at(d - 1, m) +
                               Rational(d, 2) * (cfg.table_at(mono_with(mono_with(m, K), w)) +
                                                 cfg.table_at(mono_with(mono_with(m, w), w)));
                if (!lhs.is_zero()) {
                    r.pass = false;
                    r.witness = "subtop chi term on " +
                                cfg.syms.components[static_cast<size_t>(w)] +
                                " disagrees with the table at " + mono_to_string(cfg.syms, m);
                }
            });
        }
        out.push_back(r);
    }

    // declared edges and nonzero table entries must agree
    {
        CheckResult r{"edge-witnesses", true, ""};
        for (const auto& e : cfg.edges) {
            bool found = false;
            for (const auto& [m, v] : cfg.table) {
                bool hi = false, hj = false;
                for (Sym s : m) {
                    hi = hi || (s == e.i);
                    hj = hj || (s == e.j);
                }
                if (hi && hj) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                r.pass = false;
                r.witness = "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                            ") has no nonzero intersection witness";
                break;
            }
        }
        out.push_back(r);
    }

    return out;
}

bool validate_ok(const Configuration& cfg) {
    for (const auto& c : validate(cfg))
        if (!c.pass) return false;
    return true;
}

}  // namespace sncstab
