#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sncstab/poly.hpp"
#include "sncstab/rational.hpp"

namespace sncstab {

/// Basis symbol: components are 0..n-1, named line bundles follow.
using Sym = int;
/// Sorted multiset of basis symbols.
using Mono = std::vector<Sym>;

inline Mono mono_sorted(Mono m) {
    std::sort(m.begin(), m.end());
    return m;
}
inline Mono mono_with(Mono m, Sym s) {
    m.push_back(s);
    std::sort(m.begin(), m.end());
    return m;
}
inline Mono mono_without(const Mono& m, size_t pos) {
    Mono r = m;
    r.erase(r.begin() + static_cast<long>(pos));
    return r;
}

struct SymbolTable {
    std::vector<std::string> components;
    std::vector<std::string> bundles;

    int n_components() const { return static_cast<int>(components.size()); }
    int n_syms() const { return static_cast<int>(components.size() + bundles.size()); }
    bool is_component(Sym s) const { return s >= 0 && s < n_components(); }
    const std::string& name(Sym s) const {
        return is_component(s) ? components[static_cast<size_t>(s)]
                               : bundles[static_cast<size_t>(s) - components.size()];
    }
    Sym lookup(const std::string& n) const;  // throws on unknown
};

/// Purely formal integer combination of basis classes.
struct ClassExpr {
    std::map<Sym, long long> coeffs;  // no zero entries

    static ClassExpr basis(Sym s, long long c = 1) {
        ClassExpr e;
        if (c != 0) e.coeffs[s] = c;
        return e;
    }
    ClassExpr& add(Sym s, long long c) {
        if (c == 0) return *this;
        auto [it, fresh] = coeffs.try_emplace(s, c);
        if (!fresh && (it->second += c) == 0) coeffs.erase(it);
        return *this;
    }
    ClassExpr& operator+=(const ClassExpr& o) {
        for (auto& [s, c] : o.coeffs) add(s, c);
        return *this;
    }
    friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
    ClassExpr operator-() const {
        ClassExpr r;
        for (auto& [s, c] : coeffs) r.coeffs[s] = -c;
        return r;
    }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a += -b; }
    long long coeff(Sym s) const {
        auto it = coeffs.find(s);
        return it == coeffs.end() ? 0 : it->second;
    }
    bool operator==(const ClassExpr&) const = default;
};

/// Symmetric multilinear form with values of scalar type S, stored by
/// multiset; missing keys are zero.
template <class S>
struct SymForm {
    int arity = 0;
    std::map<Mono, S> vals;

    void add(const Mono& m, const S& v) {
        auto [it, fresh] = vals.try_emplace(m, v);
        if (!fresh) {
            it->second += v;
            if (is_zero_scalar(it->second)) vals.erase(it);
        } else if (is_zero_scalar(it->second)) {
            vals.erase(it);
        }
    }
    static bool is_zero_scalar(const Rational& r) { return r.is_zero(); }
    static bool is_zero_scalar(const Poly& p) { return p.is_zero(); }
    template <class T>
    static bool is_zero_scalar(const T& t) { return t.is_zero(); }
    bool empty() const { return vals.empty(); }
};

/// Polynomial map given by one symmetric form per degree.
template <class S>
struct FormSum {
    std::vector<SymForm<S>> parts;  // parts[k] has arity k

    void ensure(int k) {
        while (static_cast<int>(parts.size()) <= k) {
            SymForm<S> f;
            f.arity = static_cast<int>(parts.size());
            parts.push_back(std::move(f));
        }
    }
    void add(int k, const Mono& m, const S& v) {
        ensure(k);
        parts[static_cast<size_t>(k)].add(m, v);
    }
};

/// T'(S) = sum_s c_s T(S u {s})  — plug the fixed class into one slot.
template <class S>
SymForm<S> partial_apply(const SymForm<S>& f, const ClassExpr& c) {
    SymForm<S> out;
    out.arity = f.arity - 1;
    for (const auto& [m, v] : f.vals) {
        for (size_t pos = 0; pos < m.size(); ++pos) {
            if (pos > 0 && m[pos] == m[pos - 1]) continue;  // distinct symbols once
            long long cc = 0;
            auto it = c.coeffs.find(m[pos]);
            if (it != c.coeffs.end()) cc = it->second;
            if (cc == 0) continue;
            out.add(mono_without(m, pos), v * Rational(cc));
        }
    }
    return out;
}

/// F(M + c) as a FormSum in M.
template <class S>
FormSum<S> form_shift(const FormSum<S>& f, const ClassExpr& c) {
    FormSum<S> out;
    for (size_t k = 0; k < f.parts.size(); ++k) {
        SymForm<S> cur = f.parts[k];
        Rational binom = 1;
        for (int r = static_cast<int>(k); r >= 0; --r) {
            for (const auto& [m, v] : cur.vals) out.add(r, m, v * binom);
            if (r > 0) {
                cur = partial_apply(cur, c);
                binom = binom * r / Rational(static_cast<int>(k) - r + 1);
            }
        }
    }
    return out;
}

template <class S>
void form_accumulate(FormSum<S>& into, const FormSum<S>& from, const Rational& scale) {
    for (size_t k = 0; k < from.parts.size(); ++k)
        for (const auto& [m, v] : from.parts[k].vals) into.add(static_cast<int>(k), m, v * scale);
}

using RatForm = SymForm<Rational>;
using ChiFunctional = FormSum<Rational>;

struct Edge {
    int i, j;  // i < j
    bool operator==(const Edge&) const = default;
};

/// Combinatorial model of an SNC degeneration fiber.
struct Configuration {
    int dim = 1;
    SymbolTable syms;
    std::vector<Edge> edges;
    std::map<Mono, Rational> table;  // intersection tensor, multisets of size dim+1
    std::vector<ChiFunctional> chi_components;
    std::vector<ChiFunctional> chi_edges;
    std::optional<Sym> canonical;

    int n() const { return syms.n_components(); }
    bool adjacent(int i, int j) const;
    std::vector<int> neighbors(int v) const;
    bool connected_mask(uint32_t mask) const;
    bool connected() const;
    bool is_tree() const;
    uint32_t full_mask() const { return (n() >= 32) ? ~0u : ((1u << n()) - 1); }

    Rational table_at(const Mono& m) const {
        auto it = table.find(m);
        return it == table.end() ? Rational(0) : it->second;
    }
    /// Structural well-formedness; throws std::invalid_argument on problems.
    void check_structure() const;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // empty on pass
};

/// The mathematical validation checks (connectivity, adjacency vanishing,
/// X-squared relations, Mayer-Vietoris, Hirzebruch-Riemann-Roch shape,
/// edge/table consistency).
std::vector<CheckResult> validate(const Configuration& cfg);
bool validate_ok(const Configuration& cfg);

ClassExpr subset_class(const Configuration& cfg, uint32_t mask);

/// Multilinear evaluation helpers, generic over the coefficient scalar.
template <class S>
using ClassVec = std::map<Sym, S>;

template <class S>
void ml_rec(const std::map<Mono, Rational>& table,
            const std::vector<const ClassVec<S>*>& classes, size_t idx, Mono& chosen,
            const S& partial, S& acc) {
    if (idx == classes.size()) {
        Mono key = mono_sorted(chosen);
        auto it = table.find(key);
        if (it != table.end()) acc += partial * S(Rational(it->second));
        return;
    }
    for (const auto& [s, c] : *classes[idx]) {
        chosen.push_back(s);
        S next = partial * c;
        ml_rec(table, classes, idx + 1, chosen, next, acc);
        chosen.pop_back();
    }
}

template <class S>
S multilinear_eval(const std::map<Mono, Rational>& table,
                   const std::vector<const ClassVec<S>*>& classes) {
    S acc{};
    Mono chosen;
    chosen.reserve(classes.size());
    S one{Rational(1)};
    ml_rec(table, classes, 0, chosen, one, acc);
    return acc;
}

template <class S>
S eval_form_diag(const SymForm<Rational>& f, const ClassVec<S>& M) {
    if (f.arity == 0) {
        auto it = f.vals.find(Mono{});
        return it == f.vals.end() ? S{} : S(Rational(it->second));
    }
    std::vector<const ClassVec<S>*> cl(static_cast<size_t>(f.arity), &M);
    return multilinear_eval<S>(f.vals, cl);
}

template <class S>
S eval_chi(const ChiFunctional& chi, const ClassVec<S>& M) {
    S acc{};
    for (const auto& part : chi.parts) acc += eval_form_diag<S>(part, M);
    return acc;
}

template <class S>
S chi_union_gen(const Configuration& cfg, uint32_t mask, const ClassVec<S>& M) {
    S acc{};
    for (int i = 0; i < cfg.n(); ++i)
        if (mask & (1u << i)) acc += eval_chi<S>(cfg.chi_components[static_cast<size_t>(i)], M);
    for (size_t e = 0; e < cfg.edges.size(); ++e) {
        if ((mask & (1u << cfg.edges[e].i)) && (mask & (1u << cfg.edges[e].j)))
            acc -= eval_chi<S>(cfg.chi_edges[e], M);
    }
    return acc;
}

template <class S>
ClassVec<S> class_to_vec(const ClassExpr& e) {
    ClassVec<S> v;
    for (const auto& [s, c] : e.coeffs) v[s] = S(Rational(c));
    return v;
}

/// Exact intersection number of dim+1 classes; at least one must have a
/// nonzero component part.
Rational intersect(const Configuration& cfg, const std::vector<ClassExpr>& classes);

/// chi of the union of components in `mask` at the class M.
Rational chi_union(const Configuration& cfg, uint32_t mask, const ClassExpr& M);

Rational factorial(int k);
Rational binomial(int nn, int kk);

std::string mono_to_string(const SymbolTable& syms, const Mono& m);

/// Raised when an operation's mathematical preconditions are not met
/// (as opposed to malformed input, which raises std::invalid_argument).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sncstab
