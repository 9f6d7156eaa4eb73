#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sncstab/twistenum.hpp"

namespace sncstab {

/// Independent route to the same defect value: expands the bracket sum in
/// terms of complement powers instead of alternating self-powers, so the
/// two implementations share no monomial bookkeeping.
template <class S>
S e_oracle_general(const Configuration& cfg, uint32_t ymask, const ClassVec<S>& M) {
    if (ymask == 0 || (ymask & ~cfg.full_mask()))
        throw PreconditionError("union must be a nonempty subset of components");
    const int d = cfg.dim;
    uint32_t zmask = cfg.full_mask() & ~ymask;
    ClassVec<S> Yv = class_to_vec<S>(subset_class(cfg, ymask));
    ClassVec<S> Zv = class_to_vec<S>(subset_class(cfg, zmask));
    ClassVec<S> Xv = class_to_vec<S>(subset_class(cfg, cfg.full_mask()));
    S chiX{};
    for (int i = 0; i < cfg.n(); ++i)
        chiX += eval_chi<S>(cfg.chi_components[static_cast<size_t>(i)], M);
    for (size_t e = 0; e < cfg.edges.size(); ++e) chiX -= eval_chi<S>(cfg.chi_edges[e], M);
    S chiY{};
    for (int i = 0; i < cfg.n(); ++i)
        if (ymask & (1u << i)) chiY += eval_chi<S>(cfg.chi_components[static_cast<size_t>(i)], M);
    for (size_t e = 0; e < cfg.edges.size(); ++e)
        if ((ymask & (1u << cfg.edges[e].i)) && (ymask & (1u << cfg.edges[e].j)))
            chiY -= eval_chi<S>(cfg.chi_edges[e], M);
    S sum{};
    for (int j = 1; j <= d + 1; ++j) {
        std::vector<const ClassVec<S>*> slots;
        for (int k = 0; k < d + 1 - j; ++k) slots.push_back(&M);
        for (int k = 0; k < j - 1; ++k) slots.push_back(&Zv);
        slots.push_back(&Yv);
        S term = multilinear_eval<S>(cfg.table, slots);
        term *= binomial(d + 1, j);
        sum += term;
    }
    std::vector<const ClassVec<S>*> xslots;
    for (int k = 0; k < d; ++k) xslots.push_back(&M);
    xslots.push_back(&Xv);
    S xd = multilinear_eval<S>(cfg.table, xslots);
    S res = chiX * sum;
    res *= Rational(1, d + 1);
    res -= xd * chiY;
    res *= factorial(d);
    return res;
}

Rational e_value_oracle(const Configuration& cfg, uint32_t ymask, const ClassExpr& M);
Poly e_poly_m_oracle(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                     const ClassExpr& H);

/// Every normalized twist with coordinates in [-W, W] whose application is
/// semistable, decided union by union with no connectivity shortcut.
std::set<Twist> brute_force_twists(const Configuration& cfg, const ClassExpr& L,
                                   const ClassExpr& H, Mode mode, long long window);

struct BalancedRecord {
    uint32_t mask;
    bool balanced;  // the multidegree inequality for this union
    int e_sign;     // sign of the defect for this union
    bool agree;     // balanced iff e_sign <= 0
};

/// Per-union multidegree inequality versus defect sign, for nodal curves of
/// total genus at least 2 with canonical polarization.
std::vector<BalancedRecord> balanced_check(const Configuration& cfg, const ClassExpr& L);

struct OracleCheck {
    std::string name;
    bool pass;
    std::string detail;  // reproducer payload on failure
};

struct OracleReport {
    std::string instance;
    std::vector<OracleCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact algebraic identities on random (union, class, twist) samples.
OracleReport identity_battery(const Configuration& cfg, int samples, uint64_t seed);

/// Degree bounds of the (m, b) expansion with canonical polarization,
/// including the closed-form top coefficients.
OracleReport degree_bound_battery(const Configuration& cfg, uint32_t ymask, const ClassExpr& L);

struct ThresholdReport {
    BigInt m0;            // smallest integer where the sign has stabilized
    Rational analytic;    // 1 + max coefficient ratio bound
    int eventual;         // the stabilized sign
};

ThresholdReport m_threshold(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H);

}  // namespace sncstab
