#pragma once

#include <string>
#include <vector>

#include "sncstab/config.hpp"
#include "sncstab/signregion.hpp"

namespace sncstab {

enum class Mode { Minus, Plus };
enum class Scope { ConnectedPairs, AllUnions };
enum class CaseLabel { Case1, Case2, Case3, CurveExact };
enum class KxClass { MinusTwistable, PlusTwistable, Inconclusive };

/// Solution set in the twist parameter b of the simultaneous eventual-sign
/// conditions on a pair (Y, complement).
struct IntervalReport {
    enum class Kind { UnitInterval, Degenerate };
    Kind kind = Kind::Degenerate;
    // UnitInterval: the set is [s-1, s] with the given endpoint closures
    AlgReal s;
    bool left_closed = false, right_closed = false;
    CaseLabel label = CaseLabel::CurveExact;
    std::vector<BigInt> candidates;  // the integers in the set
    // Degenerate: full labeled partition of the b-line plus a diagnosis
    std::vector<RegionPiece> region;
    std::string reason;
};

/// The stability defect of a union of components, generic in the scalar:
/// Rational for plain values, Poly for the (m, b) expansion.
template <class S>
S e_general(const Configuration& cfg, uint32_t ymask, const ClassVec<S>& M) {
    if (ymask == 0 || (ymask & ~cfg.full_mask()))
        throw PreconditionError("union must be a nonempty subset of components");
    const int d = cfg.dim;
    ClassVec<S> Yv = class_to_vec<S>(subset_class(cfg, ymask));
    ClassVec<S> Xv = class_to_vec<S>(subset_class(cfg, cfg.full_mask()));
    S chiX = chi_union_gen<S>(cfg, cfg.full_mask(), M);
    S chiY = chi_union_gen<S>(cfg, ymask, M);
    S sum{};
    for (int j = 1; j <= d + 1; ++j) {
        std::vector<const ClassVec<S>*> slots;
        for (int k = 0; k < d + 1 - j; ++k) slots.push_back(&M);
        for (int k = 0; k < j; ++k) slots.push_back(&Yv);
        S term = multilinear_eval<S>(cfg.table, slots);
        Rational c = binomial(d + 1, j);
        if (j % 2 == 0) c = -c;
        term *= c;
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

/// e_Y(M) exactly.
Rational e_value(const Configuration& cfg, uint32_t ymask, const ClassExpr& M);

/// e_Y(L + mH + bW) as an exact bivariate polynomial.
Poly e_poly(const Configuration& cfg, uint32_t ymask, const ClassExpr& L, const ClassExpr& H,
            uint32_t wmask);

/// e_Y(L + mH) as a polynomial in m alone.
Poly e_poly_m(const Configuration& cfg, uint32_t ymask, const ClassExpr& L, const ClassExpr& H);

bool eventually_nonpositive(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H);
bool eventually_nonnegative(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H);

/// Semistability over every union in scope; on failure optionally reports
/// the offending union and its defect polynomial.
bool is_semistable(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H, Mode mode,
                   Scope scope, uint32_t* failing = nullptr, Poly* failing_poly = nullptr);

/// Exact solution set in b of the simultaneous conditions for the pair
/// (Y, complement), twisting by b copies of the class of Y.
IntervalReport twistable_interval(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                                  const ClassExpr& H, Mode mode);

/// Sign of [K^d][(K restricted to Y)^{d-1} Y^2]; negative means the pair
/// admits a minus-twistable interval, positive a plus-twistable one.
std::pair<Rational, KxClass> kx_criterion(const Configuration& cfg, uint32_t ymask);

std::string mode_name(Mode m);
std::string case_name(CaseLabel c);
std::string kx_name(KxClass k);
std::string mask_name(const Configuration& cfg, uint32_t mask);

}  // namespace sncstab
