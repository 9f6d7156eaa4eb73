#include "sncstab/stability.hpp"

#include <stdexcept>

namespace sncstab {

std::string mode_name(Mode m) { return m == Mode::Minus ? "minus" : "plus"; }

std::string case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        default: return "CurveExact";
    }
}

std::string kx_name(KxClass k) {
    switch (k) {
        case KxClass::MinusTwistable: return "MinusTwistable";
        case KxClass::PlusTwistable: return "PlusTwistable";
        default: return "Inconclusive";
    }
}

std::string mask_name(const Configuration& cfg, uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < cfg.n(); ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += cfg.syms.components[static_cast<size_t>(i)];
            first = false;
        }
    return s + "}";
}

Rational e_value(const Configuration& cfg, uint32_t ymask, const ClassExpr& M) {
    return e_general<Rational>(cfg, ymask, class_to_vec<Rational>(M));
}

namespace {

ClassVec<Poly> poly_class(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H,
                          uint32_t wmask) {
    ClassVec<Poly> M;
    for (const auto& [s, c] : L.coeffs) M[s] += Poly(Rational(c));
    for (const auto& [s, c] : H.coeffs) M[s] += Poly::monomial(1, 0, Rational(c));
    for (int i = 0; i < cfg.n(); ++i)
        if (wmask & (1u << i)) M[i] += Poly::monomial(0, 1, Rational(1));
    return M;
}

// sign of f(m, b0) for large m at an exact algebraic b0
int eventual_sign_at(const Poly& f, const AlgReal& b0) {
    auto coeffs = f.coeffs_by_m();
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Poly& c = coeffs[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        int s;
        if (b0.is_rational()) {
            s = sign_of(c.eval(Rational(0), b0.rational_value()));
        } else {
            s = sign_at(upoly_from_poly_b(c), b0);
        }
        if (s != 0) return s;
    }
    return 0;
}

}  // namespace

Poly e_poly(const Configuration& cfg, uint32_t ymask, const ClassExpr& L, const ClassExpr& H,
            uint32_t wmask) {
    if (wmask == 0 || (wmask & ~cfg.full_mask()))
        throw PreconditionError("twisting subset must be a nonempty subset of components");
    return e_general<Poly>(cfg, ymask, poly_class(cfg, L, H, wmask));
}

Poly e_poly_m(const Configuration& cfg, uint32_t ymask, const ClassExpr& L, const ClassExpr& H) {
    ClassVec<Poly> M;
    for (const auto& [s, c] : L.coeffs) M[s] += Poly(Rational(c));
    for (const auto& [s, c] : H.coeffs) M[s] += Poly::monomial(1, 0, Rational(c));
    return e_general<Poly>(cfg, ymask, M);
}

bool eventually_nonpositive(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H) {
    return eventual_sign(e_poly_m(cfg, ymask, L, H)) <= 0;
}

bool eventually_nonnegative(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H) {
    return eventual_sign(e_poly_m(cfg, ymask, L, H)) >= 0;
}

bool is_semistable(const Configuration& cfg, const ClassExpr& L, const ClassExpr& H, Mode mode,
                   Scope scope, uint32_t* failing, Poly* failing_poly) {
    uint32_t full = cfg.full_mask();
    for (uint32_t mask = 1; mask < full; ++mask) {
        if (scope == Scope::ConnectedPairs &&
            (!cfg.connected_mask(mask) || !cfg.connected_mask(full & ~mask)))
            continue;
        Poly p = e_poly_m(cfg, mask, L, H);
        int s = eventual_sign(p);
        bool ok = (mode == Mode::Minus) ? (s <= 0) : (s >= 0);
        if (!ok) {
            if (failing) *failing = mask;
            if (failing_poly) *failing_poly = p;
            return false;
        }
    }
    return true;
}

IntervalReport twistable_interval(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                                  const ClassExpr& H, Mode mode) {
    uint32_t full = cfg.full_mask();
    if (ymask == 0) throw PreconditionError("union must be nonempty");
    if ((ymask & ~full) || ymask == full)
        throw PreconditionError("union must be a proper subset of the components");
    uint32_t zmask = full & ~ymask;
    if (!cfg.connected_mask(ymask) || !cfg.connected_mask(zmask))
        throw PreconditionError("union and complement must both be connected");

    const int d = cfg.dim;
    Poly f = e_poly(cfg, ymask, L, H, ymask);
    Poly g = e_poly(cfg, zmask, L, H, ymask);
    SignRegion rf = eventual_sign_region(f.coeffs_by_m());
    SignRegion rg = eventual_sign_region(g.coeffs_by_m());
    auto ok = [&](int sf, int sg) {
        return mode == Mode::Minus ? (sf <= 0 && sg <= 0) : (sf >= 0 && sg >= 0);
    };

    SignRegion comb;
    comb.cuts = merge_cuts(rf.cuts, rg.cuts);
    for (const auto& cut : comb.cuts)
        comb.point_sign.push_back(ok(rf.sign_at_point(cut), rg.sign_at_point(cut)) ? 1 : 0);
    for (const auto& x : interleave_samples(comb.cuts)) {
        AlgReal ax{x};
        comb.interval_sign.push_back(ok(rf.sign_at_point(ax), rg.sign_at_point(ax)) ? 1 : 0);
    }
    std::vector<RegionPiece> pieces = region_pieces(comb);

    IntervalReport rep;
    rep.region = pieces;
    std::vector<const RegionPiece*> sol;
    for (const auto& p : pieces)
        if (p.sign == 1) sol.push_back(&p);

    if (sol.empty()) {
        rep.reason = "the two eventual-sign conditions have no common solution";
        return rep;
    }
    if (sol.size() > 1) {
        rep.reason = "the solution set has multiple pieces";
        return rep;
    }
    const RegionPiece& p = *sol.front();
    if (p.lo_unbounded || p.hi_unbounded) {
        if (f.deg_b() <= 0 && g.deg_b() <= 0)
            rep.reason = "the defect polynomials do not depend on the twist parameter";
        else
            rep.reason = "the solution set is unbounded";
        return rep;
    }
    if (AlgReal::compare(p.lo + Rational(1), p.hi) != 0) {
        rep.reason = "the solution set is an interval of non-unit length";
        return rep;
    }
    if (!p.lo_closed && !p.hi_closed) {
        rep.reason = "the solution set is an open unit interval containing neither endpoint";
        return rep;
    }

    rep.kind = IntervalReport::Kind::UnitInterval;
    rep.s = p.hi;
    rep.left_closed = p.lo_closed;
    rep.right_closed = p.hi_closed;
    BigInt base = p.lo.floor();
    for (int off = 0; off <= 2; ++off) {
        BigInt k = base + off;
        AlgReal ak{Rational(k)};
        int cl = AlgReal::compare(ak, p.lo);
        if (cl < 0 || (cl == 0 && !p.lo_closed)) continue;
        int cr = AlgReal::compare(ak, p.hi);
        if (cr > 0 || (cr == 0 && !p.hi_closed)) continue;
        rep.candidates.push_back(k);
    }

    CaseLabel from_closures = (rep.left_closed && rep.right_closed) ? CaseLabel::Case3
                              : rep.left_closed                     ? CaseLabel::Case2
                                                                    : CaseLabel::Case1;
    if (d == 1) {
        rep.label = CaseLabel::CurveExact;
        return rep;
    }
    Rational A1 = f.coeff(2 * d - 2, 1);
    Poly A0 = f.coeff_of_b(0);
    bool h_is_k = cfg.canonical && H == ClassExpr::basis(*cfg.canonical);
    bool gate = !A1.is_zero() && (A0.is_zero() || A0.deg_m() <= 2 * d - 2);
    if (!gate) {
        rep.label = from_closures;
        return rep;
    }
    int qs = eventual_sign_at(f, rep.s);
    CaseLabel lab = (qs == 0)                           ? CaseLabel::Case3
                    : ((qs > 0) == (sign_of(A1) > 0))   ? CaseLabel::Case2
                                                        : CaseLabel::Case1;
    if (lab != from_closures) {
        if (h_is_k)
            throw std::logic_error("case label and endpoint closures disagree on a canonical "
                                   "polarization; this indicates an internal error");
        rep.label = from_closures;
        return rep;
    }
    rep.label = lab;
    if (h_is_k) {
        Rational s_fast = -A0.coeff(2 * d - 2, 0) / A1;
        if (AlgReal::compare(rep.s, AlgReal{s_fast}) != 0)
            throw std::logic_error("endpoint from the sign region disagrees with the "
                                   "coefficient-ratio endpoint; this indicates an internal error");
    }
    return rep;
}

std::pair<Rational, KxClass> kx_criterion(const Configuration& cfg, uint32_t ymask) {
    if (!cfg.canonical) throw PreconditionError("no canonical class designated");
    if (ymask == 0 || (ymask & ~cfg.full_mask()) || ymask == cfg.full_mask())
        throw PreconditionError("union must be a nonempty proper subset");
    const int d = cfg.dim;
    ClassExpr K = ClassExpr::basis(*cfg.canonical);
    ClassExpr Y = subset_class(cfg, ymask);
    std::vector<ClassExpr> kd(static_cast<size_t>(d), K);
    kd.push_back(subset_class(cfg, cfg.full_mask()));
    Rational kvol = intersect(cfg, kd);
    std::vector<ClassExpr> ky(static_cast<size_t>(d - 1), K);
    ky.push_back(Y);
    ky.push_back(Y);
    Rational edgev = intersect(cfg, ky);
    Rational value = kvol * edgev;
    KxClass cls = value < 0   ? KxClass::MinusTwistable
                  : value > 0 ? KxClass::PlusTwistable
                              : KxClass::Inconclusive;
    return {value, cls};
}

}  // namespace sncstab
