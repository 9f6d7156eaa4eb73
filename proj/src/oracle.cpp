#include "sncstab/oracle.hpp"

#include <limits>
#include <random>

#include "sncstab/univariate.hpp"

namespace sncstab {

Rational e_value_oracle(const Configuration& cfg, uint32_t ymask, const ClassExpr& M) {
    return e_oracle_general<Rational>(cfg, ymask, class_to_vec<Rational>(M));
}

Poly e_poly_m_oracle(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                     const ClassExpr& H) {
    ClassVec<Poly> M;
    for (const auto& [s, c] : L.coeffs) M[s] += Poly(Rational(c));
    for (const auto& [s, c] : H.coeffs) M[s] += Poly::monomial(1, 0, Rational(c));
    return e_oracle_general<Poly>(cfg, ymask, M);
}

namespace {

std::string class_to_string(const Configuration& cfg, const ClassExpr& M) {
    if (M.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [sym, c] : M.coeffs) {
        if (!first) s += c > 0 ? "+" : "";
        s += std::to_string(c) + "*" + cfg.syms.name(sym);
        first = false;
    }
    return s;
}

bool sign_allowed(int s, Mode mode) { return mode == Mode::Minus ? s <= 0 : s >= 0; }

// per-union data for the curve fast path: the defect of the twisted class
// is affine in the twist with coefficients affine in m
struct CurveMaskData {
    bool decided = false;  // the m-degree >= 2 part decides for every twist
    // coefficient of m and constant term: base value and per-coordinate delta
    bool i64 = false;
    long long p1 = 0, p0 = 0;
    std::vector<long long> q1, q0;
    Rational rp1, rp0;
    std::vector<Rational> rq1, rq0;
};

}  // namespace

std::set<Twist> brute_force_twists(const Configuration& cfg, const ClassExpr& L,
                                   const ClassExpr& H, Mode mode, long long window) {
    const int n = cfg.n();
    if (n > 12) throw PreconditionError("brute force limited to 12 components");
    if (window < 0) throw PreconditionError("window must be nonnegative");
    const uint32_t full = cfg.full_mask();
    std::set<Twist> out;

    if (n == 1) {
        out.insert(Twist{{0}});
        return out;
    }

    bool fast = cfg.dim == 1;
    std::vector<uint32_t> masks;
    for (uint32_t m = 1; m < full; ++m) masks.push_back(m);

    std::vector<CurveMaskData> data;
    if (fast) {
        for (uint32_t mask : masks) {
            Poly base = e_poly_m_oracle(cfg, mask, L, H);
            std::vector<Poly> deltas;
            bool affine_ok = base.deg_m() <= 2;
            for (int i = 1; i < n && affine_ok; ++i) {
                Poly shifted = e_poly_m_oracle(cfg, mask, L + ClassExpr::basis(i), H);
                Poly dlt = shifted - base;
                if (!dlt.coeff(2, 0).is_zero() || dlt.deg_m() > 1) affine_ok = false;
                deltas.push_back(dlt);
            }
            if (!affine_ok) {
                fast = false;
                break;
            }
            CurveMaskData md;
            Rational p2 = base.coeff(2, 0);
            if (!p2.is_zero()) {
                if (!sign_allowed(sign_of(p2), mode)) return out;  // no twist can pass
                md.decided = true;
                data.push_back(std::move(md));
                continue;
            }
            md.rp1 = base.coeff(1, 0);
            md.rp0 = base.coeff(0, 0);
            BigInt den = denominator(md.rp1) * denominator(md.rp0) /
                         boost::multiprecision::gcd(denominator(md.rp1), denominator(md.rp0));
            for (const Poly& dlt : deltas) {
                md.rq1.push_back(dlt.coeff(1, 0));
                md.rq0.push_back(dlt.coeff(0, 0));
                for (const Rational* r : {&md.rq1.back(), &md.rq0.back()})
                    den = den * denominator(*r) /
                          boost::multiprecision::gcd(den, denominator(*r));
            }
            // scale to integers and try the machine-word representation
            BigInt bound = 0;
            auto scaled = [&](const Rational& r) -> BigInt {
                Rational t = r * Rational(den);
                return numerator(t);
            };
            BigInt sp1 = scaled(md.rp1), sp0 = scaled(md.rp0);
            bound = abs(sp1) + abs(sp0);
            std::vector<BigInt> sq1, sq0;
            for (size_t k = 0; k < md.rq1.size(); ++k) {
                sq1.push_back(scaled(md.rq1[k]));
                sq0.push_back(scaled(md.rq0[k]));
                bound += BigInt(window) * (abs(sq1.back()) + abs(sq0.back()));
            }
            if (bound < BigInt(std::numeric_limits<long long>::max() / 4)) {
                md.i64 = true;
                md.p1 = static_cast<long long>(sp1);
                md.p0 = static_cast<long long>(sp0);
                for (size_t k = 0; k < sq1.size(); ++k) {
                    md.q1.push_back(static_cast<long long>(sq1[k]));
                    md.q0.push_back(static_cast<long long>(sq0[k]));
                }
            }
            data.push_back(std::move(md));
        }
    }

    std::vector<long long> a(static_cast<size_t>(n), 0);
    const size_t coords = static_cast<size_t>(n - 1);
    for (size_t k = 1; k <= coords; ++k) a[k] = -window;
    while (true) {
        bool good = true;
        if (fast) {
            for (size_t mi = 0; mi < masks.size() && good; ++mi) {
                const CurveMaskData& md = data[mi];
                if (md.decided) continue;
                if (md.i64) {
                    long long c1 = md.p1, c0 = md.p0;
                    for (size_t k = 0; k < coords; ++k) {
                        c1 += a[k + 1] * md.q1[k];
                        c0 += a[k + 1] * md.q0[k];
                    }
                    int s = c1 != 0 ? (c1 > 0 ? 1 : -1) : (c0 > 0 ? 1 : c0 < 0 ? -1 : 0);
                    good = sign_allowed(s, mode);
                } else {
                    Rational c1 = md.rp1, c0 = md.rp0;
                    for (size_t k = 0; k < coords; ++k) {
                        c1 += Rational(a[k + 1]) * md.rq1[k];
                        c0 += Rational(a[k + 1]) * md.rq0[k];
                    }
                    int s = !c1.is_zero() ? sign_of(c1) : sign_of(c0);
                    good = sign_allowed(s, mode);
                }
            }
        } else {
            ClassExpr twisted = L;
            for (int i = 1; i < n; ++i) twisted.add(i, a[static_cast<size_t>(i)]);
            for (uint32_t mask : masks) {
                int s = eventual_sign(e_poly_m_oracle(cfg, mask, twisted, H));
                if (!sign_allowed(s, mode)) {
                    good = false;
                    break;
                }
            }
        }
        if (good) out.insert(Twist{a});
        size_t k = 1;
        while (k <= coords && a[k] == window) a[k++] = -window;
        if (k > coords) break;
        ++a[k];
    }
    return out;
}

std::vector<BalancedRecord> balanced_check(const Configuration& cfg, const ClassExpr& L) {
    if (cfg.dim != 1) throw PreconditionError("multidegree comparison is for curves only");
    if (!cfg.canonical) throw PreconditionError("no canonical class designated");
    const uint32_t full = cfg.full_mask();
    ClassExpr K = ClassExpr::basis(*cfg.canonical);
    Rational gX = 1 - chi_union(cfg, full, ClassExpr{});
    if (gX < 2) throw PreconditionError("total genus must be at least 2");
    Rational dX = intersect(cfg, {L, subset_class(cfg, full)});
    std::vector<BalancedRecord> out;
    for (uint32_t mask = 1; mask < full; ++mask) {
        ClassExpr Y = subset_class(cfg, mask);
        Rational dY = intersect(cfg, {L, Y});
        Rational gY = 1 - chi_union(cfg, mask, ClassExpr{});
        Rational kY = -intersect(cfg, {Y, Y});
        bool balanced = dY >= dX / (gX - 1) * (gY - 1 + kY / 2) - kY / 2;
        int s = eventual_sign(e_poly_m_oracle(cfg, mask, L, K));
        out.push_back({mask, balanced, s, balanced == (s <= 0)});
    }
    return out;
}

OracleReport identity_battery(const Configuration& cfg, int samples, uint64_t seed) {
    OracleReport rep;
    rep.instance = "n=" + std::to_string(cfg.n()) + " d=" + std::to_string(cfg.dim);
    std::mt19937_64 gen(seed);
    auto draw = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(gen() % static_cast<uint64_t>(hi - lo + 1));
    };
    const int n = cfg.n();
    const uint32_t full = cfg.full_mask();
    struct Tracker {
        std::string name;
        bool pass = true;
        std::string detail;
    };
    std::vector<Tracker> tr = {{"duality"}, {"additivity"}, {"locality"},
                               {"total-vanishing"}, {"total-twist-invariance"}, {"two-routes"}};
    auto fail = [&](size_t idx, const std::string& detail) {
        if (tr[idx].pass) {
            tr[idx].pass = false;
            tr[idx].detail = detail;
        }
    };
    if (n >= 2) {
        for (int it = 0; it < samples; ++it) {
            uint32_t ymask = 1 + static_cast<uint32_t>(draw(0, full - 2));
            uint32_t zmask = full & ~ymask;
            ClassExpr M;
            for (Sym s = 0; s < cfg.syms.n_syms(); ++s) M.add(s, draw(-5, 5));
            std::string where = "Y=" + mask_name(cfg, ymask) + " M=" + class_to_string(cfg, M);
            ClassExpr Ycl = subset_class(cfg, ymask);

            if (e_value_oracle(cfg, zmask, M) != -e_value_oracle(cfg, ymask, M + Ycl))
                fail(0, where);

            // additivity over connected pieces of the union
            {
                Rational sum = 0;
                uint32_t rest = ymask;
                while (rest) {
                    int v = 0;
                    while (!(rest & (1u << v))) ++v;
                    uint32_t piece = 1u << v, grow = piece;
                    do {
                        piece = grow;
                        for (int i = 0; i < n; ++i)
                            if ((rest & (1u << i)) && !(piece & (1u << i)))
                                for (int w : cfg.neighbors(i))
                                    if (piece & (1u << w)) grow |= 1u << i;
                    } while (grow != piece);
                    sum += e_value_oracle(cfg, piece, M);
                    rest &= ~piece;
                }
                if (e_value_oracle(cfg, ymask, M) != sum) fail(1, where);
            }

            // locality: only twists on components meeting the cut matter
            {
                std::vector<long long> t;
                ClassExpr all_twist, cut_twist;
                for (int i = 0; i < n; ++i) {
                    long long ti = draw(-3, 3);
                    all_twist.add(i, ti);
                    bool meets_cut = false;
                    bool in_y = (ymask >> i) & 1;
                    for (int w : cfg.neighbors(i))
                        if (((ymask >> w) & 1) != in_y) meets_cut = true;
                    if (meets_cut) cut_twist.add(i, ti);
                }
                if (e_value_oracle(cfg, ymask, M + all_twist) !=
                    e_value_oracle(cfg, ymask, M + cut_twist))
                    fail(2, where);
            }

            if (!e_value_oracle(cfg, full, M).is_zero()) fail(3, "M=" + class_to_string(cfg, M));

            if (e_value_oracle(cfg, ymask, M + subset_class(cfg, full)) !=
                e_value_oracle(cfg, ymask, M))
                fail(4, where);

            if (e_value(cfg, ymask, M) != e_value_oracle(cfg, ymask, M)) fail(5, where);
        }
    }
    for (const auto& t : tr) rep.checks.push_back({t.name, t.pass, t.detail});
    return rep;
}

OracleReport degree_bound_battery(const Configuration& cfg, uint32_t ymask, const ClassExpr& L) {
    if (!cfg.canonical) throw PreconditionError("no canonical class designated");
    OracleReport rep;
    const int d = cfg.dim;
    rep.instance = "d=" + std::to_string(d) + " Y=" + mask_name(cfg, ymask);
    ClassExpr K = ClassExpr::basis(*cfg.canonical);
    ClassExpr Ycl = subset_class(cfg, ymask);
    ClassExpr X = subset_class(cfg, cfg.full_mask());

    ClassVec<Poly> M;
    for (const auto& [s, c] : L.coeffs) M[s] += Poly(Rational(c));
    for (const auto& [s, c] : K.coeffs) M[s] += Poly::monomial(1, 0, Rational(c));
    for (const auto& [s, c] : Ycl.coeffs) M[s] += Poly::monomial(0, 1, Rational(c));
    Poly p = e_oracle_general<Poly>(cfg, ymask, M);

    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= p.deg_b(); ++i) {
            Poly ai = p.coeff_of_b(i);
            if (!ai.is_zero() && ai.deg_m() > 2 * d - 1 - i) {
                ok = false;
                detail = "b^" + std::to_string(i) + " coefficient has m-degree " +
                         std::to_string(ai.deg_m());
                break;
            }
        }
        rep.checks.push_back({"b-coefficient-m-degrees", ok, detail});
    }
    {
        Poly a0 = p.coeff_of_b(0);
        bool ok = a0.is_zero() || a0.deg_m() <= 2 * d - 2;
        rep.checks.push_back({"constant-coefficient-m-degree", ok,
                              ok ? "" : "m-degree " + std::to_string(a0.deg_m())});
    }
    {
        std::vector<ClassExpr> kd(static_cast<size_t>(d), K);
        kd.push_back(X);
        Rational kvol = intersect(cfg, kd);
        std::vector<ClassExpr> ky(static_cast<size_t>(d - 1), K);
        ky.push_back(Ycl);
        ky.push_back(Ycl);
        Rational expected = -Rational(d, 2) * kvol * intersect(cfg, ky);
        Rational got = p.coeff(2 * d - 2, 1);
        bool ok = got == expected;
        rep.checks.push_back({"linear-coefficient-top-term", ok,
                              ok ? "" : rat_to_string(got) + " vs " + rat_to_string(expected)});
    }
    if (d == 2) {
        Rational y3 = intersect(cfg, {Ycl, Ycl, Ycl});
        Rational k2 = intersect(cfg, {K, K, X});
        Rational lk = intersect(cfg, {L, K, X});
        Rational chi0 = chi_union(cfg, cfg.full_mask(), ClassExpr{});
        Poly expected = Poly::monomial(1, 0, -y3 * k2) + Poly(-y3 * lk + 2 * y3 * chi0);
        Poly got = p.coeff_of_b(2);
        bool ok = got == expected;
        rep.checks.push_back({"surface-quadratic-coefficient", ok,
                              ok ? "" : got.to_string() + " vs " + expected.to_string()});
    }
    return rep;
}

ThresholdReport m_threshold(const Configuration& cfg, uint32_t ymask, const ClassExpr& L,
                            const ClassExpr& H) {
    Poly p = e_poly_m_oracle(cfg, ymask, L, H);
    if (p.is_zero()) return {BigInt(1), Rational(1), 0};
    int ev = eventual_sign(p);
    UPoly u = upoly_from_poly_m(p);
    Rational ratio = 0;
    const Rational& lead = u.back();
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        Rational r = abs(u[i] / lead);
        if (r > ratio) ratio = r;
    }
    ThresholdReport rep{BigInt(1), 1 + ratio, ev};
    if (up_deg(u) == 0) return rep;
    auto roots = isolate_real_roots(u);
    if (roots.empty()) return rep;
    BigInt top = roots.back().root.floor();
    if (top < 1) return rep;
    if (top > 200000) {
        rep.m0 = top + 1;
        return rep;
    }
    for (BigInt m = top; m >= 1; --m) {
        if (sign_of(up_eval(u, Rational(m))) != ev) {
            rep.m0 = m + 1;
            return rep;
        }
    }
    return rep;
}

}  // namespace sncstab
