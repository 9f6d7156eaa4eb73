#include "sncstab/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sncstab {

UPoly up_normalize(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Rational up_eval(const UPoly& p, const Rational& x) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly up_derivative(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<int>(i)));
    return up_normalize(std::move(d));
}

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_normalize(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_normalize(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_normalize(std::move(r));
}

void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    r = a;
    q.assign(a.size(), Rational(0));
    while (r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r = up_normalize(std::move(r));
    }
    q = up_normalize(std::move(q));
    r = up_normalize(std::move(r));
}

UPoly up_div_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    up_divmod(a, b, q, r);
    if (!r.empty()) throw std::logic_error("up_div_exact: nonzero remainder");
    return q;
}

UPoly up_gcd(UPoly a, UPoly b) {
    a = up_normalize(std::move(a));
    b = up_normalize(std::move(b));
    while (!b.empty()) {
        UPoly q, r;
        up_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

UPoly up_squarefree_part(const UPoly& p) {
    if (up_deg(p) <= 1) return p;
    UPoly g = up_gcd(p, up_derivative(p));
    if (up_deg(g) == 0) return p;
    return up_div_exact(p, g);
}

std::vector<std::pair<UPoly, int>> up_squarefree_decomposition(const UPoly& p0) {
    // Yun's algorithm.
    std::vector<std::pair<UPoly, int>> out;
    UPoly p = up_normalize(p0);
    if (up_deg(p) < 1) return out;
    UPoly dp = up_derivative(p);
    UPoly a = up_gcd(p, dp);
    UPoly b = up_div_exact(p, a);
    UPoly c = up_div_exact(dp, a);
    UPoly d = up_sub(c, up_derivative(b));
    int i = 1;
    while (up_deg(b) > 0) {
        UPoly f = up_gcd(b, d);
        if (up_deg(f) > 0) out.emplace_back(f, i);
        b = up_div_exact(b, f);
        c = up_div_exact(d, f);
        d = up_sub(c, up_derivative(b));
        ++i;
    }
    return out;
}

Rational up_root_bound(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("root bound of zero polynomial");
    Rational m = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational a = abs(p[i] / p.back());
        if (a > m) m = a;
    }
    Rational bound = m + 1;
    Rational b = 1;
    while (b < bound) b *= 2;
    return b;
}

namespace {

// q(x) = p(lo + (hi-lo)x), by Horner with polynomial accumulator.
UPoly compose_affine(const UPoly& p, const Rational& lo, const Rational& w) {
    UPoly acc;  // polynomial in x
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        // acc = acc*(lo + w x) + c
        UPoly next(acc.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * lo;
            next[i + 1] += acc[i] * w;
        }
        if (next.empty()) next.push_back(*it);
        else next[0] += *it;
        acc = up_normalize(std::move(next));
    }
    return acc;
}

int sign_variations(const UPoly& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = sign_of(c);
        if (s != 0) {
            if (last != 0 && s != last) ++v;
            last = s;
        }
    }
    return v;
}

}  // namespace

int up_descartes_count(const UPoly& p, const Rational& lo, const Rational& hi) {
    // Map (lo,hi) to (0,1), then (0,1) to (0,inf) by x -> 1/(1+x):
    // reverse coefficients and Taylor-shift by 1.
    UPoly q = compose_affine(p, lo, hi - lo);
    if (q.empty()) throw std::invalid_argument("descartes count of zero polynomial");
    UPoly t(q.rbegin(), q.rend());
    size_t n = t.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) t[j - 1] += t[j];
    return sign_variations(t);
}

void RootBox::refine() {
    Rational mid = (lo + hi) / 2;
    int s = sign_of(up_eval(p, mid));
    if (s == 0) {
        // The root is exactly the bisection point; shrink around it.
        exact = mid;
        Rational ql = (lo + mid) / 2, qh = (mid + hi) / 2;
        lo = ql;
        hi = qh;
        return;
    }
    if (s == sign_of(up_eval(p, lo))) lo = mid;
    else hi = mid;
}

AlgReal::AlgReal(RootBox b) : rat_(0), box_(std::move(b)) {
    if (box_->exact) {
        rat_ = *box_->exact;
        box_.reset();
    }
}

void AlgReal::collapse() const {
    if (box_ && box_->exact) {
        const_cast<AlgReal*>(this)->rat_ = *box_->exact;
        box_.reset();
    }
}

const Rational& AlgReal::rational_value() const {
    if (!is_rational()) throw std::logic_error("AlgReal is not rational");
    return rat_;
}

void AlgReal::refine_to(const Rational& w) const {
    if (!box_) return;
    while (box_ && box_->width() > w) {
        box_->refine();
        collapse();
    }
}

bool vanishes_at(const UPoly& q0, const AlgReal& a) {
    UPoly q = up_normalize(q0);
    if (q.empty()) return true;
    if (a.is_rational()) return up_eval(q, a.rational_value()).is_zero();
    const RootBox& bx = a.box();
    UPoly g = up_gcd(bx.p, q);
    if (up_deg(g) <= 0) return false;
    UPoly h = up_div_exact(bx.p, g);
    RootBox work = bx;
    while (true) {
        int cg = up_descartes_count(g, work.lo, work.hi);
        if (cg == 0) return false;
        if (cg == 1) {
            int ch = up_deg(h) <= 0 ? 0 : up_descartes_count(h, work.lo, work.hi);
            if (ch == 0) return true;
        }
        work.refine();
        if (work.exact) return up_eval(q, *work.exact).is_zero();
    }
}

int sign_at(const UPoly& q0, const AlgReal& a) {
    UPoly q = up_normalize(q0);
    if (q.empty()) return 0;
    if (a.is_rational()) return sign_of(up_eval(q, a.rational_value()));
    if (vanishes_at(q, a)) return 0;
    RootBox work = a.box();
    while (true) {
        int sl = sign_of(up_eval(q, work.lo));
        if (sl != 0 && up_descartes_count(q, work.lo, work.hi) == 0) return sl;
        work.refine();
        if (work.exact) return sign_of(up_eval(q, *work.exact));
    }
}

int AlgReal::compare(const AlgReal& a, const AlgReal& b) {
    a.collapse();
    b.collapse();
    if (a.is_rational() && b.is_rational()) {
        if (a.rat_ < b.rat_) return -1;
        if (a.rat_ > b.rat_) return 1;
        return 0;
    }
    if (a.is_rational()) return -compare(b, a);
    if (b.is_rational()) {
        const Rational& r = b.rat_;
        RootBox work = *a.box_;
        if (work.lo < r && r < work.hi && up_eval(work.p, r).is_zero()) return 0;
        while (work.lo < r && r < work.hi) {
            work.refine();
            if (work.exact) {
                if (*work.exact < r) return -1;
                return *work.exact > r ? 1 : 0;
            }
        }
        return r >= work.hi ? -1 : 1;
    }
    // both boxes
    if (vanishes_at(b.box_->p, a)) {
        // a is a root of b's defining polynomial; equal iff a lies in b's box
        if (compare(a, AlgReal(b.box_->lo)) > 0 && compare(a, AlgReal(b.box_->hi)) < 0) return 0;
    }
    RootBox wa = *a.box_, wb = *b.box_;
    while (true) {
        if (wa.hi <= wb.lo) return -1;
        if (wb.hi <= wa.lo) return 1;
        if (wa.exact) return -compare(b, AlgReal(*wa.exact));
        if (wb.exact) return compare(a, AlgReal(*wb.exact));
        wa.refine();
        wb.refine();
    }
}

AlgReal AlgReal::operator+(const Rational& shift) const {
    collapse();
    if (is_rational()) return AlgReal(rat_ + shift);
    // root of p(x - shift) in the shifted box
    RootBox b = *box_;
    UPoly shifted = compose_affine(b.p, -shift, Rational(1));
    return AlgReal(RootBox{shifted, b.lo + shift, b.hi + shift, std::nullopt});
}

std::optional<BigInt> AlgReal::as_integer() const {
    collapse();
    if (is_rational())
        return is_integer(rat_) ? std::optional<BigInt>(numerator(rat_)) : std::nullopt;
    RootBox work = *box_;
    while (work.hi - work.lo > Rational(1, 2)) {
        work.refine();
        if (work.exact) {
            if (is_integer(*work.exact)) return numerator(*work.exact);
            return std::nullopt;
        }
    }
    BigInt k = rat_floor(work.lo) ;
    for (int step = 0; step <= 2; ++step, ++k) {
        Rational kk(k);
        if (work.lo < kk && kk < work.hi && up_eval(work.p, kk).is_zero()) return k;
    }
    return std::nullopt;
}

BigInt AlgReal::floor() const {
    collapse();
    if (is_rational()) return rat_floor(rat_);
    if (auto k = as_integer()) return *k;
    // not an integer, so the endpoint floors eventually agree
    RootBox work = *box_;
    while (rat_floor(work.lo) != rat_floor(work.hi)) {
        work.refine();
        if (work.exact) return rat_floor(*work.exact);
    }
    return rat_floor(work.lo);
}

double AlgReal::approx() const {
    collapse();
    if (is_rational()) return static_cast<double>(rat_);
    RootBox work = *box_;
    for (int i = 0; i < 64 && !work.exact; ++i) work.refine();
    if (work.exact) return static_cast<double>(*work.exact);
    return static_cast<double>((work.lo + work.hi) / 2);
}

std::string AlgReal::to_string() const {
    collapse();
    if (is_rational()) return rat_to_string(rat_);
    std::ostringstream os;
    os << "root~" << approx() << " of [";
    const UPoly& p = box_->p;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(p[i]);
    }
    os << "] in (" << rat_to_string(box_->lo) << "," << rat_to_string(box_->hi) << ")";
    return os.str();
}

namespace {

// Roots of a square-free p strictly inside (lo, hi); p(lo), p(hi) != 0.
// Appends in increasing order.
void isolate_squarefree(UPoly p, const Rational& lo, const Rational& hi,
                        std::vector<AlgReal>& out) {
    int v = up_descartes_count(p, lo, hi);
    if (v == 0) return;
    if (v == 1) {
        if (up_deg(p) == 1) {
            out.emplace_back(Rational(-p[0] / p[1]));
        } else {
            out.emplace_back(RootBox{p, lo, hi, std::nullopt});
        }
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (up_eval(p, mid).is_zero()) {
        UPoly linear{-mid, Rational(1)};
        UPoly rest = up_div_exact(p, linear);
        isolate_squarefree(rest, lo, mid, out);
        out.emplace_back(mid);
        isolate_squarefree(rest, mid, hi, out);
    } else {
        isolate_squarefree(p, lo, mid, out);
        isolate_squarefree(p, mid, hi, out);
    }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p0) {
    UPoly p = up_normalize(p0);
    if (p.empty()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsolatedRoot> merged;
    if (up_deg(p) == 0) return merged;
    auto factors = up_squarefree_decomposition(p);
    std::vector<std::pair<std::vector<AlgReal>, int>> per_factor;
    for (const auto& [f, mult] : factors) {
        Rational bound = up_root_bound(f);
        std::vector<AlgReal> roots;
        isolate_squarefree(f, -bound, bound, roots);
        per_factor.emplace_back(std::move(roots), mult);
    }
    // merge (roots of distinct square-free factors are distinct)
    std::vector<size_t> idx(per_factor.size(), 0);
    while (true) {
        int best = -1;
        for (size_t i = 0; i < per_factor.size(); ++i) {
            if (idx[i] >= per_factor[i].first.size()) continue;
            if (best < 0 ||
                AlgReal::compare(per_factor[i].first[idx[i]],
                                 per_factor[static_cast<size_t>(best)].first[idx[static_cast<size_t>(best)]]) < 0)
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        auto bi = static_cast<size_t>(best);
        merged.push_back({per_factor[bi].first[idx[bi]], per_factor[bi].second});
        ++idx[bi];
    }
    return merged;
}

UPoly upoly_from_poly_b(const Poly& p) {
    if (p.deg_m() > 0) throw std::invalid_argument("not univariate in b");
    UPoly u(static_cast<size_t>(std::max(p.deg_b(), -1) + 1), Rational(0));
    for (const auto& [e, c] : p.terms()) u[e.second] = c;
    return up_normalize(std::move(u));
}

UPoly upoly_from_poly_m(const Poly& p) {
    if (p.deg_b() > 0) throw std::invalid_argument("not univariate in m");
    UPoly u(static_cast<size_t>(std::max(p.deg_m(), -1) + 1), Rational(0));
    for (const auto& [e, c] : p.terms()) u[e.first] = c;
    return up_normalize(std::move(u));
}

Poly upoly_to_poly_b(const UPoly& p) {
    Poly r;
    for (size_t i = 0; i < p.size(); ++i) r += Poly::monomial(0, static_cast<int>(i), p[i]);
    return r;
}

}  // namespace sncstab
