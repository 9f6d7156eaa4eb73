#include "sncstab/signregion.hpp"

#include <sstream>
#include <stdexcept>

namespace sncstab {

int SignRegion::sign_at_point(const AlgReal& x) const {
    for (size_t i = 0; i < cuts.size(); ++i) {
        int c = AlgReal::compare(x, cuts[i]);
        if (c == 0) return point_sign[i];
        if (c < 0) return interval_sign[i];
    }
    return interval_sign.back();
}

namespace {

// Largest rational <= a (for boxes: a refined lower endpoint).
Rational lower_rat(const AlgReal& a) {
    return a.is_rational() ? a.rational_value() : a.box().lo;
}
Rational upper_rat(const AlgReal& a) {
    return a.is_rational() ? a.rational_value() : a.box().hi;
}

}  // namespace

std::vector<Rational> interleave_samples(const std::vector<AlgReal>& cuts) {
    std::vector<Rational> samples;
    if (cuts.empty()) {
        samples.emplace_back(0);
        return samples;
    }
    samples.push_back(lower_rat(cuts.front()) - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        AlgReal a = cuts[i], b = cuts[i + 1];
        while (!(upper_rat(a) < lower_rat(b))) {
            Rational w = (upper_rat(b) - lower_rat(a)) / 4;
            a.refine_to(w);
            b.refine_to(w);
            if (upper_rat(a) < lower_rat(b)) break;
            // equal-width stall: keep halving
            a.refine_to(w / 4);
            b.refine_to(w / 4);
        }
        samples.push_back((upper_rat(a) + lower_rat(b)) / 2);
    }
    samples.push_back(upper_rat(cuts.back()) + 1);
    return samples;
}

std::vector<AlgReal> merge_cuts(const std::vector<AlgReal>& a, const std::vector<AlgReal>& b) {
    std::vector<AlgReal> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i >= a.size()) out.push_back(b[j++]);
        else if (j >= b.size()) out.push_back(a[i++]);
        else {
            int c = AlgReal::compare(a[i], b[j]);
            if (c < 0) out.push_back(a[i++]);
            else if (c > 0) out.push_back(b[j++]);
            else {
                out.push_back(a[i++]);
                ++j;
            }
        }
    }
    return out;
}

SignRegion eventual_sign_region(const std::vector<Poly>& coeffs) {
    SignRegion r;
    int top = -1;
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) top = static_cast<int>(k);
    if (top < 0) {
        r.interval_sign = {0};
        return r;
    }
    UPoly cj = upoly_from_poly_b(coeffs[static_cast<size_t>(top)]);
    if (up_deg(cj) == 0) {
        r.interval_sign = {sign_of(cj[0])};
        return r;
    }
    for (const auto& root : isolate_real_roots(cj)) r.cuts.push_back(root.root);
    // label at each cut: highest lower coefficient not vanishing there
    for (const auto& cut : r.cuts) {
        int label = 0;
        for (int j = top - 1; j >= 0; --j) {
            if (coeffs[static_cast<size_t>(j)].is_zero()) continue;
            int s = sign_at(upoly_from_poly_b(coeffs[static_cast<size_t>(j)]), cut);
            if (s != 0) {
                label = s;
                break;
            }
        }
        r.point_sign.push_back(label);
    }
    for (const auto& x : interleave_samples(r.cuts))
        r.interval_sign.push_back(sign_of(up_eval(cj, x)));
    return r;
}

std::vector<RegionPiece> region_pieces(const SignRegion& r) {
    std::vector<RegionPiece> out;
    size_t n = r.cuts.size();
    // walk: interval 0, point 0, interval 1, ..., interval n
    RegionPiece cur;
    cur.lo_unbounded = true;
    cur.sign = r.interval_sign[0];
    auto close_at = [&](const AlgReal& x, bool closed) {
        cur.hi = x;
        cur.hi_closed = closed;
        out.push_back(cur);
    };
    for (size_t i = 0; i < n; ++i) {
        bool point_same = (r.point_sign[i] == cur.sign);
        bool next_same = (r.interval_sign[i + 1] == r.point_sign[i]);
        if (point_same) {
            if (!next_same) {
                close_at(r.cuts[i], true);
                cur = RegionPiece{};
                cur.lo = r.cuts[i];
                cur.lo_closed = false;
                cur.sign = r.interval_sign[i + 1];
            }
            // else: continue through the point
        } else {
            close_at(r.cuts[i], false);
            if (next_same) {
                cur = RegionPiece{};
                cur.lo = r.cuts[i];
                cur.lo_closed = true;
                cur.sign = r.interval_sign[i + 1];
            } else {
                // isolated point
                RegionPiece pt;
                pt.lo = pt.hi = r.cuts[i];
                pt.lo_closed = pt.hi_closed = true;
                pt.sign = r.point_sign[i];
                out.push_back(pt);
                cur = RegionPiece{};
                cur.lo = r.cuts[i];
                cur.lo_closed = false;
                cur.sign = r.interval_sign[i + 1];
            }
        }
    }
    cur.hi_unbounded = true;
    out.push_back(cur);
    return out;
}

std::string RegionPiece::to_string() const {
    std::ostringstream os;
    if (lo_unbounded && hi_unbounded) os << "(-inf,inf)";
    else if (!lo_unbounded && !hi_unbounded &&
             AlgReal::compare(lo, hi) == 0) os << "{" << lo.to_string() << "}";
    else {
        os << (lo_closed ? "[" : "(");
        os << (lo_unbounded ? "-inf" : lo.to_string()) << ",";
        os << (hi_unbounded ? "inf" : hi.to_string());
        os << (hi_closed ? "]" : ")");
    }
    os << ":" << (sign > 0 ? "+1" : sign < 0 ? "-1" : "0");
    return os.str();
}

}  // namespace sncstab
