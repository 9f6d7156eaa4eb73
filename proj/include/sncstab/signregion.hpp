#pragma once

#include <string>
#include <vector>

#include "sncstab/poly.hpp"
#include "sncstab/univariate.hpp"

namespace sncstab {

/// Partition of the real b-line by the eventual sign (in m) of a
/// polynomial whose m-coefficients are polynomials in b.
/// cuts are strictly increasing; interval_sign has one more entry than
/// cuts and labels the open intervals between (and beyond) them.
struct SignRegion {
    std::vector<AlgReal> cuts;
    std::vector<int> point_sign;
    std::vector<int> interval_sign;

    /// Sign label at an arbitrary point.
    int sign_at_point(const AlgReal& x) const;
};

/// Labeled maximal piece of the line after merging equal neighbors.
struct RegionPiece {
    bool lo_unbounded = false, hi_unbounded = false;
    AlgReal lo, hi;            // meaningful when bounded
    bool lo_closed = false, hi_closed = false;
    int sign = 0;
    std::string to_string() const;
};

/// coeffs[k] is the coefficient of m^k, a polynomial in b. The label at
/// each b is the sign of the highest-indexed coefficient that does not
/// vanish there (0 if all vanish).
SignRegion eventual_sign_region(const std::vector<Poly>& coeffs);

/// Merge into maximal same-sign pieces for reporting.
std::vector<RegionPiece> region_pieces(const SignRegion& r);

/// Rational sample points interleaving a sorted cut list: one below the
/// first cut, one strictly between each adjacent pair, one above the last.
std::vector<Rational> interleave_samples(const std::vector<AlgReal>& cuts);

/// Merge two sorted cut lists, removing duplicates (exact comparison).
std::vector<AlgReal> merge_cuts(const std::vector<AlgReal>& a, const std::vector<AlgReal>& b);

}  // namespace sncstab
