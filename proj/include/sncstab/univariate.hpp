#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sncstab/poly.hpp"
#include "sncstab/rational.hpp"

namespace sncstab {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff[i] is the coefficient of x^i; the zero polynomial is the
/// empty vector and otherwise the top coefficient is nonzero.
using UPoly = std::vector<Rational>;

UPoly up_normalize(UPoly p);
inline int up_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
Rational up_eval(const UPoly& p, const Rational& x);
UPoly up_derivative(const UPoly& p);
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
/// Field division: a = q*b + r with deg r < deg b.
void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly up_div_exact(const UPoly& a, const UPoly& b);
/// Monic gcd.
UPoly up_gcd(UPoly a, UPoly b);
UPoly up_squarefree_part(const UPoly& p);
/// Yun square-free decomposition: pairwise-coprime square-free factors
/// with their multiplicities; the product of f^mult recovers p up to a
/// constant. Constant factors are omitted.
std::vector<std::pair<UPoly, int>> up_squarefree_decomposition(const UPoly& p);

/// Power-of-two B with all real roots of p in (-B, B); Cauchy bound.
Rational up_root_bound(const UPoly& p);

/// Descartes bound on the number of roots in the open interval (lo, hi).
/// Exact when it returns 0 or 1.
int up_descartes_count(const UPoly& p, const Rational& lo, const Rational& hi);

/// Isolating interval for a single real root of a square-free polynomial.
/// Endpoints are never roots; p changes sign across the interval.
struct RootBox {
    UPoly p;
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    /// Halve the width. If the bisection point happens to be the root,
    /// the exact rational value is recorded in `exact`.
    void refine();
    std::optional<Rational> exact;
};

/// A real algebraic number: an exact rational or an isolated root box.
class AlgReal {
public:
    AlgReal() : rat_(0) {}
    AlgReal(Rational r) : rat_(std::move(r)) {}
    AlgReal(int v) : rat_(v) {}
    explicit AlgReal(RootBox b);

    bool is_rational() const { return !box_.has_value(); }
    const Rational& rational_value() const;
    const RootBox& box() const { return *box_; }

    /// Total order; equal algebraic numbers compare equal even when
    /// represented by different defining polynomials.
    static int compare(const AlgReal& a, const AlgReal& b);

    AlgReal operator+(const Rational& shift) const;
    BigInt floor() const;
    /// If the value is an integer, returns it.
    std::optional<BigInt> as_integer() const;
    /// Refine the internal box until its width is at most `w`.
    void refine_to(const Rational& w) const;

    double approx() const;
    std::string to_string() const;

private:
    void collapse() const;  // adopt box.exact when discovered
    Rational rat_;
    mutable std::optional<RootBox> box_;
};

/// True iff q vanishes at the algebraic number a.
bool vanishes_at(const UPoly& q, const AlgReal& a);
/// Exact sign of q at a.
int sign_at(const UPoly& q, const AlgReal& a);

struct IsolatedRoot {
    AlgReal root;
    int multiplicity;
};

/// All distinct real roots in increasing order, with multiplicities.
/// Rejects the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p);

/// Conversions between the sparse bivariate type and dense univariates.
UPoly upoly_from_poly_b(const Poly& p);  // p must be univariate in b
UPoly upoly_from_poly_m(const Poly& p);  // p must be univariate in m
Poly upoly_to_poly_b(const UPoly& p);

}  // namespace sncstab
