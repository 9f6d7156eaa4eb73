#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sncstab/rational.hpp"

namespace sncstab {

/// Sparse exact polynomial in the two formal variables m (asymptotic
/// parameter) and b (twist parameter). Zero coefficients are never stored.
class Poly {
public:
    // exponent pair (deg in m, deg in b) -> nonzero coefficient
    using Terms = std::map<std::pair<int, int>, Rational>;

    Poly() = default;
    explicit Poly(Rational c) {
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    static Poly var_m() { return monomial(1, 0, 1); }
    static Poly var_b() { return monomial(0, 1, 1); }
    static Poly monomial(int dm, int db, Rational c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int deg_m() const;
    int deg_b() const;
    Rational coeff(int dm, int db) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Coefficient of b^j, as a polynomial in m alone.
    Poly coeff_of_b(int j) const;
    /// Coefficients indexed by m-degree, each a polynomial in b alone.
    std::vector<Poly> coeffs_by_m() const;

    /// Substitute b := value; result is a polynomial in m alone.
    Poly subst_b(const Rational& value) const;
    /// Substitute m := value; result is a polynomial in b alone.
    Poly subst_m(const Rational& value) const;
    /// Substitute b := b + shift.
    Poly shift_b(const Rational& shift) const;

    Rational eval(const Rational& m, const Rational& b) const;

    std::string to_string() const;

private:
    void add_term(int dm, int db, const Rational& c);
    Terms terms_;
};

/// Sign of p(m) for all sufficiently large m: the sign of the leading
/// coefficient, or 0 for the zero polynomial. p must be univariate in m.
int eventual_sign(const Poly& p);

}  // namespace sncstab
