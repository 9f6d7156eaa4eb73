#include "sncstab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sncstab {

Poly Poly::monomial(int dm, int db, Rational c) {
    Poly p;
    if (!c.is_zero()) p.terms_[{dm, db}] = std::move(c);
    return p;
}

int Poly::deg_m() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int Poly::deg_b() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

Rational Poly::coeff(int dm, int db) const {
    auto it = terms_.find({dm, db});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(int dm, int db, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({dm, db}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::coeff_of_b(int j) const {
    Poly r;
    for (const auto& [e, c] : terms_)
        if (e.second == j) r.terms_[{e.first, 0}] = c;
    return r;
}

std::vector<Poly> Poly::coeffs_by_m() const {
    std::vector<Poly> out(static_cast<size_t>(std::max(deg_m(), -1) + 1));
    for (const auto& [e, c] : terms_) out[e.first].terms_[{0, e.second}] = c;
    return out;
}

Poly Poly::subst_b(const Rational& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (int k = 0; k < e.second; ++k) f *= value;
        r.add_term(e.first, 0, f);
    }
    return r;
}

Poly Poly::subst_m(const Rational& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (int k = 0; k < e.first; ++k) f *= value;
        r.add_term(0, e.second, f);
    }
    return r;
}

Poly Poly::shift_b(const Rational& shift) const {
    // b^j -> sum_k C(j,k) shift^{j-k} b^k
    Poly r;
    for (const auto& [e, c] : terms_) {
        std::vector<Rational> powers(static_cast<size_t>(e.second) + 1);
        powers[0] = 1;
        for (int k = 1; k <= e.second; ++k) powers[k] = powers[k - 1] * shift;
        Rational cb = 1;  // C(j, k) built downward from k = j
        for (int k = e.second; k >= 0; --k) {
            r.add_term(e.first, k, c * cb * powers[e.second - k]);
            cb = cb * k / (e.second - k + 1);
        }
    }
    return r;
}

Rational Poly::eval(const Rational& m, const Rational& b) const {
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int k = 0; k < e.first; ++k) t *= m;
        for (int k = 0; k < e.second; ++k) t *= b;
        r += t;
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        bool unit = (a == 1) && (e.first > 0 || e.second > 0);
        if (!unit) os << rat_to_string(a);
        if (e.first > 0) os << "m" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) os << "b" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        first = false;
    }
    return os.str();
}

int eventual_sign(const Poly& p) {
    if (p.is_zero()) return 0;
    if (p.deg_b() > 0) throw std::invalid_argument("eventual_sign: polynomial not univariate in m");
    return sign_of(p.coeff(p.deg_m(), 0));
}

}  // namespace sncstab
