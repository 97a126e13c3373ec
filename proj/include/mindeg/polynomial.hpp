#pragma once

#include <mindeg/rational.hpp>

#include <stdexcept>
#include <vector>

namespace mindeg {

// Dense univariate polynomial over the rationals, coefficients low to high,
// no trailing zeros. The zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational a) { return Poly({std::move(a)}); }

    // x^d with unit coefficient
    static Poly xpow(std::size_t d) {
        std::vector<Rational> c(d + 1);
        c[d] = 1;
        return Poly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(c));
    }

    Poly operator-(const Poly& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(c));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> c(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(c));
    }

    Poly operator*(const Rational& s) const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(i);
        return Poly(std::move(c));
    }

    // Euclidean remainder.
    Poly operator%(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        Poly rem = *this;
        const Rational lead = d.c_.back();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            const Rational q = rem.c_.back() / lead;
            const std::size_t shift = rem.degree() - d.degree();
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= q * d.c_[i];
            rem.trim();
        }
        return rem;
    }

    bool operator==(const Poly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeffs().back() != 1) a = a * (Rational(1) / a.coeffs().back());
    return a;
}

// gcd(f, f') constant
inline bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() <= 0;
}

}  // namespace mindeg
