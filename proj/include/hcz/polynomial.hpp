#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hcz/gaussian.hpp"
#include "hcz/rational.hpp"

namespace hcz {

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }

// Dense univariate polynomial in z, ascending coefficients, no trailing zeros.
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(F c) {
        if (!hcz::is_zero(c)) c_.push_back(std::move(c));
    }
    Polynomial(long c) : Polynomial(F(c)) {}
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial z() { return Polynomial(std::vector<F>{F(0), F(1)}); }
    // a*z + b
    static Polynomial linear(const F& a, const F& b) { return Polynomial(std::vector<F>{b, a}); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const { return k >= 0 && k <= deg() ? c_[k] : F(0); }
    F lead() const { return c_.empty() ? F(0) : c_.back(); }

    // Multiplicity of the root z = 0.
    int order_at_zero() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!hcz::is_zero(c_[k])) return static_cast<int>(k);
        throw std::domain_error("order of the zero polynomial");
    }

    F eval(const F& x) const {
        F r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // p(a*z + b), Horner in the polynomial ring.
    Polynomial compose_affine(const F& a, const F& b) const {
        Polynomial r, lin = linear(a, b);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Polynomial(*it);
        return r;
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        F inv = F(1) / lead();
        return *this * inv;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const F& s) {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division: a = q*b + r, deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial r = a;
        const int db = b.deg();
        if (r.deg() < db) return {Polynomial(), r};
        std::vector<F> q(r.deg() - db + 1, F(0));
        F binv = F(1) / b.lead();
        while (!r.is_zero() && r.deg() >= db) {
            int shift = r.deg() - db;
            F t = r.lead() * binv;
            q[shift] = t;
            for (int k = 0; k <= db; ++k) r.c_[k + shift] -= t * b.c_[k];
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    // Monic gcd; gcd(0, 0) = 0. Remainders are kept monic to limit coefficient growth.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        if (a.deg() < b.deg()) std::swap(a, b);
        if (b.deg() == 0) return Polynomial(F(1));
        while (!b.is_zero()) {
            Polynomial r = remainder(std::move(a), b);
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    // a / b when b divides a.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        if (b.deg() == 0) return a * (F(1) / b.lead());
        return divmod(a, b).first;
    }

    static Polynomial remainder(Polynomial r, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        const int db = b.deg();
        F binv = F(1) / b.lead();
        while (!r.is_zero() && r.deg() >= db) {
            int shift = r.deg() - db;
            F t = r.lead() * binv;
            for (int k = 0; k <= db; ++k) r.c_[k + shift] -= t * b.c_[k];
            r.trim();
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && hcz::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

// Quotient of coprime polynomials, monic denominator, zero stored as 0/1.
template <class F>
class RationalFunction {
public:
    using Poly = Polynomial<F>;

    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
    RationalFunction(F c) : RationalFunction(Poly(std::move(c))) {}
    RationalFunction(long c) : RationalFunction(Poly(F(c))) {}
    RationalFunction(Poly p, Poly q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    int order_at_zero() const { return num_.order_at_zero() - den_.order_at_zero(); }

    // Leading Laurent coefficient at z = 0.
    F leading_at_zero() const {
        return num_.coeff(num_.order_at_zero()) / den_.coeff(den_.order_at_zero());
    }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (hcz::is_zero(d)) throw std::domain_error("rational function pole");
        return num_.eval(x) / d;
    }

    RationalFunction compose_affine(const F& a, const F& b) const {
        return {num_.compose_affine(a, b), den_.compose_affine(a, b)};
    }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return {den_, num_};
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    // Both operands are reduced, so only the cross pairs can share factors.
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
        Poly an = Poly::exact_div(a.num_, g1), bd = Poly::exact_div(b.den_, g1);
        Poly bn = Poly::exact_div(b.num_, g2), ad = Poly::exact_div(a.den_, g2);
        RationalFunction r;
        r.num_ = an * bn;
        r.den_ = ad * bd;
        r.fix_lead();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        fix_lead();
    }
    void fix_lead() {
        F l = den_.lead();
        if (!(l == F(1))) {
            F inv = F(1) / l;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    Poly num_, den_;
};

using QPoly = Polynomial<Rational>;
using QRatFun = RationalFunction<Rational>;
using GPoly = Polynomial<GaussianRational>;

}  // namespace hcz
