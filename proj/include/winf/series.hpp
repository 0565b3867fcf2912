#pragma once

#include <map>
#include <string>
#include <vector>

#include "winf/poly.hpp"

namespace winf {

// Truncated power series in x: coefficients of x^0..x^order.
class XSeries {
public:
    explicit XSeries(int order) : order_(order), c_(order + 1, Rat(0)) {}
    XSeries(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
        c_.resize(order + 1, Rat(0));
    }

    int order() const { return order_; }
    Rat coeff(int i) const { return i >= 0 && i <= order_ ? c_[i] : Rat(0); }
    void set(int i, Rat v) { if (i >= 0 && i <= order_) c_[i] = std::move(v); }
    bool is_zero() const;

    XSeries operator-() const;
    XSeries& operator+=(const XSeries& o);
    XSeries& operator-=(const XSeries& o);
    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    XSeries operator*(const Rat& s) const;
    // Division; divisor must have nonzero coefficient at its lowest order <=
    // dividend's (common factors of x cancel first).
    friend XSeries operator/(const XSeries& a, const XSeries& b);
    friend bool operator==(const XSeries& a, const XSeries& b);

    static XSeries from_poly(const Poly& p, int order);
    static XSeries exp(const Rat& a, int order);   // e^{a x}
    static XSeries cosh(const Rat& a, int order);
    static XSeries sinh(const Rat& a, int order);
    static XSeries tanh(const Rat& a, int order);

private:
    int order_;
    std::vector<Rat> c_;
};

// Truncated series in q^{1/2}: coefficient of q^{k/2} stored at key k.
// Truncation order itself may be half-integral; order2 = 2*order.
class QSeries {
public:
    explicit QSeries(int order2) : order2_(order2), c_(order2 + 1, Rat(0)) {}
    static QSeries one(int order2) { QSeries s(order2); s.c_[0] = Rat(1); return s; }

    int order2() const { return order2_; }
    Rat coeff2(int k2) const { return k2 >= 0 && k2 <= order2_ ? c_[k2] : Rat(0); }
    void add2(int k2, const Rat& v) { if (k2 >= 0 && k2 <= order2_) c_[k2] += v; }
    bool is_zero() const;
    // smallest exponent (doubled) with differing coefficient, or -1 if equal
    static int first_mismatch2(const QSeries& a, const QSeries& b);

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }
    QSeries operator*(const Rat& s) const;
    friend bool operator==(const QSeries& a, const QSeries& b);

    QSeries inverse() const;                       // needs unit constant term
    QSeries shifted(int k2) const;                 // multiply by q^{k2/2}
    // multiply by (1 + sign*q^{a2/2}), a2 doubled exponent; exponents beyond
    // the order contribute nothing.
    void mul_one_plus(int a2, const Rat& sign);
    void mul_phi_factor(int j);                    // multiply by phi_j(q) = prod_{i<=j}(1-q^i)
    void div_phi_factor(int j);

    static QSeries euler_phi(int order2);          // prod_{j>=1}(1-q^j)
    static QSeries phi_i(int i, int order2);       // prod_{j=1..i}(1-q^j), i<=0 -> 1

private:
    int order2_;
    std::vector<Rat> c_;
};

}  // namespace winf
