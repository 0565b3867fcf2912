#include "winf/series.hpp"

#include <algorithm>

namespace winf {

bool XSeries::is_zero() const {
    for (const auto& c : c_) if (!c.is_zero()) return false;
    return true;
}

XSeries XSeries::operator-() const {
    XSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

XSeries& XSeries::operator+=(const XSeries& o) {
    int n = std::min(order_, o.order_);
    order_ = n;
    c_.resize(n + 1);
    for (int i = 0; i <= n; ++i) c_[i] += o.c_[i];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
    int n = std::min(order_, o.order_);
    order_ = n;
    c_.resize(n + 1);
    for (int i = 0; i <= n; ++i) c_[i] -= o.c_[i];
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    int n = std::min(a.order_, b.order_);
    XSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

XSeries XSeries::operator*(const Rat& s) const {
    XSeries r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

XSeries operator/(const XSeries& a, const XSeries& b) {
    int va = 0, vb = 0;
    while (vb <= b.order_ && b.c_[vb].is_zero()) ++vb;
    if (vb > b.order_) throw std::domain_error("XSeries: division by zero series");
    while (va < vb && va <= a.order_ && a.c_[va].is_zero()) ++va;
    if (va < vb) throw std::domain_error("XSeries: division not a power series");
    int n = std::min(a.order_, b.order_) - vb;
    XSeries q(n);
    std::vector<Rat> rem(n + 1);
    for (int i = 0; i <= n; ++i) rem[i] = a.coeff(i + vb);
    Rat lead = b.c_[vb];
    for (int i = 0; i <= n; ++i) {
        Rat qi = rem[i] / lead;
        q.c_[i] = qi;
        if (!qi.is_zero())
            for (int j = 1; i + j <= n; ++j) rem[i + j] -= qi * b.coeff(vb + j);
    }
    return q;
}

bool operator==(const XSeries& a, const XSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int i = 0; i <= n; ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

XSeries XSeries::from_poly(const Poly& p, int order) {
    XSeries r(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) r.c_[i] = p.coeff(i);
    return r;
}

XSeries XSeries::exp(const Rat& a, int order) {
    XSeries r(order);
    Rat t(1);
    for (int i = 0; i <= order; ++i) {
        r.c_[i] = t;
        t = t * a / Rat(i + 1);
    }
    return r;
}

XSeries XSeries::cosh(const Rat& a, int order) {
    XSeries r(order);
    Rat t(1);
    for (int i = 0; i <= order; ++i) {
        if (i % 2 == 0) r.c_[i] = t;
        t = t * a / Rat(i + 1);
    }
    return r;
}

XSeries XSeries::sinh(const Rat& a, int order) {
    XSeries r(order);
    Rat t(1);
    for (int i = 0; i <= order; ++i) {
        if (i % 2 == 1) r.c_[i] = t;
        t = t * a / Rat(i + 1);
    }
    return r;
}

XSeries XSeries::tanh(const Rat& a, int order) {
    return sinh(a, order) / cosh(a, order);
}

bool QSeries::is_zero() const {
    for (const auto& c : c_) if (!c.is_zero()) return false;
    return true;
}

int QSeries::first_mismatch2(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order2_, b.order2_);
    for (int i = 0; i <= n; ++i)
        if (a.c_[i] != b.c_[i]) return i;
    return -1;
}

QSeries QSeries::operator-() const {
    QSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    int n = std::min(order2_, o.order2_);
    order2_ = n;
    c_.resize(n + 1);
    for (int i = 0; i <= n; ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    int n = std::min(order2_, o.order2_);
    order2_ = n;
    c_.resize(n + 1);
    for (int i = 0; i <= n; ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order2_, b.order2_);
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return QSeries::first_mismatch2(a, b) < 0;
}

QSeries QSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("QSeries: inverse needs unit constant term");
    QSeries r(order2_);
    r.c_[0] = Rat(1) / c_[0];
    for (int i = 1; i <= order2_; ++i) {
        Rat s(0);
        for (int j = 1; j <= i; ++j) s += c_[j] * r.c_[i - j];
        r.c_[i] = -s / c_[0];
    }
    return r;
}

QSeries QSeries::shifted(int k2) const {
    QSeries r(order2_);
    for (int i = 0; i <= order2_; ++i) {
        if (c_[i].is_zero()) continue;
        int j = i + k2;
        if (j < 0) throw std::domain_error("QSeries: negative exponent after shift");
        if (j <= order2_) r.c_[j] = c_[i];
    }
    return r;
}

void QSeries::mul_one_plus(int a2, const Rat& sign) {
    if (a2 <= 0) throw std::domain_error("QSeries: factor exponent must be positive");
    if (a2 > order2_) return;
    for (int i = order2_ - a2; i >= 0; --i) c_[i + a2] += sign * c_[i];
}

void QSeries::mul_phi_factor(int j) {
    for (int i = 1; i <= j; ++i) mul_one_plus(2 * i, Rat(-1));
}

void QSeries::div_phi_factor(int j) {
    *this *= phi_i(j, order2_).inverse();
}

QSeries QSeries::euler_phi(int order2) {
    QSeries r = one(order2);
    for (int j = 1; 2 * j <= order2; ++j) r.mul_one_plus(2 * j, Rat(-1));
    return r;
}

QSeries QSeries::phi_i(int i, int order2) {
    QSeries r = one(order2);
    if (i <= 0) return r;  // empty product
    for (int j = 1; j <= i; ++j)
        if (2 * j <= order2) r.mul_one_plus(2 * j, Rat(-1));
    return r;
}

}  // namespace winf
