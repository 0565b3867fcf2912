#include "winf/poly.hpp"

namespace winf {

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(int deg, Rat c) {
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = std::move(c);
    return Poly(std::move(v));
}

Parity Poly::parity() const {
    bool even = true, odd = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % 2 == 0) odd = false; else even = false;
    }
    if (even && odd) return Parity::Even;  // zero polynomial counts as even
    if (even) return Parity::Even;
    if (odd) return Parity::Odd;
    return Parity::Neither;
}

Poly Poly::even_part() const {
    std::vector<Rat> v(c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); i += 2) v[i] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::odd_part() const {
    std::vector<Rat> v(c_.size(), Rat(0));
    for (size_t i = 1; i < c_.size(); i += 2) v[i] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
    if (s.is_zero()) return Poly();
    Poly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat((long long)i);
    return Poly(std::move(v));
}

Poly Poly::shift(const Rat& a) const { return compose(Poly({a, Rat(1)})); }

Poly Poly::reflect() const {
    Poly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Poly Poly::scale_arg(const Rat& a) const {
    Poly r(*this);
    Rat p(1);
    for (size_t i = 1; i < r.c_.size(); ++i) {
        p *= a;
        r.c_[i] *= p;
    }
    r.trim();
    return r;
}

Poly Poly::compose(const Poly& q) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly(c_[i]);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(Rat(1)), b(*this);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    q = Poly();
    r = a;
    Rat lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rat c = r.leading() / lb;
        Poly t = monomial(d, c);
        q += t;
        r -= t * b;
    }
}

bool Poly::divides(const Poly& a) const {
    if (is_zero()) return a.is_zero();
    Poly q, r;
    divmod(a, *this, q, r);
    return r.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly falling_factorial(int l) {
    if (l < 0) throw std::domain_error("falling_factorial: negative length");
    Poly r(Rat(1));
    for (int i = 0; i < l; ++i) r *= Poly({Rat(-i), Rat(1)});
    return r;
}

}  // namespace winf
