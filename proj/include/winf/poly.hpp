#pragma once

#include <initializer_list>
#include <vector>

#include "winf/rat.hpp"

namespace winf {

enum class Parity { Even, Odd, Neither };

// Univariate polynomial over Rat, coefficients ascending, trimmed.
class Poly {
public:
    Poly() {}
    Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(long long c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly x();                        // the variable
    static Poly monomial(int deg, Rat c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

    Parity parity() const;
    Poly even_part() const;
    Poly odd_part() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rat& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly shift(const Rat& a) const;         // p(x+a)
    Poly reflect() const;                   // p(-x)
    Poly scale_arg(const Rat& a) const;     // p(a*x)
    Poly compose(const Poly& q) const;      // p(q(x))
    Poly pow(int e) const;
    Poly monic() const;

    // Division with remainder; throws on zero divisor.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    bool divides(const Poly& a) const;      // *this | a
    static Poly gcd(Poly a, Poly b);        // monic gcd

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<Rat> c_;
};

// [x]_l = x(x-1)...(x-l+1), [x]_0 = 1.
Poly falling_factorial(int l);

}  // namespace winf
