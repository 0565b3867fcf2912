#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace winf {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

    static Rat parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    // n/2 with n odd counts as half-integral; integers do not.
    bool is_half_odd_integer() const { return den_ == 2; }
    bool is_nonneg() const { return num_ >= 0; }

    BigInt floor_int() const;
    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat pow(long long e) const;

    std::string str() const;

private:
    struct already_reduced {};
    Rat(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce();

    BigInt num_, den_;
};

inline Rat half(long long n) { return Rat(n, 2); }

// n! as a rational (used by series coefficients).
Rat factorial(long long n);
Rat binomial(long long n, long long k);

}  // namespace winf
