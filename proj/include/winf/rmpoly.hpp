#pragma once

#include <vector>

#include "winf/rat.hpp"

namespace winf {

// Element of R_m = Q[u]/(u^{m+1}): coefficients of u^0..u^m.
class RmPoly {
public:
    explicit RmPoly(int m) : c_(m + 1, Rat(0)) {}
    RmPoly(int m, std::vector<Rat> coeffs) : c_(std::move(coeffs)) { c_.resize(m + 1, Rat(0)); }
    static RmPoly unit(int m) { RmPoly r(m); r.c_[0] = Rat(1); return r; }
    static RmPoly scalar(int m, Rat v) { RmPoly r(m); r.c_[0] = std::move(v); return r; }

    int m() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int j) const { return c_[j]; }
    Rat& coeff(int j) { return c_[j]; }
    bool is_zero() const;

    RmPoly operator-() const;
    RmPoly& operator+=(const RmPoly& o);
    RmPoly& operator-=(const RmPoly& o);
    friend RmPoly operator+(RmPoly a, const RmPoly& b) { return a += b; }
    friend RmPoly operator-(RmPoly a, const RmPoly& b) { return a -= b; }
    friend RmPoly operator*(const RmPoly& a, const RmPoly& b);  // truncated at u^{m+1}
    RmPoly operator*(const Rat& s) const;
    RmPoly negate_u() const;  // u -> -u
    friend bool operator==(const RmPoly& a, const RmPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RmPoly& a, const RmPoly& b) { return !(a == b); }

private:
    std::vector<Rat> c_;
};

}  // namespace winf
