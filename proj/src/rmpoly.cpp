#include "winf/rmpoly.hpp"

namespace winf {

bool RmPoly::is_zero() const {
    for (const auto& c : c_) if (!c.is_zero()) return false;
    return true;
}

RmPoly RmPoly::operator-() const {
    RmPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

RmPoly& RmPoly::operator+=(const RmPoly& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RmPoly& RmPoly::operator-=(const RmPoly& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RmPoly operator*(const RmPoly& a, const RmPoly& b) {
    RmPoly r(a.m());
    for (int i = 0; i <= a.m(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.m(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

RmPoly RmPoly::operator*(const Rat& s) const {
    RmPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

RmPoly RmPoly::negate_u() const {
    RmPoly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

}  // namespace winf
