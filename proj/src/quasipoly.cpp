#include "winf/quasipoly.hpp"

#include <algorithm>
#include <map>

namespace winf {

void Quasipoly::normalize() {
    std::map<std::pair<Rat, int>, Poly> acc;  // (alpha, kind) -> multiplier
    for (auto& t : t_) {
        Rat a = t.alpha;
        Poly p = t.p;
        if (a < Rat(0)) {
            a = -a;
            if (t.kind == QKind::Sinh) p = -p;
        }
        if (t.kind == QKind::Sinh && a.is_zero()) continue;  // sinh(0) = 0
        auto key = std::make_pair(a, t.kind == QKind::Cosh ? 0 : 1);
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, std::move(p));
        else it->second += p;
    }
    t_.clear();
    for (auto& [key, p] : acc) {
        if (p.is_zero()) continue;
        t_.push_back(QTerm{std::move(p), key.first, key.second == 0 ? QKind::Cosh : QKind::Sinh});
    }
}

Quasipoly Quasipoly::operator-() const {
    Quasipoly r(*this);
    for (auto& t : r.t_) t.p = -t.p;
    return r;
}

Quasipoly& Quasipoly::operator+=(const Quasipoly& o) {
    for (const auto& t : o.t_) t_.push_back(t);
    normalize();
    return *this;
}

Quasipoly& Quasipoly::operator-=(const Quasipoly& o) {
    for (const auto& t : o.t_) t_.push_back(QTerm{-t.p, t.alpha, t.kind});
    normalize();
    return *this;
}

Quasipoly Quasipoly::operator*(const Rat& s) const {
    if (s.is_zero()) return Quasipoly();
    Quasipoly r(*this);
    for (auto& t : r.t_) t.p = t.p * s;
    return r;
}

Quasipoly operator*(const Quasipoly& a, const Quasipoly& b) {
    // product rules: cc = (c+ + c-)/2, ss = (c+ - c-)/2, cs = (s+ - s-)/2
    std::vector<QTerm> out;
    Rat h(1, 2);
    for (const auto& ta : a.t_)
        for (const auto& tb : b.t_) {
            Poly p = (ta.p * tb.p) * h;
            Rat sum = ta.alpha + tb.alpha, dif = ta.alpha - tb.alpha;
            bool ac = ta.kind == QKind::Cosh, bc = tb.kind == QKind::Cosh;
            if (ac && bc) {
                out.push_back(QTerm{p, sum, QKind::Cosh});
                out.push_back(QTerm{p, dif, QKind::Cosh});
            } else if (!ac && !bc) {
                out.push_back(QTerm{p, sum, QKind::Cosh});
                out.push_back(QTerm{-p, dif, QKind::Cosh});
            } else if (ac && !bc) {
                out.push_back(QTerm{p, sum, QKind::Sinh});
                out.push_back(QTerm{-p, dif, QKind::Sinh});
            } else {
                out.push_back(QTerm{p, sum, QKind::Sinh});
                out.push_back(QTerm{p, dif, QKind::Sinh});
            }
        }
    return Quasipoly(std::move(out));
}

Rat Quasipoly::eval_at_zero() const {
    Rat r(0);
    for (const auto& t : t_)
        if (t.kind == QKind::Cosh) r += t.p.coeff(0);
    return r;
}

bool Quasipoly::is_even() const {
    for (const auto& t : t_) {
        // cosh terms need even multipliers, sinh terms odd ones
        Parity want = t.kind == QKind::Cosh ? Parity::Even : Parity::Odd;
        if (t.p.parity() != want) return false;
    }
    return true;
}

XSeries Quasipoly::expand(int order) const {
    XSeries r(order);
    for (const auto& t : t_) {
        XSeries fn = t.kind == QKind::Cosh ? XSeries::cosh(t.alpha, order)
                                           : XSeries::sinh(t.alpha, order);
        r += XSeries::from_poly(t.p, order) * fn;
    }
    return r;
}

Quasipoly Quasipoly::derivative() const {
    std::vector<QTerm> out;
    for (const auto& t : t_) {
        out.push_back(QTerm{t.p.derivative(), t.alpha, t.kind});
        out.push_back(QTerm{t.p * t.alpha, t.alpha,
                            t.kind == QKind::Cosh ? QKind::Sinh : QKind::Cosh});
    }
    return Quasipoly(std::move(out));
}

Quasipoly Quasipoly::apply_ode(const Poly& b) const {
    Quasipoly r, d(*this);
    for (int i = 0; i <= b.degree(); ++i) {
        if (!b.coeff(i).is_zero()) r += d * b.coeff(i);
        if (i < b.degree()) d = d.derivative();
    }
    return r;
}

Poly minimal_annihilator(const Quasipoly& F, Parity parity, bool* trivial) {
    if (trivial) *trivial = F.is_zero();
    if (F.is_zero()) return Poly(Rat(1));

    std::map<Rat, int> mult;  // alpha -> max multiplier degree
    for (const auto& t : F.terms()) {
        auto it = mult.find(t.alpha);
        int d = t.p.degree();
        if (it == mult.end()) mult[t.alpha] = d;
        else it->second = std::max(it->second, d);
    }
    Poly b(Rat(1));
    int zero_exp = 0;
    for (const auto& [alpha, d] : mult) {
        if (alpha.is_zero()) {
            zero_exp = d + 1;
        } else {
            Poly f({-(alpha * alpha), Rat(0), Rat(1)});  // w^2 - alpha^2
            b *= f.pow(d + 1);
        }
    }
    bool want_odd = parity == Parity::Odd;
    if ((zero_exp % 2 == 1) != want_odd) ++zero_exp;  // bump by one factor of w
    b *= Poly::monomial(zero_exp);
    return b;
}

}  // namespace winf
