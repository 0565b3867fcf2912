#pragma once

#include <vector>

#include "winf/series.hpp"

namespace winf {

enum class QKind { Cosh, Sinh };

struct QTerm {
    Poly p;       // nonzero polynomial multiplier
    Rat alpha;    // >= 0 after normalization
    QKind kind;
};

// Finite sum of p(x) cosh(a x) and q(x) sinh(a x) terms, kept in a canonical
// form: alphas >= 0 and distinct per kind, no zero multipliers, no sinh term
// with alpha = 0. Sign flips a -> -a are absorbed into the sinh multiplier.
class Quasipoly {
public:
    Quasipoly() {}
    explicit Quasipoly(std::vector<QTerm> terms) : t_(std::move(terms)) { normalize(); }

    static Quasipoly term(Poly p, Rat alpha, QKind kind) {
        return Quasipoly({QTerm{std::move(p), std::move(alpha), kind}});
    }
    static Quasipoly cosh_term(Poly p, Rat alpha) { return term(std::move(p), std::move(alpha), QKind::Cosh); }
    static Quasipoly sinh_term(Poly p, Rat alpha) { return term(std::move(p), std::move(alpha), QKind::Sinh); }

    const std::vector<QTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Quasipoly operator-() const;
    Quasipoly& operator+=(const Quasipoly& o);
    Quasipoly& operator-=(const Quasipoly& o);
    friend Quasipoly operator+(Quasipoly a, const Quasipoly& b) { return a += b; }
    friend Quasipoly operator-(Quasipoly a, const Quasipoly& b) { return a -= b; }
    Quasipoly operator*(const Rat& s) const;
    friend Quasipoly operator*(const Quasipoly& a, const Quasipoly& b);
    friend bool operator==(const Quasipoly& a, const Quasipoly& b) {
        return (a - b).is_zero();
    }

    Rat eval_at_zero() const;
    bool is_even() const;   // F(-x) == F(x)
    XSeries expand(int order) const;
    Quasipoly derivative() const;
    // b(d/dx) applied to this
    Quasipoly apply_ode(const Poly& b) const;

private:
    void normalize();
    std::vector<QTerm> t_;
};

// Monic polynomial b of the requested parity, of minimal degree, with
// b(d/dx) F = 0. Zero F yields 1 (flagged via *trivial if supplied).
Poly minimal_annihilator(const Quasipoly& F, Parity parity, bool* trivial = nullptr);

}  // namespace winf
