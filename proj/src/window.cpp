#include "winf/window.hpp"

#include <cstdlib>
#include <stdexcept>

namespace winf {

RmPoly Window::entry(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? RmPoly(m_) : it->second;
}

void Window::add_entry(int i, int j, const RmPoly& v) {
    if (!in_window(i, j)) return;
    if (v.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = e_.find(key);
    if (it == e_.end()) {
        e_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) e_.erase(it);
    }
}

int Window::bandwidth() const {
    int b = 0;
    for (const auto& [ij, v] : e_) b = std::max(b, std::abs(ij.first - ij.second));
    return b;
}

bool Window::is_zero() const { return e_.empty() && central_.is_zero(); }

Window Window::operator-() const {
    Window r(N_, m_);
    for (const auto& [ij, v] : e_) r.e_.emplace(ij, -v);
    r.central_ = -central_;
    return r;
}

Window& Window::operator+=(const Window& o) {
    for (const auto& [ij, v] : o.e_) add_entry(ij.first, ij.second, v);
    central_ += o.central_;
    return *this;
}

Window& Window::operator-=(const Window& o) {
    for (const auto& [ij, v] : o.e_) add_entry(ij.first, ij.second, -v);
    central_ -= o.central_;
    return *this;
}

Window Window::operator*(const Rat& s) const {
    Window r(N_, m_);
    if (s.is_zero()) return r;
    for (const auto& [ij, v] : e_) r.e_.emplace(ij, v * s);
    r.central_ = central_ * s;
    return r;
}

bool operator==(const Window& a, const Window& b) {
    return a.e_ == b.e_ && a.central_ == b.central_;
}

bool Window::equal_interior(const Window& a, const Window& b, int radius) {
    auto check = [&](const Window& x, const Window& y) {
        for (const auto& [ij, v] : x.e_) {
            if (std::abs(ij.first) > radius || std::abs(ij.second) > radius) continue;
            if (y.entry(ij.first, ij.second) != v) return false;
        }
        return true;
    };
    return check(a, b) && check(b, a) && a.central_ == b.central_;
}

Window Window::restricted(int lo, int hi) const {
    Window r(N_, m_);
    for (const auto& [ij, v] : e_)
        if (ij.first >= lo && ij.first <= hi && ij.second >= lo && ij.second <= hi)
            r.e_.emplace(ij, v);
    r.central_ = central_;
    return r;
}

Window unit_matrix(int N, int m, int i, int j) {
    Window w(N, m);
    w.add_entry(i, j, RmPoly::unit(m));
    return w;
}

Window window_bracket(const Window& a, const Window& b) {
    if (a.halfwidth() != b.halfwidth() || a.m() != b.m())
        throw std::invalid_argument("window_bracket: shape mismatch");
    int N = a.halfwidth();
    if (a.bandwidth() + b.bandwidth() > N)
        throw std::domain_error("window_bracket: boundary contamination (bandwidths exceed margin)");

    Window r(N, a.m());
    for (const auto& [ij, u] : a.entries())
        for (const auto& [kl, v] : b.entries()) {
            if (ij.second == kl.first) r.add_entry(ij.first, kl.second, u * v);
            if (kl.second == ij.first) r.add_entry(kl.first, ij.second, -(v * u));
        }
    // Tr([J,A]B) with J = sum_{j<=0} E_jj
    RmPoly central(a.m());
    for (const auto& [ij, u] : a.entries()) {
        int i = ij.first, j = ij.second;
        int weight = (i <= 0 ? 1 : 0) - (j <= 0 ? 1 : 0);
        if (weight == 0) continue;
        RmPoly bji = b.entry(j, i);
        if (bji.is_zero()) continue;
        central += (u * bji) * Rat(weight);
    }
    r.central() = central;
    return r;
}

Window phi(const Rat& s, int m, PhiVariant variant, const DOp& a, int N) {
    if (a.has_central())
        throw std::invalid_argument("phi: operand must be central-free (use hat_phi)");
    if (variant == PhiVariant::Minus && !membership(-1, Rat(0), a))
        throw std::invalid_argument("phi: operand not in D^- for the minus variant");
    if (variant == PhiVariant::Plus && !membership(+1, Rat(-1), a))
        throw std::invalid_argument("phi: operand not in D^+ for the plus variant");

    Window w(N, m);
    for (const auto& [k, g] : a.terms()) {
        // derivatives g^{(i)} for the u-expansion
        std::vector<Poly> der(m + 1);
        der[0] = g;
        for (int i = 1; i <= m; ++i) der[i] = der[i - 1].derivative();
        Rat ifact(1);
        for (int j = -N; j <= N; ++j) {
            if (j - k < -N || j - k > N) continue;
            RmPoly v(m);
            ifact = Rat(1);
            for (int i = 0; i <= m; ++i) {
                if (i > 0) ifact *= Rat(i);
                v.coeff(i) = der[i].eval(Rat(-j) + s) / ifact;
            }
            w.add_entry(j - k, j, v);
        }
    }
    return w;
}

RmPoly hat_phi_correction(const Rat& s, int m, PhiVariant variant, int n) {
    if (variant != PhiVariant::General && n % 2 == 0)
        throw std::invalid_argument("hat_phi_correction: n must be odd in the +- variants");
    int order = n + 2;
    XSeries sinh_half = XSeries::sinh(Rat(1, 2), order);
    RmPoly out(m);

    auto eta = [&](int j, const Rat& mu) {
        // x^j/(j!) times cosh(mu x) (j even) or sinh(mu x) (j odd)
        XSeries base = (j % 2 == 0) ? XSeries::cosh(mu, order) : XSeries::sinh(mu, order);
        XSeries r(order);
        for (int i = 0; i + j <= order; ++i) r.set(i + j, base.coeff(i));
        return r * (Rat(1) / factorial(j));
    };

    if (variant == PhiVariant::General) {
        // (e^{(s+1/2)x} e^{xu} - e^{x/2}) / (e^x - 1), coefficient of u^j
        XSeries den = XSeries::exp(Rat(1), order) - XSeries::from_poly(Poly(Rat(1)), order);
        XSeries es = XSeries::exp(s + Rat(1, 2), order);
        Rat jfact(1);
        for (int j = 0; j <= m; ++j) {
            if (j > 0) jfact *= Rat(j);
            XSeries num(order);
            for (int i = 0; i + j <= order; ++i) num.set(i + j, es.coeff(i) / jfact);
            if (j == 0) num -= XSeries::exp(Rat(1, 2), order);
            out.coeff(j) = (num / den).coeff(n) * factorial(n);
        }
        return out;
    }

    Rat mu = variant == PhiVariant::Minus ? s - Rat(1, 2) : s;
    for (int j = 0; j <= m; ++j) {
        XSeries num = eta(j, mu);
        if (j == 0) {
            // minus: cosh((s-1/2)x) - cosh(x/2); plus: cosh(sx) - 1
            num -= variant == PhiVariant::Minus ? XSeries::cosh(Rat(1, 2), order)
                                                : XSeries::from_poly(Poly(Rat(1)), order);
        }
        out.coeff(j) = (num / sinh_half).coeff(n) * factorial(n) * Rat(1, 2);
    }
    return out;
}

Window hat_phi(const Rat& s, int m, PhiVariant variant, const DOp& a, int N) {
    Window w = phi(s, m, variant, a.noncentral(), N);
    // central corrections: from the weight-zero component, plus phi(C) = 1
    RmPoly corr(m);
    Poly f0 = a.component(0);
    if (!f0.is_zero()) {
        Poly p = variant == PhiVariant::Minus ? f0 : f0.shift(Rat(-1, 2));
        for (int n = 1; n <= p.degree(); ++n) {
            if (p.coeff(n).is_zero()) continue;
            corr += hat_phi_correction(s, m, variant, n) * p.coeff(n);
        }
    }
    w.central() -= corr;
    w.central() += RmPoly::scalar(m, a.central_part());
    return w;
}

bool classical_membership(ClassicalKind kind, const Window& a) {
    auto reflected = [&](int i, int j) {
        switch (kind) {
            case ClassicalKind::BMinus:
            case ClassicalKind::BPlus: return std::make_pair(-j, -i);
            default: return std::make_pair(1 - j, 1 - i);
        }
    };
    auto relation_rhs = [&](int i, int j, const RmPoly& refl) {
        RmPoly v = refl.negate_u();
        switch (kind) {
            case ClassicalKind::BMinus:
            case ClassicalKind::C: {
                int sgn = ((i + j) % 2 == 0) ? -1 : 1;  // (-1)^{i+j+1}
                return v * Rat(sgn);
            }
            default: return -v;  // b+ and d: plain minus
        }
    };
    for (const auto& [ij, v] : a.entries()) {
        auto [ri, rj] = reflected(ij.first, ij.second);
        if (!a.in_window(ri, rj))
            throw std::domain_error("classical_membership: reflection exits window");
        if (v != relation_rhs(ij.first, ij.second, a.entry(ri, rj))) return false;
    }
    return true;
}

LabelTable labels_from_weight(WeightAlgebra alg, const std::map<int, RmPoly>& diag,
                              const RmPoly& central) {
    int m = central.m();
    auto val = [&](int i) {
        auto it = diag.find(i);
        return it == diag.end() ? RmPoly(m) : it->second;
    };
    int lo = 0, hi = 0;
    for (const auto& [i, v] : diag) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }

    LabelTable out;
    for (int j = 0; j <= m; ++j) out.c.push_back(central.coeff(j));

    auto push = [&](std::map<int, std::vector<Rat>>& tab, int i, int j, const Rat& v) {
        auto& row = tab[i];
        row.resize(m + 1, Rat(0));
        row[j] = v;
    };

    if (alg == WeightAlgebra::GL) {
        for (int i = lo - 1; i <= hi + 1; ++i)
            for (int j = 0; j <= m; ++j) {
                Rat li = val(i).coeff(j);
                push(out.lambda, i, j, li);
                Rat h = li - val(i + 1).coeff(j);
                if (i == 0) h += central.coeff(j);
                push(out.h, i, j, h);
            }
        return out;
    }

    int bound = std::max(std::abs(lo), std::abs(hi)) + 1;
    auto pair_lambda = [&](int i, int j) {
        // b: diag[i] - (-u)^j diag[-i]; c,d: diag[i] - (-u)^j diag[1-i]
        int mirror = alg == WeightAlgebra::B ? -i : 1 - i;
        Rat sgn = (j % 2 == 0) ? Rat(1) : Rat(-1);
        return val(i).coeff(j) - sgn * val(mirror).coeff(j);
    };

    for (int j = 0; j <= m; ++j) {
        for (int i = 1; i <= bound + 1; ++i) push(out.lambda, i, j, pair_lambda(i, j));
        for (int i = 1; i <= bound; ++i)
            push(out.h, i, j, pair_lambda(i, j) - pair_lambda(i + 1, j));
        switch (alg) {
            case WeightAlgebra::B: {
                if (j % 2 == 1) push(out.lambda, 0, j, Rat(2) * val(0).coeff(j));
                Rat h0 = (j % 2 == 0)
                             ? Rat(-2) * pair_lambda(1, j) + Rat(2) * central.coeff(j)
                             : Rat(2) * val(0).coeff(j) - pair_lambda(1, j) + central.coeff(j);
                push(out.h, 0, j, h0);
                break;
            }
            case WeightAlgebra::C: {
                Rat h0 = (j % 2 == 0) ? -pair_lambda(1, j) + central.coeff(j) : central.coeff(j);
                push(out.h, 0, j, h0);
                break;
            }
            case WeightAlgebra::D: {
                Rat h0 = -pair_lambda(1, j) - pair_lambda(2, j) + Rat(2) * central.coeff(j);
                push(out.h, 0, j, h0);
                break;
            }
            default: break;
        }
    }
    return out;
}

}  // namespace winf
