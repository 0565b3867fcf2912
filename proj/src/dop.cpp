#include "winf/dop.hpp"

#include <stdexcept>

namespace winf {

DOp DOp::term(int k, Poly f) {
    DOp r;
    r.add_term(k, f);
    return r;
}

DOp DOp::central(Rat c) {
    DOp r;
    r.central_ = std::move(c);
    return r;
}

DOp DOp::d() { return term(0, Poly::x()); }
DOp DOp::t(int k) { return term(k, Poly(Rat(1))); }

Poly DOp::component(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly() : it->second;
}

void DOp::add_term(int k, const Poly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DOp DOp::operator-() const {
    DOp r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, -f);
    r.central_ = -central_;
    return r;
}

DOp& DOp::operator+=(const DOp& o) {
    for (const auto& [k, f] : o.terms_) add_term(k, f);
    central_ += o.central_;
    return *this;
}

DOp& DOp::operator-=(const DOp& o) {
    for (const auto& [k, f] : o.terms_) add_term(k, -f);
    central_ -= o.central_;
    return *this;
}

DOp DOp::operator*(const Rat& s) const {
    DOp r;
    if (s.is_zero()) return r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, f * s);
    r.central_ = central_ * s;
    return r;
}

namespace {

// Psi(t^r f(D), t^s g(D)) per the sum formula; zero unless r + s = 0.
Rat psi_pair(int r, const Poly& f, int s, const Poly& g) {
    if (r + s != 0) return Rat(0);
    if (r < 0) return -psi_pair(s, g, r, f);
    Rat total(0);
    for (int j = -r; j <= -1; ++j) total += f.eval(Rat(j)) * g.eval(Rat(j + r));
    return total;
}

}  // namespace

DOp bracket(const DOp& a, const DOp& b) {
    DOp res;
    for (const auto& [r, f] : a.terms())
        for (const auto& [s, g] : b.terms()) {
            // t^{r+s} ( f(D+s) g(D) - f(D) g(D+r) )
            Poly p = f.shift(Rat(s)) * g - f * g.shift(Rat(r));
            res.add_term(r + s, p);
            res.add_central(psi_pair(r, f, s, g));
        }
    return res;
}

Rat cocycle_sum(const DOp& a, const DOp& b) {
    Rat total(0);
    for (const auto& [r, f] : a.terms())
        for (const auto& [s, g] : b.terms()) total += psi_pair(r, f, s, g);
    return total;
}

std::vector<Rat> falling_coeffs(const Poly& h) {
    std::vector<Rat> c(h.degree() + 1, Rat(0));
    Poly rem = h;
    for (int l = h.degree(); l >= 0; --l) {
        if (rem.is_zero()) break;
        if (rem.degree() < l) continue;
        c[l] = rem.coeff(l);
        rem -= falling_factorial(l) * c[l];
    }
    return c;
}

namespace {

// Laurent polynomial in t as map exponent -> coefficient.
using Laurent = std::map<int, Rat>;

Laurent laurent_derivative(const Laurent& f) {
    Laurent r;
    for (const auto& [e, c] : f)
        if (e != 0) r[e - 1] = c * Rat(e);
    return r;
}

Rat residue(const Laurent& f, const Laurent& g) {
    Rat r(0);
    for (const auto& [e, c] : f) {
        auto it = g.find(-1 - e);
        if (it != g.end()) r += c * it->second;
    }
    return r;
}

// DOp as sum_m f_m(t) d_t^m: t^k h(D) with h = sum c_l [w]_l gives
// f_l += c_l t^{k+l}.
std::map<int, Laurent> to_dt_form(const DOp& a) {
    std::map<int, Laurent> out;
    for (const auto& [k, h] : a.terms()) {
        auto c = falling_coeffs(h);
        for (size_t l = 0; l < c.size(); ++l)
            if (!c[l].is_zero()) out[(int)l][k + (int)l] += c[l];
    }
    return out;
}

}  // namespace

Rat cocycle_residue(const DOp& a, const DOp& b) {
    auto fa = to_dt_form(a), fb = to_dt_form(b);
    Rat total(0);
    for (const auto& [m, f] : fa)
        for (const auto& [n, g] : fb) {
            Laurent fd = f;
            for (int i = 0; i <= n; ++i) fd = laurent_derivative(fd);
            Laurent gd = g;
            for (int i = 0; i < m; ++i) gd = laurent_derivative(gd);
            Rat coef = factorial(m) * factorial(n) / factorial(m + n + 1);
            total += coef * residue(fd, gd);
        }
    return total;
}

DOp anti_involution(const InvolutionTag& tag, const DOp& a) {
    if (a.has_central()) throw std::invalid_argument("anti_involution: central part must vanish");
    DOp r;
    for (const auto& [k, f] : a.terms()) {
        Rat sgn = (tag.sign < 0 && (k % 2 != 0)) ? Rat(-1) : Rat(1);
        Poly img = f.compose(Poly({tag.b - Rat(k), Rat(-1)})) * sgn;
        r.add_term(k, img);
    }
    return r;
}

DOp theta(const Rat& s, const DOp& a) {
    DOp r = DOp::central(a.central_part());
    for (const auto& [k, f] : a.terms()) r.add_term(k, f.shift(s));
    return r;
}

bool membership(int sign, const Rat& b, const DOp& a) {
    for (const auto& [k, f] : a.terms()) {
        // recenter: t^k f(D) = t^k g(D + (k-b)/2), i.e. g(w) = f(w - (k-b)/2)
        Poly g = f.shift((b - Rat(k)) / Rat(2));
        Parity want;
        if (sign > 0) want = Parity::Odd;
        else want = (k % 2 != 0) ? Parity::Even : Parity::Odd;
        if (g.parity() != want) return false;
    }
    return true;
}

DOp basis_element(BasisKind kind, int n, const Rat& s, int k) {
    if (n < 1) throw std::invalid_argument("basis_element: n must be >= 1");
    Poly ff = falling_factorial(n);
    if (kind == BasisKind::T) {
        // -t^k ( [D-s]_n + (-1)^{k+1} [-D-k-s]_n )
        Poly p = ff.compose(Poly({-s, Rat(1)}));
        Poly q = ff.compose(Poly({Rat(-k) - s, Rat(-1)}));
        Rat sgn = (k % 2 == 0) ? Rat(-1) : Rat(1);
        return DOp::term(k, -(p + q * sgn));
    }
    // -1/2 t^k ( [D+s]_n - [-D-k-1+s]_n )
    Poly p = ff.compose(Poly({s, Rat(1)}));
    Poly q = ff.compose(Poly({s - Rat(k) - Rat(1), Rat(-1)}));
    return DOp::term(k, (p - q) * Rat(-1, 2));
}

}  // namespace winf
