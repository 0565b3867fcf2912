#pragma once

#include <map>

#include "winf/poly.hpp"

namespace winf {

// Element of the central extension of differential operators on the circle:
// finite sum over k of t^k f_k(D) plus a central coefficient.
class DOp {
public:
    DOp() {}

    static DOp term(int k, Poly f);          // t^k f(D)
    static DOp central(Rat c);
    static DOp d();                          // D
    static DOp t(int k = 1);                 // t^k

    const std::map<int, Poly>& terms() const { return terms_; }
    const Rat& central_part() const { return central_; }
    Poly component(int k) const;
    bool is_zero() const { return terms_.empty() && central_.is_zero(); }
    bool has_central() const { return !central_.is_zero(); }
    DOp noncentral() const { DOp r(*this); r.central_ = Rat(0); return r; }

    DOp operator-() const;
    DOp& operator+=(const DOp& o);
    DOp& operator-=(const DOp& o);
    friend DOp operator+(DOp a, const DOp& b) { return a += b; }
    friend DOp operator-(DOp a, const DOp& b) { return a -= b; }
    DOp operator*(const Rat& s) const;
    friend bool operator==(const DOp& a, const DOp& b) {
        return a.terms_ == b.terms_ && a.central_ == b.central_;
    }
    friend bool operator!=(const DOp& a, const DOp& b) { return !(a == b); }

    void add_term(int k, const Poly& f);
    void add_central(const Rat& c) { central_ += c; }

private:
    std::map<int, Poly> terms_;
    Rat central_;
};

struct InvolutionTag {
    int sign;  // +1 or -1
    Rat b;
};

// Lie bracket with the central 2-cocycle of Eq.-(12)-type relations.
DOp bracket(const DOp& a, const DOp& b);
// The two cocycle formulas (finite sum form and residue form).
Rat cocycle_sum(const DOp& a, const DOp& b);
Rat cocycle_residue(const DOp& a, const DOp& b);

// sigma_{+-,b}(t^k f(D)) = (+-1)^k t^k f(-D-k+b); rejects central parts.
DOp anti_involution(const InvolutionTag& tag, const DOp& a);
// Theta_s: D -> D + s, t -> t.
DOp theta(const Rat& s, const DOp& a);

// Membership in the fixed subalgebra of -sigma_{sign,b}.
bool membership(int sign, const Rat& b, const DOp& a);

enum class BasisKind { T, W };
// T^{n,s}_k and W^{n,s}_k of the distinguished bases.
DOp basis_element(BasisKind kind, int n, const Rat& s, int k);

// Expand h(w) in the falling-factorial basis: h = sum_l c_l [w]_l.
std::vector<Rat> falling_coeffs(const Poly& h);

}  // namespace winf
