#pragma once

#include <map>
#include <utility>

#include "winf/dop.hpp"
#include "winf/rmpoly.hpp"
#include "winf/series.hpp"

namespace winf {

// Finite [-N..N]^2 truncation of a gl^[m] matrix plus a central coefficient.
class Window {
public:
    Window(int N, int m) : N_(N), m_(m), central_(m) {}

    int halfwidth() const { return N_; }
    int m() const { return m_; }
    const RmPoly& central() const { return central_; }
    RmPoly& central() { return central_; }

    bool in_window(int i, int j) const { return -N_ <= i && i <= N_ && -N_ <= j && j <= N_; }
    RmPoly entry(int i, int j) const;
    void add_entry(int i, int j, const RmPoly& v);
    const std::map<std::pair<int, int>, RmPoly>& entries() const { return e_; }
    int bandwidth() const;  // max |i-j| over nonzero entries
    bool is_zero() const;

    Window operator-() const;
    Window& operator+=(const Window& o);
    Window& operator-=(const Window& o);
    friend Window operator+(Window a, const Window& b) { return a += b; }
    friend Window operator-(Window a, const Window& b) { return a -= b; }
    Window operator*(const Rat& s) const;
    friend bool operator==(const Window& a, const Window& b);

    // Entrywise equality on the interior |i|,|j| <= radius.
    static bool equal_interior(const Window& a, const Window& b, int radius);

    // Copy with entries outside [lo,hi]^2 dropped (central kept).
    Window restricted(int lo, int hi) const;

private:
    int N_, m_;
    std::map<std::pair<int, int>, RmPoly> e_;
    RmPoly central_;
};

Window unit_matrix(int N, int m, int i, int j);  // E_{ij}

// Matrix commutator plus the Tr([J,A]B) central term. Throws when the
// combined bandwidths could push products past the window edge.
Window window_bracket(const Window& a, const Window& b);

enum class PhiVariant { General, Minus, Plus };

// phi_s^{[m]} applied to a central-free DOp, truncated to the window.
// The variant validates membership of `a` in the matching subalgebra.
Window phi(const Rat& s, int m, PhiVariant variant, const DOp& a, int N);

// Central correction of hat-phi on the weight-zero generator of x-degree n:
// basis element D^n (minus case) or (D+1/2)^n (plus/general case).
RmPoly hat_phi_correction(const Rat& s, int m, PhiVariant variant, int n);

// phi with the weight-zero central corrections folded in; image of C is 1.
Window hat_phi(const Rat& s, int m, PhiVariant variant, const DOp& a, int N);

enum class ClassicalKind { BMinus, BPlus, C, D };

// Entrywise test of the defining relation of the classical subalgebra.
// Throws when the reflected index range leaves the window.
bool classical_membership(ClassicalKind kind, const Window& a);

enum class WeightAlgebra { GL, B, C, D };

struct LabelTable {
    std::vector<Rat> c;                          // c_j, j = 0..m
    std::map<int, std::vector<Rat>> lambda;      // i -> lambda_i^{(j)}
    std::map<int, std::vector<Rat>> h;           // i -> h_i^{(j)}
};

// Labels and central charges from a weight given by its values on u^j E_ii.
LabelTable labels_from_weight(WeightAlgebra alg, const std::map<int, RmPoly>& diag,
                              const RmPoly& central);

}  // namespace winf
