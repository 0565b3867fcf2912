#pragma once

#include <map>
#include <vector>

#include "winf/quasipoly.hpp"

namespace winf {

// Highest weight for one of the two subalgebras, carried by the exact
// quasipolynomial F = 2 Delta(x) sinh(x/2) together with the central charge.
struct HWeight {
    int sign;      // -1 or +1
    Rat c;
    Quasipoly F;

    // Delta_n labels for odd n (zero entries at even n), n <= nmax.
    std::vector<Rat> delta_labels(int nmax) const;
};

struct SpectrumTerm {
    Rat e;      // exponent, normalized >= 0 (odd type: > 0)
    Poly mult;  // even polynomial for even type, odd polynomial for odd type
};

struct Spectrum {
    int sign;
    std::vector<SpectrumTerm> even_type;
    std::vector<SpectrumTerm> odd_type;
    Rat c;

    Rat even_mult_const(const Rat& e) const;  // constant multiplicity at e (0 if absent)
};

struct NotQuasifinite : std::domain_error {
    using std::domain_error::domain_error;
};

Spectrum spectrum_from_delta(const HWeight& w);
HWeight delta_from_spectrum(const Spectrum& sp);

struct ClassifyResult {
    bool quasifinite = false;
    bool primitive = false;
    bool positive_primitive = false;
    bool unitary = false;
    Poly char_poly;
    bool char_poly_trivial = false;
};

ClassifyResult classify(const Spectrum& sp);

enum class LabelMap { GLMinus, B, C, GLPlus, D, BTilde };

// Labels h_i^{(j)} as map i -> coefficients j = 0..m; c_j likewise.
Spectrum spectrum_from_labels(LabelMap map, const Rat& s, int m,
                              const std::map<int, std::vector<Rat>>& h,
                              const std::vector<Rat>& cj);

struct ClassBlock {
    LabelMap algebra;
    Rat s;    // class representative
    int m;    // largest u-power carrying data
    std::map<int, std::vector<Rat>> h;
    std::vector<Rat> cj;
};

using ClassData = std::vector<ClassBlock>;

// Partition of a quasifinite spectrum into classical-algebra realization data.
ClassData realize_partition(const Spectrum& sp, int sign);

}  // namespace winf
