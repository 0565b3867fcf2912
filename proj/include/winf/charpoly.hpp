#pragma once

#include <map>
#include <string>
#include <vector>

#include "winf/poly.hpp"

namespace winf {

// Characteristic polynomials b_k of a parabolic subalgebra, indexed by k >= 1.
// Zero polynomial marks an (ostensibly) trivial degree piece.
using CharPolySeq = std::map<int, Poly>;

// Monic generator of the C[w]^{(0)}-module spanned by gens inside the parity
// module; 0 for an empty list. Throws if a generator violates the parity.
Poly char_poly_of_ideal(const std::vector<Poly>& gens, Parity module_parity);

struct DivisibilityClause {
    std::string name;
    int k = 0, l = 0;
    bool pass = false;
    bool skipped = false;
};

struct DivisibilityReport {
    std::vector<DivisibilityClause> clauses;
    bool all_pass() const {
        for (const auto& c : clauses)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

// Checks the divisibility lemmas for the minus (+1 -> plus) case on all k, l
// with every index involved present in seq.
DivisibilityReport verify_char_divisibility(const CharPolySeq& seq, int sign);

// Characteristic polynomials of the parabolic subalgebra generated by the
// nonnegative part together with t^{-1} b1(D - 1/2) (minus case) or
// t^{-1} b1(D) (plus case), computed by bracket closure up to depth kmax.
CharPolySeq generated_parabolic(const Poly& b1, int sign, int kmax);

}  // namespace winf
