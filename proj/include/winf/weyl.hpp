#pragma once

#include <map>
#include <string>
#include <vector>

#include "winf/rat.hpp"

namespace winf {

// Weyl dimension formulas for the classical families; lam is weakly
// decreasing, possibly half-integral (spin weights).
Rat weyl_dim_sp(int l, const std::vector<Rat>& lam);
Rat weyl_dim_so_odd(int l, const std::vector<Rat>& lam);   // SO(2l+1)
Rat weyl_dim_so_even(int l, const std::vector<Rat>& lam);  // SO(2l)

// Named entry point: group in {"Sp(2l)", "SO(2l)", "SO(2l+1)"} with the
// actual size substituted, e.g. "Sp(4)", "SO(3)".
Rat weyl_dim(const std::string& group, const std::vector<Rat>& lam);

enum class RootFamily { B, C, D };

// Alternating Weyl-group extraction of highest-weight multiplicities: data
// maps doubled weight vectors to coefficients, lam2/rho2 are doubled.
// Returns sum_w det(w) data[w(lam+rho) - rho].
Rat weyl_alternant(RootFamily fam, const std::map<std::vector<int>, Rat>& data,
                   const std::vector<int>& lam2);

std::vector<int> rho2_of(RootFamily fam, int rank);

}  // namespace winf
