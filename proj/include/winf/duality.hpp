#pragma once

#include <string>

#include "winf/fock.hpp"
#include "winf/hweight.hpp"
#include "winf/qchar.hpp"

namespace winf {

enum class DualPair {
    Sp_dminus,      // (Sp(2l), D^-) on fermion pairs
    O2l_dplus,      // (O(2l), D^+) on fermion pairs
    O2l1_dplus,     // (O(2l+1), D^+) on fermions + neutral fermion
    Pin_dminus,     // (Pin(2l), D^-) on integer-moded fermions
    Sp_dplus_ghost, // (Sp(2l), D^+) on bosonic ghosts
    O2l_cminus,     // (O(2l), D^-) on bosonic ghosts
    O2l1_cminus,    // (O(2l+1), D^-) on ghosts + neutral boson
};

DualPair dual_pair_from_name(const std::string& name);
std::string dual_pair_name(DualPair p);
Realization realization_of(DualPair p);

struct DualityBlock {
    std::vector<long long> lam;
    bool det = false;
    Rat dim;
    int shift2 = -1;
    bool formula_rhs = true;  // false: generated-submodule comparison
    bool ok = false;
    std::string detail;
};

struct DualityReport {
    std::string pair;
    int l = 0;
    int cutoff2 = 0;
    bool equal = false;
    int first_mismatch2 = -1;
    std::vector<DualityBlock> blocks;
    std::string detail;
};

DualityReport dual_decomposition_check(DualPair pair, int l, int cutoff_e2);

}  // namespace winf
