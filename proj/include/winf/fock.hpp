#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "winf/dop.hpp"
#include "winf/series.hpp"

namespace winf {

// Free-field realizations of the two subalgebras (sections 8-12 layout).
enum class Realization {
    Fl_sp,             // fermion pairs, half-integer modes; T-fields; c = l
    Fl_pin,            // fermion pairs, integer modes; T-fields; c = l
    Fminusl_o2l,       // ghost pairs; T-fields; c = -l
    Fminusl_half,      // ghosts + twisted neutral boson; T-fields; c = -l-1/2
    Flhalf_osp,        // fermions + twisted neutral boson; T-fields; c = l-1/2
    Flhalf_spin,       // integer-moded fermions + twisted neutral fermion; T; c = l+1/2
    Fl_dplus,          // fermion pairs, half-integer modes; W-fields; c = l
    Fl_btilde,         // fermion pairs, integer modes; W-fields (s=1/2 twist); c = l
    Flhalf_dplus,      // fermions + neutral fermion; W-fields; c = l+1/2
    Fminusl_cd,        // ghost pairs; W-fields; c = -l
    Fminuslhalf_ospd,  // ghosts + neutral fermion; W-fields; c = -l+1/2
};

Realization realization_from_name(const std::string& name);
std::string realization_name(Realization r);

enum class Species : int {
    PsiPlus = 0,
    PsiMinus = 1,
    GammaPlus = 2,
    GammaMinus = 3,
    NeutralFermion = 4,  // phi, delta-contraction (possibly (-1)^m twisted)
    NeutralBoson = 5,    // chi, (-1)^{m+1/2} twisted commutator
};

// One creation/annihilation operator: species, color, mode (doubled).
struct Mode {
    Species sp;
    int color;
    int m2;  // twice the mode index
};

// Canonically ordered creation string applied to |0>; keys ascending.
struct FockState {
    std::vector<int32_t> slots;
    bool operator<(const FockState& o) const { return slots < o.slots; }
    bool operator==(const FockState& o) const { return slots == o.slots; }
};

using StateSum = std::map<FockState, Rat>;

int32_t encode_mode(Species sp, int color, int m2);
Mode decode_mode(int32_t key);

class ModeSystem {
public:
    ModeSystem(Realization r, int l);

    Realization realization() const { return r_; }
    int colors() const { return l_; }
    bool has_neutral() const { return neutral_ != 0; }
    Species neutral_species() const;
    bool integer_moded() const { return int_moded_; }
    Rat central_charge() const;
    Rat twist() const { return s_; }           // the s of the T/W basis used
    int sign() const { return sign_; }         // -1: D^-; +1: D^+
    bool uses_w_basis() const { return sign_ > 0; }

    bool fermionic(Species sp) const;
    // contraction [X_m, partner_{-m}]_{+-} value
    Rat contraction(Species sp, int m2) const;
    Species partner(Species sp) const;

    // single operator application, exact
    StateSum apply(const Mode& mode, const StateSum& v) const;
    // normal-ordered bilinear :A B:
    StateSum apply_no_pair(const Mode& a, const Mode& b, const Rat& coef, const StateSum& v) const;

    // action of t^k g(D) (+ central gamma) through the realization
    StateSum act(const DOp& a, const StateSum& v) const;
    // the k-th mode of the degree-n field (T^n or W^n per realization)
    DOp field_basis_element(int n, int k) const;
    StateSum field_mode(int n, int k, const StateSum& v) const;

    // basis of states with energy*2 <= maxE2; sorted
    std::vector<FockState> basis(int maxE2) const;
    Rat energy(const FockState& st) const;
    int energy2(const FockState& st) const;
    std::vector<int> charge_vector(const FockState& st) const;
    int fermion_parity(const FockState& st) const;

    // classical pair operator rho(E_{ij} - reflected), all species included
    StateSum apply_pair(int i, int j, const Rat& coef, const StateSum& v) const;

private:
    StateSum apply_gl(int i, int j, const Rat& coef, const StateSum& v, Species plus,
                      Species minus) const;
    Realization r_;
    int l_;
    int neutral_ = 0;  // 0 none, 1 fermion, 2 boson
    bool int_moded_ = false;
    bool neutral_int_moded_ = false;
    bool ghosts_ = false;
    int sign_ = -1;
    Rat s_;
};

struct VirasoroReport {
    bool consistent = false;
    Rat central_charge;
    std::string detail;
};

VirasoroReport virasoro_check(Realization r, int l, int cutoff_e2);

bool locality_check(Realization r, int l, int m, int n, int cutoff_e2);

// Coefficients c_i with Psi^{m,n} = sum_i c_i d^i W^{m+n-i}; indices i with
// i = m+n-1 mod 2. Throws if the linear system is inconsistent.
std::map<int, Rat> psi_reduction(int m, int n);

// singular vector test: all W^n_k (k >= 1, n odd <= nmax) annihilate v
bool singular_check(const ModeSystem& sys, const StateSum& v, int nmax, int kmax);

// multiplicity table: (2*energy, charge vector) -> count
std::map<std::pair<int, std::vector<int>>, long long> graded_character(const ModeSystem& sys,
                                                                       int cutoff_e2);

}  // namespace winf
