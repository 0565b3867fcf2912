#include "winf/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include "winf/window.hpp"

namespace winf {

Realization realization_from_name(const std::string& name) {
    static const std::map<std::string, Realization> table = {
        {"Fl-sp", Realization::Fl_sp},
        {"Fl-pin", Realization::Fl_pin},
        {"F-l-o2l", Realization::Fminusl_o2l},
        {"F-l-half", Realization::Fminusl_half},
        {"Fl-half-osp", Realization::Flhalf_osp},
        {"Fl-half-spin", Realization::Flhalf_spin},
        {"Fl-dplus", Realization::Fl_dplus},
        {"Fl-btilde", Realization::Fl_btilde},
        {"Fl-half-dplus", Realization::Flhalf_dplus},
        {"F-l-cd", Realization::Fminusl_cd},
        {"F-l-half-ospd", Realization::Fminuslhalf_ospd},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown realization: " + name);
    return it->second;
}

std::string realization_name(Realization r) {
    switch (r) {
        case Realization::Fl_sp: return "Fl-sp";
        case Realization::Fl_pin: return "Fl-pin";
        case Realization::Fminusl_o2l: return "F-l-o2l";
        case Realization::Fminusl_half: return "F-l-half";
        case Realization::Flhalf_osp: return "Fl-half-osp";
        case Realization::Flhalf_spin: return "Fl-half-spin";
        case Realization::Fl_dplus: return "Fl-dplus";
        case Realization::Fl_btilde: return "Fl-btilde";
        case Realization::Flhalf_dplus: return "Fl-half-dplus";
        case Realization::Fminusl_cd: return "F-l-cd";
        case Realization::Fminuslhalf_ospd: return "F-l-half-ospd";
    }
    return "?";
}

int32_t encode_mode(Species sp, int color, int m2) {
    return ((int32_t)(m2 + 16384) << 9) | ((color & 0x3f) << 3) | (int)sp;
}

Mode decode_mode(int32_t key) {
    Mode m;
    m.sp = (Species)(key & 7);
    m.color = (key >> 3) & 0x3f;
    m.m2 = (key >> 9) - 16384;
    return m;
}

ModeSystem::ModeSystem(Realization r, int l) : r_(r), l_(l) {
    switch (r) {
        case Realization::Fl_sp: sign_ = -1; s_ = Rat(1, 2); break;
        case Realization::Fl_pin: sign_ = -1; s_ = Rat(0); int_moded_ = true; break;
        case Realization::Fminusl_o2l: sign_ = -1; s_ = Rat(1, 2); ghosts_ = true; break;
        case Realization::Fminusl_half:
            sign_ = -1; s_ = Rat(1, 2); ghosts_ = true; neutral_ = 2; break;
        case Realization::Flhalf_osp: sign_ = -1; s_ = Rat(1, 2); neutral_ = 2; break;
        case Realization::Flhalf_spin:
            sign_ = -1; s_ = Rat(0); int_moded_ = true; neutral_ = 1; neutral_int_moded_ = true;
            break;
        case Realization::Fl_dplus: sign_ = +1; s_ = Rat(0); break;
        case Realization::Fl_btilde: sign_ = +1; s_ = Rat(-1, 2); int_moded_ = true; break;
        case Realization::Flhalf_dplus: sign_ = +1; s_ = Rat(0); neutral_ = 1; break;
        case Realization::Fminusl_cd: sign_ = +1; s_ = Rat(0); ghosts_ = true; break;
        case Realization::Fminuslhalf_ospd:
            sign_ = +1; s_ = Rat(0); ghosts_ = true; neutral_ = 1; break;
    }
}

Species ModeSystem::neutral_species() const {
    return neutral_ == 2 ? Species::NeutralBoson : Species::NeutralFermion;
}

Rat ModeSystem::central_charge() const {
    Rat L(l_);
    switch (r_) {
        case Realization::Fl_sp:
        case Realization::Fl_pin:
        case Realization::Fl_dplus:
        case Realization::Fl_btilde: return L;
        case Realization::Fminusl_o2l:
        case Realization::Fminusl_cd: return -L;
        case Realization::Fminusl_half: return -L - Rat(1, 2);
        case Realization::Flhalf_osp: return L - Rat(1, 2);
        case Realization::Flhalf_spin:
        case Realization::Flhalf_dplus: return L + Rat(1, 2);
        case Realization::Fminuslhalf_ospd: return -L + Rat(1, 2);
    }
    return Rat(0);
}

bool ModeSystem::fermionic(Species sp) const {
    switch (sp) {
        case Species::PsiPlus:
        case Species::PsiMinus:
        case Species::NeutralFermion: return true;
        default: return false;
    }
}

Species ModeSystem::partner(Species sp) const {
    switch (sp) {
        case Species::PsiPlus: return Species::PsiMinus;
        case Species::PsiMinus: return Species::PsiPlus;
        case Species::GammaPlus: return Species::GammaMinus;
        case Species::GammaMinus: return Species::GammaPlus;
        default: return sp;
    }
}

Rat ModeSystem::contraction(Species sp, int m2) const {
    switch (sp) {
        case Species::PsiPlus:
        case Species::PsiMinus: return Rat(1);
        case Species::GammaPlus: return Rat(1);    // [gamma+_m, gamma-_{-m}] = 1
        case Species::GammaMinus: return Rat(-1);  // antisymmetry of the commutator
        case Species::NeutralFermion:
            // untwisted: 1; twisted phi (integer moded): (-1)^m
            if (neutral_int_moded_) return (m2 / 2) % 2 == 0 ? Rat(1) : Rat(-1);
            return Rat(1);
        case Species::NeutralBoson: {
            // [chi_m, chi_{-m}] = (-1)^{m + 1/2}, m in Z + 1/2
            int e = (m2 + 1) / 2;
            return e % 2 == 0 ? Rat(1) : Rat(-1);
        }
    }
    return Rat(0);
}

namespace {

bool creationish(Species sp, int m2) {
    if (m2 < 0) return true;
    if (m2 > 0) return false;
    // mode zero: psi^-_0 creates, neutral phi_0 is kept on the creation side
    return sp == Species::PsiMinus || sp == Species::NeutralFermion;
}

void accumulate(StateSum& out, const FockState& st, const Rat& c) {
    if (c.is_zero()) return;
    auto it = out.find(st);
    if (it == out.end()) out.emplace(st, c);
    else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

}  // namespace

StateSum ModeSystem::apply(const Mode& mode, const StateSum& v) const {
    StateSum out;
    int32_t key = encode_mode(mode.sp, mode.color, mode.m2);
    bool fermi = fermionic(mode.sp);
    bool self_zero_mode =
        mode.m2 == 0 && mode.sp == Species::NeutralFermion;  // phi_0: phi_0^2 = 1/2

    for (const auto& [st, coef] : v) {
        if (creationish(mode.sp, mode.m2) && !self_zero_mode) {
            // pure creation: insert at sorted position with fermionic sign
            Rat sgn(1);
            size_t pos = 0;
            bool dead = false;
            for (; pos < st.slots.size() && st.slots[pos] < key; ++pos)
                if (fermi && fermionic(decode_mode(st.slots[pos]).sp)) sgn = -sgn;
            if (fermi && pos < st.slots.size() && st.slots[pos] == key) dead = true;
            if (dead) continue;
            FockState ns = st;
            ns.slots.insert(ns.slots.begin() + pos, key);
            accumulate(out, ns, coef * sgn);
            continue;
        }
        if (self_zero_mode) {
            // phi_0: if present, contract to 1/2 (removing it); else insert
            Rat sgn(1);
            size_t pos = 0;
            bool found = false;
            for (; pos < st.slots.size(); ++pos) {
                if (st.slots[pos] == key) { found = true; break; }
                if (st.slots[pos] > key) break;
                if (fermionic(decode_mode(st.slots[pos]).sp)) sgn = -sgn;
            }
            FockState ns = st;
            if (found) {
                ns.slots.erase(ns.slots.begin() + pos);
                accumulate(out, ns, coef * sgn * Rat(1, 2));
            } else {
                ns.slots.insert(ns.slots.begin() + pos, key);
                accumulate(out, ns, coef * sgn);
            }
            continue;
        }
        // annihilation: walk all slots, contract where the partner sits
        Species part = partner(mode.sp);
        Rat sgn(1);
        for (size_t pos = 0; pos < st.slots.size(); ++pos) {
            Mode slot = decode_mode(st.slots[pos]);
            if (slot.sp == part && slot.color == mode.color && slot.m2 == -mode.m2) {
                FockState ns = st;
                ns.slots.erase(ns.slots.begin() + pos);
                accumulate(out, ns, coef * sgn * contraction(mode.sp, mode.m2));
            }
            if (fermi && fermionic(slot.sp)) sgn = -sgn;
        }
        // the surviving operator annihilates |0>
    }
    return out;
}

StateSum ModeSystem::apply_no_pair(const Mode& a, const Mode& b, const Rat& coef,
                                   const StateSum& v) const {
    if (coef.is_zero()) return {};
    Mode first = a, second = b;
    Rat sign(1);
    bool a_create = creationish(a.sp, a.m2), b_create = creationish(b.sp, b.m2);
    if (a.sp == Species::NeutralFermion && b.sp == Species::NeutralFermion && a.m2 == 0 &&
        b.m2 == 0)
        return {};  // :phi_0 phi_0: = 0
    if (!a_create && b_create) {
        // move the annihilator right
        std::swap(first, second);
        if (fermionic(a.sp) && fermionic(b.sp)) sign = Rat(-1);
    }
    StateSum mid = apply(second, v);
    StateSum res = apply(first, mid);
    if (sign == Rat(1) && coef == Rat(1)) return res;
    StateSum out;
    for (auto& [st, c] : res) accumulate(out, st, c * sign * coef);
    return out;
}

StateSum ModeSystem::apply_gl(int i, int j, const Rat& coef, const StateSum& v, Species plus,
                              Species minus) const {
    // E_ij dictionary: half-integer: :X^+_{1/2-i} X^-_{j-1/2}:, integer: :X^+_{-i} X^-_{j}:
    StateSum out;
    Rat c = coef;
    if (plus == Species::GammaPlus) c = -c;  // ghosts enter with a minus
    int am2 = int_moded_ ? -2 * i : 1 - 2 * i;
    int bm2 = int_moded_ ? 2 * j : 2 * j - 1;
    for (int color = 0; color < l_; ++color) {
        Mode A{plus, color, am2}, B{minus, color, bm2};
        for (auto& [st, cc] : apply_no_pair(A, B, c, v)) accumulate(out, st, cc);
    }
    return out;
}

StateSum ModeSystem::apply_pair(int i, int j, const Rat& coef, const StateSum& v) const {
    Species plus = ghosts_ ? Species::GammaPlus : Species::PsiPlus;
    Species minus = ghosts_ ? Species::GammaMinus : Species::PsiMinus;

    // reflected index and sign: minus case uses (-1)^{i+j}, plus case plain
    int ri, rj;
    if (sign_ < 0 && s_ == Rat(0)) { ri = -j; rj = -i; }         // b-infinity
    else if (sign_ < 0) { ri = 1 - j; rj = 1 - i; }              // c-infinity
    else if (s_ == Rat(0)) { ri = 1 - j; rj = 1 - i; }           // d-infinity
    else { ri = -j; rj = -i; }                                   // b-tilde
    Rat rsign = Rat(-1);
    if (sign_ < 0 && (i + j) % 2 == 0) rsign = Rat(-1);
    if (sign_ < 0) rsign = ((i + j) % 2 == 0) ? Rat(-1) : Rat(1);  // -(-1)^{i+j}

    StateSum out = apply_gl(i, j, coef, v, plus, minus);
    for (auto& [st, c] : apply_gl(ri, rj, coef * rsign, v, plus, minus)) accumulate(out, st, c);

    if (neutral_ != 0) {
        Species ns = neutral_species();
        Rat ncoef = coef;
        int am2, bm2;
        if (neutral_ == 2) {
            // chi: (-1)^j : chi_{1/2-i} chi_{j-1/2} :
            am2 = 1 - 2 * i;
            bm2 = 2 * j - 1;
            if (j % 2 != 0) ncoef = -ncoef;
        } else if (neutral_int_moded_) {
            // twisted phi: (-1)^j : phi_{-i} phi_j :
            am2 = -2 * i;
            bm2 = 2 * j;
            if (j % 2 != 0) ncoef = -ncoef;
        } else {
            // plain phi: : phi_{1/2-i} phi_{j-1/2} :
            am2 = 1 - 2 * i;
            bm2 = 2 * j - 1;
        }
        Mode A{ns, 0, am2}, B{ns, 0, bm2};
        for (auto& [st, c] : apply_no_pair(A, B, ncoef, v)) accumulate(out, st, c);
    }
    return out;
}

StateSum ModeSystem::act(const DOp& a, const StateSum& v) const {
    StateSum out;
    Rat cF = central_charge();
    // maximum occupied |m2| bounds the matrix window
    int mmax = 2;
    for (const auto& [st, c] : v)
        for (auto key : st.slots) mmax = std::max(mmax, std::abs(decode_mode(key).m2));

    for (const auto& [k, g] : a.terms()) {
        int J = mmax / 2 + std::abs(k) + 3;
        for (int j = -J; j <= J; ++j) {
            Rat cj = g.eval(Rat(-j) + s_);
            if (cj.is_zero()) continue;
            for (auto& [st, c] : apply_pair(j - k, j, cj * Rat(1, 2), v)) accumulate(out, st, c);
        }
        if (k == 0) {
            // hat-phi central correction on the weight-zero part
            Poly p = sign_ < 0 ? g : g.shift(Rat(-1, 2));
            Rat corr(0);
            PhiVariant var = sign_ < 0 ? PhiVariant::Minus : PhiVariant::Plus;
            for (int n = 1; n <= p.degree(); ++n) {
                if (p.coeff(n).is_zero()) continue;
                corr += hat_phi_correction(s_, 0, var, n).coeff(0) * p.coeff(n);
            }
            if (!corr.is_zero())
                for (const auto& [st, c] : v) accumulate(out, st, -(corr * cF) * c);
        }
    }
    if (!a.central_part().is_zero())
        for (const auto& [st, c] : v) accumulate(out, st, a.central_part() * cF * c);
    return out;
}

DOp ModeSystem::field_basis_element(int n, int k) const {
    // W-realizations twisted by phi_s use the W^{n,-s} basis
    Rat bs = sign_ > 0 ? -s_ : s_;
    return basis_element(sign_ < 0 ? BasisKind::T : BasisKind::W, n, bs, k);
}

StateSum ModeSystem::field_mode(int n, int k, const StateSum& v) const {
    if (n % 2 == 0) throw std::invalid_argument("field_mode: n must be odd");
    return act(field_basis_element(n, k), v);
}

std::vector<FockState> ModeSystem::basis(int maxE2) const {
    // collect available creation modes
    struct Slot { int32_t key; int e2; bool fermi; };
    std::vector<Slot> slots;
    auto add = [&](Species sp, int color, int m2) {
        slots.push_back({encode_mode(sp, color, m2), -m2, fermionic(sp)});
    };
    for (int color = 0; color < l_; ++color) {
        if (ghosts_) {
            for (int m2 = -1; -m2 <= maxE2; m2 -= 2) {
                add(Species::GammaPlus, color, m2);
                add(Species::GammaMinus, color, m2);
            }
        } else if (int_moded_) {
            for (int m2 = -2; -m2 <= maxE2; m2 -= 2) add(Species::PsiPlus, color, m2);
            for (int m2 = 0; -m2 <= maxE2; m2 -= 2) add(Species::PsiMinus, color, m2);
        } else {
            for (int m2 = -1; -m2 <= maxE2; m2 -= 2) {
                add(Species::PsiPlus, color, m2);
                add(Species::PsiMinus, color, m2);
            }
        }
    }
    if (neutral_ == 1) {
        if (neutral_int_moded_)
            for (int m2 = 0; -m2 <= maxE2; m2 -= 2) add(Species::NeutralFermion, 0, m2);
        else
            for (int m2 = -1; -m2 <= maxE2; m2 -= 2) add(Species::NeutralFermion, 0, m2);
    } else if (neutral_ == 2) {
        for (int m2 = -1; -m2 <= maxE2; m2 -= 2) add(Species::NeutralBoson, 0, m2);
    }

    std::vector<FockState> out;
    std::vector<int32_t> cur;
    std::function<void(size_t, int)> rec = [&](size_t idx, int e2) {
        if (idx == slots.size()) {
            FockState st;
            st.slots = cur;
            std::sort(st.slots.begin(), st.slots.end());
            out.push_back(std::move(st));
            return;
        }
        rec(idx + 1, e2);  // occupancy 0
        const Slot& s = slots[idx];
        int occ_max = s.fermi ? 1 : (s.e2 > 0 ? (maxE2 - e2) / s.e2 : 1);
        int used = 0;
        for (int occ = 1; occ <= occ_max; ++occ) {
            used += s.e2;
            if (e2 + used > maxE2) break;
            for (int t = 0; t < occ; ++t) cur.push_back(s.key);
            rec(idx + 1, e2 + used);
            for (int t = 0; t < occ; ++t) cur.pop_back();
            if (s.e2 == 0) break;  // zero modes: occupancy at most 1
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int ModeSystem::energy2(const FockState& st) const {
    int e2 = 0;
    for (auto key : st.slots) e2 -= decode_mode(key).m2;
    return e2;
}

Rat ModeSystem::energy(const FockState& st) const { return Rat(energy2(st), 2); }

std::vector<int> ModeSystem::charge_vector(const FockState& st) const {
    std::vector<int> q(l_, 0);
    for (auto key : st.slots) {
        Mode m = decode_mode(key);
        if (m.sp == Species::PsiPlus || m.sp == Species::GammaPlus) q[m.color] += 1;
        if (m.sp == Species::PsiMinus || m.sp == Species::GammaMinus) q[m.color] -= 1;
    }
    return q;
}

int ModeSystem::fermion_parity(const FockState& st) const {
    int p = 0;
    for (auto key : st.slots)
        if (fermionic(decode_mode(key).sp)) p ^= 1;
    return p;
}

namespace {

StateSum unit_state(const FockState& st) {
    StateSum v;
    v.emplace(st, Rat(1));
    return v;
}

bool is_multiple(const StateSum& x, const FockState& st, Rat& factor) {
    if (x.empty()) { factor = Rat(0); return true; }
    if (x.size() != 1) return false;
    auto& [s, c] = *x.begin();
    if (!(s == st)) return false;
    factor = c;
    return true;
}

}  // namespace

VirasoroReport virasoro_check(Realization r, int l, int cutoff_e2) {
    ModeSystem sys(r, l);
    auto states = sys.basis(cutoff_e2);
    VirasoroReport rep;
    bool have_c = false;
    Rat cval;

    auto L = [&](int m) {
        if (sys.uses_w_basis()) return sys.field_basis_element(1, m);
        // minus case: -(1/2) T^{1,s}_{2m} spans the even-mode Virasoro family
        return sys.field_basis_element(1, 2 * m) * Rat(-1, 2);
    };

    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            DOp a = L(m), b = L(n);
            DOp br = bracket(a, b);
            Rat psi = br.central_part();
            for (const auto& st : states) {
                StateSum v = unit_state(st);
                StateSum lhs = sys.act(a, sys.act(b, v));
                for (auto& [s2, c2] : sys.act(b, sys.act(a, v))) accumulate(lhs, s2, -c2);
                for (auto& [s2, c2] : sys.act(br.noncentral(), v)) accumulate(lhs, s2, -c2);
                // remainder must be Psi(a,b) * c * v
                if (psi.is_zero()) {
                    if (!lhs.empty()) {
                        rep.detail = "nonscalar defect at m=" + std::to_string(m) +
                                     " n=" + std::to_string(n);
                        return rep;
                    }
                    continue;
                }
                Rat factor;
                if (!is_multiple(lhs, st, factor)) {
                    rep.detail = "defect not scalar";
                    return rep;
                }
                Rat c_here = factor / psi;
                if (!have_c) { cval = c_here; have_c = true; }
                else if (cval != c_here) {
                    rep.detail = "inconsistent central charge";
                    return rep;
                }
            }
        }
    if (!have_c) cval = Rat(0);
    rep.consistent = true;
    rep.central_charge = cval;
    return rep;
}

bool locality_check(Realization r, int l, int m, int n, int cutoff_e2) {
    ModeSystem sys(r, l);
    auto states = sys.basis(cutoff_e2);
    int M = m + n + 2;
    std::vector<Rat> binom(M + 1);
    for (int i = 0; i <= M; ++i) binom[i] = binomial(M, i);

    for (int j = -2; j <= 2; ++j)
        for (int k = -2; k <= 2; ++k) {
            for (const auto& st : states) {
                StateSum total;
                StateSum v = unit_state(st);
                for (int i = 0; i <= M; ++i) {
                    Rat coef = binom[i];
                    if (i % 2 == 1) coef = -coef;
                    DOp a = sys.field_basis_element(m, j + i);
                    DOp b = sys.field_basis_element(n, k - i);
                    DOp br = bracket(a, b);
                    StateSum comm = sys.act(a, sys.act(b, v));
                    for (auto& [s2, c2] : sys.act(b, sys.act(a, v))) accumulate(comm, s2, -c2);
                    (void)br;
                    for (auto& [s2, c2] : comm) accumulate(total, s2, c2 * coef);
                }
                if (!total.empty()) return false;
            }
        }
    return true;
}

std::map<int, Rat> psi_reduction(int m, int n) {
    int N = m + n;
    if (N == 0) return {};
    // coordinates: pairs (a, b), a+b = N, reduced by B^{b,a} = -B^{a,b}
    auto coord = [&](int a) { return a; };  // B^{a, N-a} indexed by a = 0..N
    auto reduce = [&](std::vector<Rat>& vec) {
        // fold B^{a,b} with a < b into -B^{b,a}
        for (int a = 0; 2 * a < N; ++a) {
            vec[N - a] -= vec[a];
            vec[a] = Rat(0);
        }
        if (N % 2 == 0) vec[N / 2] = Rat(0);
    };

    // target: Psi^{m,n} = B^{m,n} - B^{n,m}
    std::vector<Rat> target(N + 1, Rat(0));
    target[coord(m)] += Rat(1);
    target[coord(n)] -= Rat(1);
    reduce(target);

    // unknowns: d^i W^{N-i}, i = N-1 mod 2, 0 <= i <= N-1
    std::vector<int> is;
    for (int i = (N - 1) % 2; i <= N - 1; i += 2) is.push_back(i);
    std::vector<std::vector<Rat>> cols;
    for (int i : is) {
        // d^i W^{N-i} = 1/2 d^i (B^{N-i,0} - B^{0,N-i})
        std::vector<Rat> col(N + 1, Rat(0));
        for (int r2 = 0; r2 <= i; ++r2) {
            Rat c = binomial(i, r2) * Rat(1, 2);
            col[N - i + r2] += c;       // B^{N-i+r, i-r}
            col[r2] -= c;               // B^{r, N-i + (i-r)} = B^{r, N-r}
        }
        reduce(col);
        cols.push_back(col);
    }

    // solve cols * x = target by Gaussian elimination
    int rows = N + 1, ncols = (int)cols.size();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (int rr = 0; rr < rows; ++rr) {
        for (int cc = 0; cc < ncols; ++cc) A[rr][cc] = cols[cc][rr];
        A[rr][ncols] = target[rr];
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int cc = 0; cc < ncols && rank < rows; ++cc) {
        int pr = -1;
        for (int rr = rank; rr < rows; ++rr)
            if (!A[rr][cc].is_zero()) { pr = rr; break; }
        if (pr < 0) continue;
        std::swap(A[rank], A[pr]);
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == rank || A[rr][cc].is_zero()) continue;
            Rat f = A[rr][cc] / A[rank][cc];
            for (int k = cc; k <= ncols; ++k) A[rr][k] -= f * A[rank][k];
        }
        pivot_col[rank] = cc;
        ++rank;
    }
    for (int rr = rank; rr < rows; ++rr)
        if (!A[rr][ncols].is_zero())
            throw std::domain_error("psi_reduction: inconsistent system");
    std::vector<Rat> x(ncols, Rat(0));
    for (int rr = 0; rr < rank; ++rr) x[pivot_col[rr]] = A[rr][ncols] / A[rr][pivot_col[rr]];

    std::map<int, Rat> out;
    for (size_t t = 0; t < is.size(); ++t)
        if (!x[t].is_zero()) out[is[t]] = x[t];
    return out;
}

bool singular_check(const ModeSystem& sys, const StateSum& v, int nmax, int kmax) {
    for (int n = 1; n <= nmax; n += 2)
        for (int k = 1; k <= kmax; ++k)
            if (!sys.field_mode(n, k, v).empty()) return false;
    return true;
}

std::map<std::pair<int, std::vector<int>>, long long> graded_character(const ModeSystem& sys,
                                                                       int cutoff_e2) {
    std::map<std::pair<int, std::vector<int>>, long long> out;
    for (const auto& st : sys.basis(cutoff_e2))
        ++out[{sys.energy2(st), sys.charge_vector(st)}];
    return out;
}

}  // namespace winf
