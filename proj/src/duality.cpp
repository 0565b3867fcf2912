#include "winf/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "winf/weyl.hpp"

namespace winf {

DualPair dual_pair_from_name(const std::string& name) {
    static const std::map<std::string, DualPair> t = {
        {"Sp-dminus", DualPair::Sp_dminus},     {"O2l-dplus", DualPair::O2l_dplus},
        {"O2l1-dplus", DualPair::O2l1_dplus},   {"Pin-dminus", DualPair::Pin_dminus},
        {"Sp-dplus", DualPair::Sp_dplus_ghost}, {"O2l-cminus", DualPair::O2l_cminus},
        {"O2l1-cminus", DualPair::O2l1_cminus},
    };
    auto it = t.find(name);
    if (it == t.end()) throw std::invalid_argument("unknown dual pair: " + name);
    return it->second;
}

std::string dual_pair_name(DualPair p) {
    switch (p) {
        case DualPair::Sp_dminus: return "Sp-dminus";
        case DualPair::O2l_dplus: return "O2l-dplus";
        case DualPair::O2l1_dplus: return "O2l1-dplus";
        case DualPair::Pin_dminus: return "Pin-dminus";
        case DualPair::Sp_dplus_ghost: return "Sp-dplus";
        case DualPair::O2l_cminus: return "O2l-cminus";
        case DualPair::O2l1_cminus: return "O2l1-cminus";
    }
    return "?";
}

Realization realization_of(DualPair p) {
    switch (p) {
        case DualPair::Sp_dminus: return Realization::Fl_sp;
        case DualPair::O2l_dplus: return Realization::Fl_dplus;
        case DualPair::O2l1_dplus: return Realization::Flhalf_dplus;
        case DualPair::Pin_dminus: return Realization::Fl_pin;
        case DualPair::Sp_dplus_ghost: return Realization::Fminusl_cd;
        case DualPair::O2l_cminus: return Realization::Fminusl_o2l;
        case DualPair::O2l1_cminus: return Realization::Fminusl_half;
    }
    throw std::logic_error("unreachable");
}

namespace {

struct Block {
    std::vector<long long> lam;
    bool det = false;
};

long long nonzero_count(const std::vector<long long>& v) {
    long long j = 0;
    for (auto x : v)
        if (x > 0) ++j;
    return j;
}

long long big_count(const std::vector<long long>& v) {
    long long i = 0;
    for (auto x : v)
        if (x >= 2) ++i;
    return i;
}

// weakly decreasing nonnegative vectors of length l with sum <= bound
void enumerate_lams(int l, long long bound, std::vector<long long>& cur,
                    std::vector<std::vector<long long>>& out) {
    if ((int)cur.size() == l) {
        out.push_back(cur);
        return;
    }
    long long hi = cur.empty() ? bound : cur.back();
    long long used = 0;
    for (auto x : cur) used += x;
    for (long long v = 0; v <= std::min(hi, bound - used); ++v) {
        cur.push_back(v);
        enumerate_lams(l, bound, cur, out);
        cur.pop_back();
    }
}

struct PairContext {
    DualPair pair;
    int l;
    ModeSystem sys;
    Rat cF;

    PairContext(DualPair p, int ll) : pair(p), l(ll), sys(realization_of(p), ll) {
        cF = sys.central_charge();
    }

    bool is_dominant_formula() const {
        return pair == DualPair::Sp_dminus || pair == DualPair::O2l_dplus ||
               pair == DualPair::O2l1_dplus || pair == DualPair::Pin_dminus;
    }
    bool o_even() const { return pair == DualPair::O2l_dplus || pair == DualPair::O2l_cminus; }
    bool o_odd() const { return pair == DualPair::O2l1_dplus || pair == DualPair::O2l1_cminus; }
    bool pin() const { return pair == DualPair::Pin_dminus; }

    std::vector<Block> blocks(int cutoff2) const {
        std::vector<Block> out;
        std::vector<std::vector<long long>> lams;
        std::vector<long long> cur;
        long long bound = cutoff2 + 2 * l + 2;
        enumerate_lams(l, bound, cur, lams);
        for (const auto& lam : lams) {
            if (o_even()) {
                if (lam.empty() || lam.back() == 0) {
                    out.push_back({lam, false});
                    out.push_back({lam, true});
                } else {
                    out.push_back({lam, false});  // (m_1 .. \bar m_l), one O-irrep
                }
            } else if (o_odd()) {
                out.push_back({lam, false});
                out.push_back({lam, true});
            } else {
                out.push_back({lam, false});
            }
        }
        return out;
    }

    Rat dim(const Block& b) const {
        std::vector<Rat> lam(b.lam.begin(), b.lam.end());
        switch (pair) {
            case DualPair::Sp_dminus:
            case DualPair::Sp_dplus_ghost: return weyl_dim_sp(l, lam);
            case DualPair::O2l_dplus:
            case DualPair::O2l_cminus: {
                Rat d = weyl_dim_so_even(l, lam);
                if (!b.lam.empty() && b.lam.back() > 0) d *= Rat(2);
                return d;
            }
            case DualPair::O2l1_dplus:
            case DualPair::O2l1_cminus: return weyl_dim_so_odd(l, lam);
            case DualPair::Pin_dminus: {
                for (auto& v : lam) v += Rat(1, 2);
                return weyl_dim_so_even(l, lam) * Rat(2);
            }
        }
        throw std::logic_error("unreachable");
    }

    // stated hwv energy (doubled) for the formula-backed pairs
    int shift2(const Block& b) const {
        long long s = 0;
        long long j = nonzero_count(b.lam);
        switch (pair) {
            case DualPair::Sp_dminus:
            case DualPair::O2l_dplus:
            case DualPair::O2l1_dplus:
                for (auto m : b.lam) s += m * m;
                if (b.det) s += 2 * (l - j) + (pair == DualPair::O2l1_dplus ? 1 : 0);
                return (int)s;
            case DualPair::Pin_dminus:
                for (auto m : b.lam) s += m * (m + 1);
                return (int)s;
            default: return -1;  // data-driven
        }
    }

    // the theorem's exponent data e(lambda) as a full internal spectrum
    Spectrum spectrum(const Block& b) const {
        std::vector<std::pair<Rat, Rat>> ent;  // (exponent, const multiplicity)
        const auto& m = b.lam;
        long long j = nonzero_count(m);
        long long i = big_count(m);
        auto mk = [&](long long k) { return k >= 1 && k <= (long long)m.size() ? m[k - 1] : 0; };
        switch (pair) {
            case DualPair::Sp_dminus:
                for (long long k = 1; k <= j; ++k) ent.push_back({Rat(mk(k)), Rat(1)});
                break;
            case DualPair::O2l_dplus:
                if (!m.empty() && m.back() > 0) {
                    for (long long k = 1; k <= i; ++k) ent.push_back({Rat(mk(k)), Rat(1)});
                    ent.push_back({Rat(1), Rat(l - i)});
                } else if (!b.det) {
                    for (long long k = 1; k <= i; ++k) ent.push_back({Rat(mk(k)), Rat(1)});
                    ent.push_back({Rat(1), Rat(j - i)});
                } else {
                    for (long long k = 1; k <= i; ++k) ent.push_back({Rat(mk(k)), Rat(1)});
                    ent.push_back({Rat(1), Rat(2 * l - i - j)});
                }
                break;
            case DualPair::O2l1_dplus:
                for (long long k = 1; k <= i; ++k) ent.push_back({Rat(mk(k)), Rat(1)});
                ent.push_back({Rat(1), b.det ? Rat(2 * l + 1 - i - j) : Rat(j - i)});
                break;
            case DualPair::Pin_dminus:
                for (long long k = 1; k <= j; ++k) ent.push_back({Rat(mk(k)) + Rat(1, 2), Rat(1)});
                break;
            case DualPair::Sp_dplus_ghost:
                for (long long k = 1; k <= (long long)m.size(); ++k)
                    ent.push_back({Rat(k), Rat(mk(k) - mk(k + 1))});
                ent.push_back({Rat(0), Rat(-l) - Rat(mk(1))});
                break;
            case DualPair::O2l_cminus:
                if (!b.det) {
                    for (long long k = 1; k <= (long long)m.size(); ++k)
                        ent.push_back({Rat(k), Rat(mk(k) - mk(k + 1))});
                } else {
                    for (long long k = 1; k + 1 <= j; ++k)
                        ent.push_back({Rat(k), Rat(mk(k) - mk(k + 1))});
                    ent.push_back({Rat(j), Rat(mk(j) - 1)});
                    ent.push_back({Rat(2 * l - j), Rat(1)});
                }
                ent.push_back({Rat(0), Rat(-l) - Rat(mk(1))});
                break;
            case DualPair::O2l1_cminus:
                if (!b.det) {
                    for (long long k = 1; k <= j; ++k)
                        ent.push_back({Rat(k), Rat(mk(k) - mk(k + 1))});
                } else {
                    for (long long k = 1; k + 1 <= j; ++k)
                        ent.push_back({Rat(k), Rat(mk(k) - mk(k + 1))});
                    ent.push_back({Rat(j), Rat(mk(j) - 1)});
                    ent.push_back({Rat(2 * l - j + 1), Rat(1)});
                }
                ent.push_back({Rat(0), Rat(-l) - Rat(mk(1)) - Rat(1, 2)});
                break;
        }
        // assemble, absorbing the special exponent so the charge matches c
        Quasipoly g;
        Rat charge(0);
        for (auto& [e, n] : ent) {
            if (n.is_zero()) continue;
            g += Quasipoly::cosh_term(Poly(n), e);
            charge += n;
        }
        Rat special = sys.sign() < 0 ? Rat(1, 2) : Rat(0);
        if (charge != cF) g += Quasipoly::cosh_term(Poly(cF - charge), special);
        Spectrum sp;
        sp.sign = sys.sign();
        sp.c = cF;
        for (const auto& t : g.terms()) {
            if (t.kind == QKind::Cosh) sp.even_type.push_back({t.alpha, t.p});
            else sp.odd_type.push_back({t.alpha, t.p});
        }
        return sp;
    }

    // q-character formula weight for the formula-backed pairs
    FundWeightSum formula_weight(const Block& b) const {
        const auto& m = b.lam;
        long long j = nonzero_count(m), i = big_count(m);
        std::vector<long long> parts;
        switch (pair) {
            case DualPair::Sp_dminus:
                for (long long k = 1; k <= j; ++k) parts.push_back(m[k - 1]);
                return {'c', parts, l - j};
            case DualPair::O2l_dplus: {
                long long ones, h;
                if (!m.empty() && m.back() > 0) { ones = l - i; h = l - i; }
                else if (!b.det) { ones = j - i; h = 2 * l - i - j; }
                else { ones = 2 * l - i - j; h = j - i; }
                for (long long k = 1; k <= i; ++k) parts.push_back(m[k - 1]);
                for (long long t = 0; t < ones; ++t) parts.push_back(1);
                return {'d', parts, h};
            }
            case DualPair::O2l1_dplus: {
                long long ones = b.det ? 2 * l + 1 - i - j : j - i;
                long long h = b.det ? j - i : 2 * l + 1 - i - j;
                for (long long k = 1; k <= i; ++k) parts.push_back(m[k - 1]);
                for (long long t = 0; t < ones; ++t) parts.push_back(1);
                return {'d', parts, h};
            }
            case DualPair::Pin_dminus:
                for (long long k = 1; k <= j; ++k) parts.push_back(m[k - 1]);
                return {'b', parts, 2 * (l - j)};
            default: throw std::logic_error("formula_weight: data-driven pair");
        }
    }
};

struct FockData {
    std::map<int, std::map<std::vector<int>, Rat>> byE;
    std::map<int, std::map<std::vector<int>, Rat>> twistedByE;  // O-groups only
    std::map<int, std::vector<FockState>> statesByE;
    QSeries total{0};
};

int fermionic_sort_sign(const ModeSystem& sys, std::vector<int32_t>& slots) {
    // bubble sort counting fermionic inversions
    int sign = 1;
    for (size_t i = 0; i + 1 < slots.size(); ++i)
        for (size_t j = 0; j + 1 < slots.size() - i; ++j)
            if (slots[j] > slots[j + 1]) {
                bool f1 = sys.fermionic(decode_mode(slots[j]).sp);
                bool f2 = sys.fermionic(decode_mode(slots[j + 1]).sp);
                if (f1 && f2) sign = -sign;
                std::swap(slots[j], slots[j + 1]);
            }
    return sign;
}

FockData collect_fock_data(const PairContext& ctx, int cutoff2) {
    FockData data;
    data.total = QSeries(cutoff2);
    const ModeSystem& sys = ctx.sys;
    int l = ctx.l;
    int eps = sys.integer_moded() ? 1 : 0;
    for (const auto& st : sys.basis(cutoff2)) {
        int e2 = sys.energy2(st);
        data.statesByE[e2].push_back(st);
        auto q = sys.charge_vector(st);
        std::vector<int> w2(l);
        for (int p = 0; p < l; ++p) w2[p] = 2 * q[p] + eps;
        data.byE[e2][w2] += Rat(1);
        data.total.add2(e2, Rat(1));

        if (ctx.o_odd()) {
            // reflection flips the neutral field
            int neutral = 0;
            for (auto key : st.slots)
                if (decode_mode(key).sp == Species::NeutralFermion ||
                    decode_mode(key).sp == Species::NeutralBoson)
                    ++neutral;
            data.twistedByE[e2][w2] += neutral % 2 == 0 ? Rat(1) : Rat(-1);
        } else if (ctx.o_even()) {
            // reflection swaps the +- species of the last color
            std::vector<int32_t> slots = st.slots;
            for (auto& key : slots) {
                Mode m = decode_mode(key);
                if (m.color != l - 1) continue;
                Species swapped = m.sp;
                if (m.sp == Species::PsiPlus) swapped = Species::PsiMinus;
                else if (m.sp == Species::PsiMinus) swapped = Species::PsiPlus;
                else if (m.sp == Species::GammaPlus) swapped = Species::GammaMinus;
                else if (m.sp == Species::GammaMinus) swapped = Species::GammaPlus;
                key = encode_mode(swapped, m.color, m.m2);
            }
            int sgn = fermionic_sort_sign(sys, slots);
            if (slots == st.slots) {
                std::vector<int> w2r(w2.begin(), w2.end() - 1);
                data.twistedByE[e2][w2r] += Rat(sgn);
            }
        }
    }
    return data;
}

// extracted isotypic multiplicity series for a block
QSeries extract_multiplicity(const PairContext& ctx, const FockData& data, const Block& b,
                             int cutoff2) {
    int l = ctx.l;
    QSeries out(cutoff2);
    std::vector<int> lam2(l);
    for (int p = 0; p < l; ++p) lam2[p] = 2 * (int)b.lam[p] + (ctx.pin() ? 1 : 0);

    for (int e2 = 0; e2 <= cutoff2; ++e2) {
        auto it = data.byE.find(e2);
        if (it == data.byE.end()) continue;
        Rat val(0);
        if (ctx.pair == DualPair::Sp_dminus || ctx.pair == DualPair::Sp_dplus_ghost) {
            val = weyl_alternant(RootFamily::C, it->second, lam2);
        } else if (ctx.pin()) {
            val = weyl_alternant(RootFamily::D, it->second, lam2);
        } else if (ctx.o_even()) {
            Rat sum = weyl_alternant(RootFamily::D, it->second, lam2);
            if (!b.lam.empty() && b.lam.back() > 0) {
                val = sum;
            } else {
                std::vector<int> lam2r(lam2.begin(), lam2.end() - 1);
                Rat diff(0);
                auto tw = data.twistedByE.find(e2);
                if (tw != data.twistedByE.end())
                    diff = weyl_alternant(RootFamily::C, tw->second, lam2r);
                val = b.det ? (sum - diff) / Rat(2) : (sum + diff) / Rat(2);
            }
        } else if (ctx.o_odd()) {
            Rat sum = weyl_alternant(RootFamily::B, it->second, lam2);
            Rat diff(0);
            auto tw = data.twistedByE.find(e2);
            if (tw != data.twistedByE.end()) diff = weyl_alternant(RootFamily::B, tw->second, lam2);
            val = b.det ? (sum - diff) / Rat(2) : (sum + diff) / Rat(2);
        }
        out.add2(e2, val);
    }
    return out;
}

// basis of the weight -k (k > 0: lowering; k < 0: raising) graded piece,
// polynomial degree capped
std::vector<DOp> graded_basis(const ModeSystem& sys, int k, int degmax) {
    Rat center = sys.sign() < 0 ? Rat(k, 2) : Rat(k + 1, 2);
    int e0;
    if (sys.sign() > 0) e0 = 1;
    else e0 = (k % 2 != 0) ? 0 : 1;
    std::vector<DOp> out;
    for (int e = e0; e <= degmax; e += 2)
        out.push_back(DOp::term(k, Poly::monomial(e).compose(Poly({center, Rat(1)}))));
    return out;
}

struct LevelSpan {
    std::vector<FockState> basis;
    std::map<FockState, int> index;
    std::vector<std::vector<Rat>> rref;

    explicit LevelSpan(std::vector<FockState> b) : basis(std::move(b)) {
        for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], (int)i);
    }
    int rank() const { return (int)rref.size(); }
    bool add(const StateSum& v) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& [st, c] : v) {
            auto it = index.find(st);
            if (it == index.end()) throw std::logic_error("LevelSpan: state outside level basis");
            row[it->second] = c;
        }
        for (const auto& r : rref) {
            int lead = -1;
            for (size_t i = 0; i < r.size(); ++i)
                if (!r[i].is_zero()) { lead = (int)i; break; }
            if (lead >= 0 && !row[lead].is_zero()) {
                Rat f = row[lead] / r[lead];
                for (size_t i = lead; i < row.size(); ++i) row[i] -= f * r[i];
            }
        }
        for (const auto& c : row)
            if (!c.is_zero()) {
                rref.push_back(row);
                return true;
            }
        return false;
    }
};

// nullspace of the stacked constraints over the given states
std::vector<StateSum> joint_kernel(const ModeSystem& sys, const std::vector<FockState>& states,
                                   const std::vector<std::pair<DOp, Rat>>& constraints) {
    size_t n = states.size();
    // build constraint rows: each output-state coordinate is one row
    std::vector<std::vector<Rat>> mat;
    for (const auto& [op, eig] : constraints) {
        std::map<FockState, std::vector<Rat>> block;
        for (size_t col = 0; col < n; ++col) {
            StateSum v;
            v.emplace(states[col], Rat(1));
            StateSum img = sys.act(op, v);
            // subtract eig * v
            if (!eig.is_zero()) {
                auto it = img.find(states[col]);
                if (it == img.end()) img.emplace(states[col], -eig);
                else {
                    it->second -= eig;
                    if (it->second.is_zero()) img.erase(it);
                }
            }
            for (const auto& [st, c] : img) {
                auto& row = block[st];
                row.resize(n, Rat(0));
                row[col] = c;
            }
        }
        for (auto& [st, row] : block) {
            row.resize(n, Rat(0));
            mat.push_back(row);
        }
    }
    // gaussian elimination -> nullspace
    size_t rows_n = mat.size();
    std::vector<int> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < rows_n; ++c) {
        size_t pr = rank;
        while (pr < rows_n && mat[pr][c].is_zero()) ++pr;
        if (pr == rows_n) continue;
        std::swap(mat[rank], mat[pr]);
        for (size_t r = 0; r < rows_n; ++r) {
            if (r == rank || mat[r][c].is_zero()) continue;
            Rat f = mat[r][c] / mat[rank][c];
            for (size_t cc = c; cc < n; ++cc) mat[r][cc] -= f * mat[rank][cc];
        }
        pivot_of_col[c] = (int)rank;
        ++rank;
    }
    std::vector<StateSum> out;
    for (size_t free_c = 0; free_c < n; ++free_c) {
        if (pivot_of_col[free_c] >= 0) continue;
        StateSum v;
        v.emplace(states[free_c], Rat(1));
        for (size_t c = 0; c < n; ++c) {
            int pr = pivot_of_col[c];
            if (pr < 0) continue;
            Rat val = -mat[pr][free_c] / mat[pr][c];
            if (!val.is_zero()) v.emplace(states[c], val);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

DualityReport dual_decomposition_check(DualPair pair, int l, int cutoff_e2) {
    PairContext ctx(pair, l);
    DualityReport rep;
    rep.pair = dual_pair_name(pair);
    rep.l = l;
    rep.cutoff2 = cutoff_e2;

    FockData data = collect_fock_data(ctx, cutoff_e2);
    QSeries rhs_total(cutoff_e2);
    bool all_ok = true;

    for (const Block& b : ctx.blocks(cutoff_e2)) {
        QSeries mult = extract_multiplicity(ctx, data, b, cutoff_e2);
        // sanity: nonnegative integers
        int lowest = -1;
        for (int e2 = 0; e2 <= cutoff_e2; ++e2) {
            const Rat& c = mult.coeff2(e2);
            if (!c.is_integer() || c < Rat(0)) {
                rep.detail = "non-integral multiplicity in block";
                return rep;
            }
            if (lowest < 0 && !c.is_zero()) lowest = e2;
        }
        if (lowest < 0) continue;  // block absent below the cutoff

        DualityBlock blk;
        blk.lam = b.lam;
        blk.det = b.det;
        blk.dim = ctx.dim(b);
        blk.formula_rhs = ctx.is_dominant_formula();
        blk.shift2 = blk.formula_rhs ? ctx.shift2(b) : lowest;

        if (blk.shift2 != lowest) {
            blk.detail = "hwv energy differs from stated shift";
            all_ok = false;
            rep.blocks.push_back(blk);
            continue;
        }

        // locate the isotypic highest weight vector and verify its labels
        Spectrum sp = ctx.spectrum(b);
        HWeight hw = delta_from_spectrum(sp);
        auto labels = hw.delta_labels(9);
        std::vector<std::pair<DOp, Rat>> constraints;
        int K = blk.shift2 / 2 + 1;
        for (int k = 1; k <= K; ++k)
            for (const auto& op : graded_basis(ctx.sys, k, cutoff_e2 + 2 * k + 6))
                constraints.push_back({op, Rat(0)});
        for (int e = 1; e <= 9; e += 2) {
            Rat center = ctx.sys.sign() < 0 ? Rat(0) : Rat(1, 2);
            DOp elt = DOp::term(0, Poly::monomial(e).compose(Poly({center, Rat(1)})));
            constraints.push_back({elt, -labels[e]});
        }
        // candidate states at the shift level with the right torus weight
        std::vector<int> lam2(l);
        for (int p = 0; p < l; ++p) lam2[p] = 2 * (int)b.lam[p] + (ctx.pin() ? 1 : 0);
        std::vector<FockState> cands;
        auto itS = data.statesByE.find(blk.shift2);
        if (itS != data.statesByE.end()) {
            int eps = ctx.sys.integer_moded() ? 1 : 0;
            for (const auto& st : itS->second) {
                auto q = ctx.sys.charge_vector(st);
                bool match = true;
                for (int p = 0; p < l; ++p)
                    if (2 * q[p] + eps != lam2[p]) match = false;
                if (match) cands.push_back(st);
            }
        }
        auto kern = joint_kernel(ctx.sys, cands, constraints);
        if (kern.size() != 1) {
            blk.detail = "highest weight vector not unique (dim " +
                         std::to_string(kern.size()) + ")";
            all_ok = false;
            rep.blocks.push_back(blk);
            continue;
        }

        QSeries rhs(cutoff_e2);
        if (blk.formula_rhs) {
            QSeries ch = qchar(ctx.formula_weight(b), cutoff_e2);
            for (int e2 = 0; e2 + blk.shift2 <= cutoff_e2; ++e2)
                rhs.add2(e2 + blk.shift2, ch.coeff2(e2));
        } else {
            // graded dimensions of the submodule generated by the hwv
            std::map<int, LevelSpan> spans;
            std::map<int, std::vector<StateSum>> vecs;
            for (int e2 = blk.shift2; e2 <= cutoff_e2; ++e2) {
                auto st = data.statesByE.find(e2);
                spans.emplace(e2, LevelSpan(st == data.statesByE.end() ? std::vector<FockState>{}
                                                                       : st->second));
            }
            spans.at(blk.shift2).add(kern[0]);
            vecs[blk.shift2].push_back(kern[0]);
            for (int e2 = blk.shift2; e2 <= cutoff_e2; ++e2) {
                for (int k = 1; blk.shift2 <= e2 - 2 * k; ++k) {
                    int src = e2 - 2 * k;
                    for (const auto& op : graded_basis(ctx.sys, -k, e2 + 2 * k + 6)) {
                        for (const auto& v : vecs[src]) {
                            StateSum img = ctx.sys.act(op, v);
                            if (img.empty()) continue;
                            if (spans.at(e2).add(img)) vecs[e2].push_back(img);
                        }
                    }
                }
                rhs.add2(e2, Rat(spans.at(e2).rank()));
            }
        }

        blk.ok = mult == rhs;
        if (!blk.ok) {
            all_ok = false;
            if (rep.first_mismatch2 < 0)
                rep.first_mismatch2 = QSeries::first_mismatch2(mult, rhs);
        }
        rhs_total += rhs * blk.dim;
        rep.blocks.push_back(blk);
    }

    if (!(rhs_total == data.total)) {
        all_ok = false;
        if (rep.first_mismatch2 < 0)
            rep.first_mismatch2 = QSeries::first_mismatch2(rhs_total, data.total);
        rep.detail = "sum over blocks misses the Fock character";
    }
    rep.equal = all_ok;
    return rep;
}

}  // namespace winf
