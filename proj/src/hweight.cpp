#include "winf/hweight.hpp"

#include <algorithm>

namespace winf {

std::vector<Rat> HWeight::delta_labels(int nmax) const {
    XSeries f = F.expand(nmax + 1);
    XSeries twosinh = XSeries::sinh(Rat(1, 2), nmax + 1) * Rat(2);
    XSeries delta = f / twosinh;
    std::vector<Rat> out(nmax + 1, Rat(0));
    Rat nf(1);
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) nf *= Rat(n);
        if (n % 2 == 1) out[n] = delta.coeff(n) * nf;
    }
    return out;
}

Rat Spectrum::even_mult_const(const Rat& e) const {
    for (const auto& t : even_type)
        if (t.e == e) return t.mult.coeff(0);
    return Rat(0);
}

namespace {

Quasipoly vacuum_piece(int sign, const Rat& c) {
    // c cosh(x/2) in the minus case, the constant c in the plus case
    return Quasipoly::cosh_term(Poly(c), sign < 0 ? Rat(1, 2) : Rat(0));
}

Quasipoly spectrum_sum(const Spectrum& sp) {
    Quasipoly g;
    for (const auto& t : sp.even_type) g += Quasipoly::cosh_term(t.mult, t.e);
    for (const auto& t : sp.odd_type) g += Quasipoly::sinh_term(t.mult, t.e);
    return g;
}

}  // namespace

Spectrum spectrum_from_delta(const HWeight& w) {
    if (!w.F.is_even()) throw NotQuasifinite("spectrum_from_delta: F is not even");
    if (!w.F.eval_at_zero().is_zero()) throw NotQuasifinite("spectrum_from_delta: F(0) != 0");
    Quasipoly g = w.F + vacuum_piece(w.sign, w.c);
    Spectrum sp;
    sp.sign = w.sign;
    sp.c = w.c;
    for (const auto& t : g.terms()) {
        if (t.kind == QKind::Cosh) sp.even_type.push_back({t.alpha, t.p});
        else sp.odd_type.push_back({t.alpha, t.p});
    }
    return sp;
}

HWeight delta_from_spectrum(const Spectrum& sp) {
    Quasipoly g = spectrum_sum(sp);
    Rat charge = g.eval_at_zero();
    if (charge != sp.c)
        throw std::invalid_argument("delta_from_spectrum: sum of p_i(0) differs from c");
    HWeight w;
    w.sign = sp.sign;
    w.c = sp.c;
    w.F = g - vacuum_piece(sp.sign, sp.c);
    return w;
}

ClassifyResult classify(const Spectrum& sp) {
    ClassifyResult res;
    res.quasifinite = true;

    res.primitive = sp.odd_type.empty();
    for (const auto& t : sp.even_type)
        if (t.mult.degree() > 0) res.primitive = false;

    if (res.primitive) {
        Rat special = sp.sign < 0 ? Rat(1, 2) : Rat(0);  // absorbed by Convention 1
        bool pos = true;
        Rat sum_others(0), n_at_one(0);
        for (const auto& t : sp.even_type) {
            Rat n = t.mult.coeff(0);
            if (t.e == special) {
                if (sp.sign < 0) {
                    // n in (1/2) N
                    if (!(n > Rat(0)) || !(n * Rat(2)).is_integer()) pos = false;
                }
                // plus case handled after the loop (needs n_{i0})
            } else {
                if (!n.is_integer() || !(n > Rat(0))) pos = false;
                sum_others += n;
                if (sp.sign > 0 && t.e == Rat(1)) n_at_one = n;
            }
        }
        if (sp.sign > 0) {
            Rat m = sp.even_mult_const(Rat(0));
            if (!(m * Rat(2)).is_integer() || m < -n_at_one / Rat(2)) pos = false;
        }
        if (!(sp.c * Rat(2)).is_integer() || sp.c < Rat(0)) pos = false;
        res.positive_primitive = pos;
        // exponents here are exact rationals, hence real: positivity is the
        // whole unitarity criterion
        res.unitary = pos;
    }

    Quasipoly g = spectrum_sum(sp);
    if (sp.sign < 0) {
        res.char_poly = minimal_annihilator(g, Parity::Even, &res.char_poly_trivial);
    } else {
        Quasipoly f = g - vacuum_piece(+1, sp.c);
        res.char_poly = minimal_annihilator(f, Parity::Odd, &res.char_poly_trivial);
    }
    return res;
}

namespace {

Rat frac(const Rat& s) { return s - Rat(s.floor_int()); }

struct EtaTerm {
    Rat s;   // normalized parameter
    int j;
    Rat a;
};

// apply the eta symmetry so the parameter lands in the canonical range
EtaTerm normalize_eta(int sign, Rat mu, int j, Rat a) {
    Rat s = sign < 0 ? mu + Rat(1, 2) : mu;
    auto flip = [&](const Rat& v) { return sign < 0 ? Rat(1) - v : -v; };
    bool do_flip = false;
    Rat f = frac(s);
    if (f.is_zero()) {
        do_flip = s > Rat(0);
    } else if (f == Rat(1, 2)) {
        do_flip = sign < 0 ? s > Rat(1, 2) : s > Rat(-1, 2);
    } else {
        do_flip = !(f < Rat(1, 2));
    }
    if (do_flip) {
        s = flip(s);
        if (j % 2 == 1) a = -a;
    }
    return {s, j, a};
}

}  // namespace

Spectrum spectrum_from_labels(LabelMap map, const Rat& s, int m,
                              const std::map<int, std::vector<Rat>>& h,
                              const std::vector<Rat>& cj) {
    bool glcase = map == LabelMap::GLMinus || map == LabelMap::GLPlus;
    Quasipoly g;
    Rat charge_check(0);
    for (const auto& [i, row] : h) {
        if (!glcase && i < 0)
            throw std::invalid_argument("spectrum_from_labels: negative label index");
        // tilde adjustment at i = 0
        std::vector<Rat> ht(row);
        ht.resize(m + 1, Rat(0));
        if (i == 0 && (map == LabelMap::B || map == LabelMap::BTilde)) {
            for (auto& v : ht) v = v / Rat(2);
        } else if (i == 0 && map == LabelMap::D) {
            auto it1 = h.find(1);
            for (int j = 0; j <= m; ++j) {
                Rat h1 = (it1 != h.end() && j < (int)it1->second.size()) ? it1->second[j] : Rat(0);
                ht[j] = (ht[j] - h1) / Rat(2);
            }
        }
        Rat e;
        switch (map) {
            case LabelMap::GLMinus: e = s - Rat(i) - Rat(1, 2); break;
            case LabelMap::B: e = Rat(-i) - Rat(1, 2); break;
            case LabelMap::C: e = Rat(-i); break;
            case LabelMap::GLPlus: e = s - Rat(i); break;
            case LabelMap::D: e = Rat(-i); break;
            case LabelMap::BTilde: e = Rat(-i) - Rat(1, 2); break;
        }
        Rat jfact(1);
        for (int j = 0; j <= m; ++j) {
            if (j > 0) jfact *= Rat(j);
            if (ht[j].is_zero()) continue;
            Poly xj = Poly::monomial(j, ht[j] / jfact);
            g += Quasipoly::term(xj, e, j % 2 == 0 ? QKind::Cosh : QKind::Sinh);
        }
        charge_check += ht.empty() ? Rat(0) : ht[0];
    }
    Rat c0 = cj.empty() ? Rat(0) : cj[0];
    if (charge_check != c0)
        throw std::invalid_argument("spectrum_from_labels: c_0 differs from the label charge sum");

    Spectrum sp;
    sp.sign = (map == LabelMap::GLMinus || map == LabelMap::B || map == LabelMap::C) ? -1 : +1;
    sp.c = c0;
    for (const auto& t : g.terms()) {
        if (t.kind == QKind::Cosh) sp.even_type.push_back({t.alpha, t.p});
        else sp.odd_type.push_back({t.alpha, t.p});
    }
    return sp;
}

ClassData realize_partition(const Spectrum& sp, int sign) {
    if (sign != sp.sign) throw std::invalid_argument("realize_partition: sign mismatch");

    // collect normalized eta data: (class key) -> list of terms
    std::vector<EtaTerm> terms;
    auto add_terms = [&](const SpectrumTerm& t, bool even_kind) {
        Rat jfact(1);
        for (int j = 0; j <= t.mult.degree(); ++j) {
            if (j > 0) jfact *= Rat(j);
            if ((j % 2 == 0) != even_kind) continue;
            if (t.mult.coeff(j).is_zero()) continue;
            terms.push_back(normalize_eta(sign, t.e, j, t.mult.coeff(j) * jfact));
        }
    };
    for (const auto& t : sp.even_type) add_terms(t, true);
    for (const auto& t : sp.odd_type) add_terms(t, false);

    // group by s ~ +-s mod Z
    std::map<Rat, std::vector<EtaTerm>> classes;  // key: canonical fractional invariant
    for (const auto& t : terms) {
        Rat f = frac(t.s);
        Rat key = f < Rat(1) - f ? f : Rat(1) - f;
        classes[key].push_back(t);
    }

    ClassData out;
    for (auto& [key, cl] : classes) {
        ClassBlock blk;
        int m = 0;
        for (const auto& t : cl) m = std::max(m, t.j);
        blk.m = m;
        blk.cj.assign(m + 1, Rat(0));

        std::map<int, std::vector<Rat>> htilde;  // i -> per-j coefficients
        auto put = [&](int i, int j, const Rat& a) {
            auto& row = htilde[i];
            row.resize(m + 1, Rat(0));
            row[j] += a;
        };

        if (key.is_zero()) {
            // integral class: b-infinity (minus) or d-infinity (plus), rep 0
            blk.algebra = sign < 0 ? LabelMap::B : LabelMap::D;
            blk.s = Rat(0);
            for (const auto& t : cl) put((int)(-t.s.floor_int()), t.j, t.a);
        } else if (key == Rat(1, 2)) {
            // half-integral class: c-infinity (rep 1/2) or b-tilde (rep -1/2)
            blk.algebra = sign < 0 ? LabelMap::C : LabelMap::BTilde;
            blk.s = sign < 0 ? Rat(1, 2) : Rat(-1, 2);
            for (const auto& t : cl) {
                Rat diff = blk.s - t.s;  // in Z_{>=0}
                put((int)diff.floor_int(), t.j, t.a);
            }
        } else {
            blk.algebra = sign < 0 ? LabelMap::GLMinus : LabelMap::GLPlus;
            // representative: the member in (0, 1/2) mod 1
            blk.s = key;
            for (const auto& t : cl) {
                Rat diff = blk.s - t.s;
                if (!diff.is_integer())
                    throw std::domain_error("realize_partition: representative ambiguity");
                put((int)diff.floor_int(), t.j, t.a);
            }
        }

        // undo the tilde adjustments and accumulate class central charges
        blk.h = htilde;
        if (blk.algebra == LabelMap::B || blk.algebra == LabelMap::BTilde) {
            auto it = blk.h.find(0);
            if (it != blk.h.end())
                for (auto& v : it->second) v *= Rat(2);
        } else if (blk.algebra == LabelMap::D) {
            auto it0 = blk.h.find(0);
            if (it0 != blk.h.end()) {
                auto it1 = htilde.find(1);
                for (int j = 0; j <= m; ++j) {
                    Rat h1 = (it1 != htilde.end()) ? it1->second[j] : Rat(0);
                    it0->second[j] = it0->second[j] * Rat(2) + h1;
                }
            }
        }
        bool classical = blk.algebra != LabelMap::GLMinus && blk.algebra != LabelMap::GLPlus;
        for (const auto& [i, row] : htilde)
            for (int j = 0; j <= m; ++j) {
                if (classical && j % 2 == 1) continue;  // convention c_j = 0, j odd
                blk.cj[j] += row[j];
            }
        out.push_back(std::move(blk));
    }
    return out;
}

}  // namespace winf
