#include "winf/charpoly.hpp"

#include <stdexcept>

namespace winf {

namespace {

// Write a fixed-parity polynomial as w^e * h(w^2), e in {0,1}.
Poly squeeze(const Poly& g, Parity p) {
    int e = p == Parity::Odd ? 1 : 0;
    std::vector<Rat> h((g.degree() - e) / 2 + 1, Rat(0));
    for (int i = e; i <= g.degree(); i += 2) h[(i - e) / 2] = g.coeff(i);
    return Poly(std::move(h));
}

Poly unsqueeze(const Poly& h, Parity p) {
    int e = p == Parity::Odd ? 1 : 0;
    std::vector<Rat> g(2 * h.degree() + e + 1, Rat(0));
    for (int i = 0; i <= h.degree(); ++i) g[2 * i + e] = h.coeff(i);
    return Poly(std::move(g));
}

}  // namespace

Poly char_poly_of_ideal(const std::vector<Poly>& gens, Parity module_parity) {
    Poly acc;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.parity() != module_parity)
            throw std::invalid_argument("char_poly_of_ideal: generator parity mismatch");
        Poly h = squeeze(g, module_parity);
        acc = acc.is_zero() ? h.monic() : Poly::gcd(acc, h);
    }
    if (acc.is_zero()) return Poly();
    return unsqueeze(acc, module_parity);
}

namespace {

Parity minus_parity(int k) { return (k % 2 != 0) ? Parity::Even : Parity::Odd; }

Poly wshift(const Poly& b, const Rat& a) { return b.shift(a); }

}  // namespace

DivisibilityReport verify_char_divisibility(const CharPolySeq& seq, int sign) {
    DivisibilityReport rep;
    auto get = [&](int k) -> const Poly* {
        auto it = seq.find(k);
        return it == seq.end() ? nullptr : &it->second;
    };
    int kmax = seq.empty() ? 0 : seq.rbegin()->first;

    for (int k = 1; k <= kmax; ++k) {
        const Poly* bk = get(k);
        if (!bk) continue;
        DivisibilityClause nz{"nonzero", k, 0, !bk->is_zero(), false};
        rep.clauses.push_back(nz);
        if (bk->is_zero()) continue;  // dependent clauses are skipped below

        if (sign < 0) {
            Parity want = minus_parity(k);
            rep.clauses.push_back({"parity", k, 0, bk->parity() == want, false});
        } else {
            rep.clauses.push_back({"parity", k, 0, bk->parity() == Parity::Odd, false});
        }

        const Poly* bk1 = get(k + 1);
        if (bk1 && !bk1->is_zero()) {
            Poly w = Poly::x();
            if (sign < 0) {
                rep.clauses.push_back(
                    {"b_k | w b_{k+1}(w-1/2)", k, 0, bk->divides(w * wshift(*bk1, Rat(-1, 2))), false});
                rep.clauses.push_back(
                    {"b_k | w b_{k+1}(w+1/2)", k, 0, bk->divides(w * wshift(*bk1, Rat(1, 2))), false});
            } else {
                Poly factor = w * Poly({Rat(k + 1, 2), Rat(1)});  // w (w + (k+1)/2)
                rep.clauses.push_back({"b_k | w(w+(k+1)/2) b_{k+1}(w+1/2)", k, 0,
                                       bk->divides(factor * wshift(*bk1, Rat(1, 2))), false});
            }
        } else if (bk1) {
            rep.clauses.push_back({"b_k | step", k, 0, false, true});
        }

        for (int l = 1; k + l <= kmax; ++l) {
            const Poly* bl = get(l);
            const Poly* bkl = get(k + l);
            if (!bl || !bkl) continue;
            if (bl->is_zero() || bkl->is_zero()) {
                rep.clauses.push_back({"b_{k+l} | w b_k b_l", k, l, false, true});
                continue;
            }
            Poly w = Poly::x();
            Poly prod = sign < 0
                            ? w * wshift(*bk, Rat(-l, 2)) * wshift(*bl, Rat(k, 2))
                            : w * wshift(*bk, Rat(l, 2)) * wshift(*bl, Rat(-k, 2));
            rep.clauses.push_back({"b_{k+l} | w b_k b_l", k, l, bkl->divides(prod), false});
        }
    }
    return rep;
}

namespace {

// Merge a new parity element into the principal module generator.
bool absorb(Poly& gen, const Poly& elem, Parity p) {
    if (elem.is_zero()) return false;
    if (elem.parity() != p) throw std::logic_error("generated_parabolic: parity drift");
    Poly h = squeeze(elem, p);
    Poly cur = gen.is_zero() ? Poly() : squeeze(gen, p);
    Poly next = cur.is_zero() ? h.monic() : Poly::gcd(cur, h);
    Poly out = unsqueeze(next, p);
    if (out == gen) return false;
    gen = out;
    return true;
}

}  // namespace

CharPolySeq generated_parabolic(const Poly& b1, int sign, int kmax) {
    Parity p1 = sign < 0 ? minus_parity(1) : Parity::Odd;
    if (b1.is_zero() || b1.parity() != p1)
        throw std::invalid_argument("generated_parabolic: bad seed polynomial");

    std::vector<Poly> b(kmax + 1);  // b[k], 0 = not yet generated
    b[1] = b1.monic();

    auto parity_at = [&](int k) { return sign < 0 ? minus_parity(k) : Parity::Odd; };

    bool changed = true;
    while (changed) {
        changed = false;
        // negative-negative brackets: elements p(w-l/2) q(w+k/2) - p(w+l/2) q(w-k/2)
        for (int k = 1; k <= kmax; ++k) {
            if (b[k].is_zero()) continue;
            for (int l = k; k + l <= kmax; ++l) {
                if (b[l].is_zero()) continue;
                for (int i = 0; i <= 1; ++i)
                    for (int j = 0; j <= 1; ++j) {
                        Poly pk = b[k] * Poly::monomial(2 * i);
                        Poly pl = b[l] * Poly::monomial(2 * j);
                        Poly elem = pk.shift(Rat(-l, 2)) * pl.shift(Rat(k, 2)) -
                                    pk.shift(Rat(l, 2)) * pl.shift(Rat(-k, 2));
                        changed |= absorb(b[k + l], elem, parity_at(k + l));
                    }
            }
        }
        // positive-negative brackets: g(w-(k+j)/2) h(w-j/2) - g(w+(k+j)/2) h(w+j/2)
        for (int k = 1; k <= kmax; ++k)
            for (int j = 1; k + j <= kmax; ++j) {
                if (b[k + j].is_zero()) continue;
                int ge = sign < 0 ? ((j % 2 != 0) ? 0 : 1) : 1;  // parity exponent of g
                for (int e = ge; e <= ge + 4; e += 2)
                    for (int i = 0; i <= 1; ++i) {
                        Poly g = Poly::monomial(e);
                        Poly h = b[k + j] * Poly::monomial(2 * i);
                        Poly elem = g.shift(Rat(-(k + j), 2)) * h.shift(Rat(-j, 2)) -
                                    g.shift(Rat(k + j, 2)) * h.shift(Rat(j, 2));
                        changed |= absorb(b[k], elem, parity_at(k));
                    }
            }
    }

    CharPolySeq seq;
    for (int k = 1; k <= kmax; ++k) seq[k] = b[k];
    return seq;
}

}  // namespace winf
