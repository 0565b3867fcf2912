#include "winf/qchar.hpp"

#include <algorithm>
#include <stdexcept>

namespace winf {

Rat FundWeightSum::central() const {
    long long k = (long long)n.size();
    switch (algebra) {
        case 'a': return Rat(k);
        case 'b': return Rat(k) + Rat(h, 2);
        case 'c': return Rat(k + h);
        case 'd': {
            long long h1 = 0;
            for (auto v : n) if (v == 1) ++h1;
            return Rat(h - h1, 2) + Rat(k);
        }
        default: throw std::invalid_argument("FundWeightSum: unknown algebra");
    }
}

std::vector<long long> FundWeightSum::conjugate() const {
    if (n.empty()) return {};
    std::vector<long long> lam(n.front(), 0);
    for (auto v : n)
        for (long long i = 0; i < v; ++i) ++lam[i];
    return lam;
}

void FundWeightSum::validate() const {
    for (size_t i = 1; i < n.size(); ++i)
        if (n[i] > n[i - 1]) throw std::invalid_argument("FundWeightSum: indices must decrease");
    if (algebra != 'a') {
        if (h < 0) throw std::invalid_argument("FundWeightSum: vacuum multiple must be >= 0");
        if (!n.empty() && n.back() < 1)
            throw std::invalid_argument("FundWeightSum: indices must be >= 1");
    }
    if (algebra != 'a' && algebra != 'b' && algebra != 'c' && algebra != 'd')
        throw std::invalid_argument("FundWeightSum: unknown algebra");
}

namespace {

// Collect products of (1 - q^e): numerator for power +1, denominator for -1.
struct FactorAccum {
    QSeries num, den;
    explicit FactorAccum(int order2) : num(QSeries::one(order2)), den(QSeries::one(order2)) {}
    void factor(long long exp2, int power) {
        if (exp2 <= 0) throw std::domain_error("qchar: nonpositive product exponent");
        if (exp2 > num.order2()) return;
        QSeries& target = power > 0 ? num : den;
        for (int i = 0; i < std::abs(power); ++i) target.mul_one_plus((int)exp2, Rat(-1));
    }
    QSeries result() const { return num * den.inverse(); }
};

long long at(const std::vector<long long>& lam, long long i) {
    return (i >= 1 && i <= (long long)lam.size()) ? lam[i - 1] : 0;
}

// A = prod_{1<=i<j} (1-q^{lam_i-lam_j+j-i})/(1-q^{j-i}), truncated.
void raw_hook_factor(FactorAccum& acc, const std::vector<long long>& lam, int order) {
    long long n1 = (long long)lam.size();
    for (long long i = 1; i <= n1; ++i) {
        for (long long j = i + 1;; ++j) {
            long long num = at(lam, i) - at(lam, j) + j - i, den = j - i;
            if (num == den) {
                if (j > n1 && den > order) break;
                continue;
            }
            if (num > order && den > order) break;
            acc.factor(2 * num, +1);
            acc.factor(2 * den, -1);
        }
    }
}

}  // namespace

QSeries hook_product_char(const std::vector<long long>& n, int order2) {
    // prod over diagram cells of (1 - q^{hook})^{-1}
    FactorAccum acc(order2);
    std::vector<long long> lam;  // conjugate
    if (!n.empty()) {
        lam.assign(n.front(), 0);
        for (auto v : n)
            for (long long i = 0; i < v; ++i) ++lam[i];
    }
    for (size_t r = 0; r < n.size(); ++r)
        for (long long c = 1; c <= n[r]; ++c) {
            long long hook = n[r] - c + lam[c - 1] - (long long)r;
            acc.factor(2 * hook, -1);
        }
    return acc.result();
}

QSeries raw_weylkac_qchar(char algebra, const std::vector<long long>& lambda, long long twoc,
                          int order2) {
    int order = order2 / 2;
    FactorAccum acc(order2);
    raw_hook_factor(acc, lambda, order);
    long long lmax = lambda.empty() ? 0 : lambda.front();
    long long cap = order + 2 * lmax + 2;

    if (algebra == 'b') {
        // pairs 0 <= i < j: (1-q^{2c-lam_{i+1}-lam_j+i+j})/(1-q^{i+j})
        for (long long i = 0; i <= cap; ++i)
            for (long long j = i + 1; i + j <= cap; ++j) {
                long long num = twoc - at(lambda, i + 1) - at(lambda, j) + i + j;
                long long den = i + j;
                if (num == den) continue;
                acc.factor(2 * num, +1);
                acc.factor(2 * den, -1);
            }
        return acc.result();
    }
    if (algebra == 'c') {
        for (long long i = 0; i <= cap; ++i)
            for (long long j = i + 1; i + j + 2 <= cap; ++j) {
                long long num = twoc - at(lambda, i + 1) - at(lambda, j + 1) + i + j + 2;
                long long den = i + j + 2;
                if (num == den) continue;
                acc.factor(2 * num, +1);
                acc.factor(2 * den, -1);
            }
        // long-root family: (1-q^{c-lam_j+j})/(1-q^j)
        if (twoc % 2 != 0) throw std::invalid_argument("raw_weylkac_qchar: c must be integral for c-type");
        for (long long j = 1; j <= cap; ++j) {
            long long num = twoc / 2 - at(lambda, j) + j, den = j;
            if (num == den) continue;
            acc.factor(2 * num, +1);
            acc.factor(2 * den, -1);
        }
        return acc.result();
    }
    throw std::invalid_argument("raw_weylkac_qchar: algebra must be 'b' or 'c'");
}

QSeries raw_weylkac_qchar(const FundWeightSum& w, int order2) {
    w.validate();
    Rat c = w.central();
    return raw_weylkac_qchar(w.algebra, w.conjugate(), (long long)((c * Rat(2)).num()), order2);
}

namespace {

// Simplified B-form prefactor: phi(q^2)^{ob(2c+1)} prod_{j>0} phi_{2c-2j} / phi^{[(2c+1)/2]}
QSeries b_prefactor(long long twoc, int order2) {
    QSeries r = QSeries::one(order2);
    bool even_2c1 = (twoc + 1) % 2 == 0;
    if (even_2c1) {
        // phi(q^2)
        for (int j = 1; 4 * j <= order2; ++j) r.mul_one_plus(4 * j, Rat(-1));
    }
    for (long long j = 1; twoc - 2 * j >= 1; ++j) r.mul_phi_factor((int)(twoc - 2 * j));
    long long e = (twoc + 1) / 2;  // floor
    QSeries phi = QSeries::euler_phi(order2);
    QSeries phiinv = phi.inverse();
    for (long long i = 0; i < e; ++i) r *= phiinv;
    return r;
}

// Corrected C-form prefactor: [prod_{1<=i<j}(1-q^{2c+i+j})/(1-q^{i+j})] / phi_c.
// The bracket collapses to prod_n (1-q^n)^{e_n}, e_n = -floor((n-1)/2) for
// n <= 2c+2 and -c beyond.
QSeries c_prefactor(long long c, int order2) {
    FactorAccum acc(order2);
    int order = order2 / 2;
    for (long long n = 1; n <= order; ++n) {
        long long e = (n <= 2 * c + 2) ? -((n - 1) / 2) : -c;
        if (e != 0) acc.factor(2 * n, (int)e);
    }
    QSeries r = acc.result();
    r.div_phi_factor((int)c);
    return r;
}

}  // namespace

QSeries qchar(const FundWeightSum& w, int order2) {
    w.validate();
    long long k = (long long)w.n.size();
    int order = order2 / 2;

    if (w.algebra == 'a') {
        FactorAccum acc(order2);
        for (long long i = 0; i < k; ++i)
            for (long long j = i + 1; j < k; ++j)
                acc.factor(2 * (w.n[i] - w.n[j] + j - i), +1);
        QSeries r = acc.result();
        QSeries phiinv = QSeries::euler_phi(order2).inverse();
        for (long long i = 0; i < k; ++i) r *= phiinv;
        return r;
    }

    std::vector<long long> lam = w.conjugate();
    long long n1 = w.n.empty() ? 0 : w.n.front();
    Rat c = w.central();
    long long twoc = (long long)((c * Rat(2)).num());

    if (w.algebra == 'b') {
        // hook factor
        FactorAccum acc(order2);
        for (long long i = 0; i < k; ++i)
            for (long long j = i + 1; j < k; ++j)
                acc.factor(2 * (w.n[i] - w.n[j] + j - i), +1);
        QSeries r = acc.result();
        for (long long i = 1; i <= k; ++i) r.div_phi_factor((int)(w.n[i - 1] + k - i));
        r *= b_prefactor(twoc, order2);
        // phi_{2c+i+n1} / phi_{2c+n1+i-lam_{i+1}}, i = 0..n1-1 (2c is integral)
        for (long long i = 0; i <= n1 - 1; ++i) {
            r *= QSeries::phi_i((int)(twoc + i + n1), order2);
            r *= QSeries::phi_i((int)(twoc + n1 + i - at(lam, i + 1)), order2).inverse();
        }
        FactorAccum acc4(order2);
        for (long long i = 0; i < n1; ++i)
            for (long long j = i + 1; j <= n1; ++j) {
                long long num = twoc + j + i - at(lam, i + 1) - at(lam, j);
                long long den = twoc + j + i;
                if (num == den) continue;
                acc4.factor(2 * num, +1);
                acc4.factor(2 * den, -1);
            }
        r *= acc4.result();
        return r;
    }

    if (w.algebra == 'c') {
        if (twoc % 2 != 0) throw std::logic_error("qchar: c not integral in c-type");
        long long C = twoc / 2;
        FactorAccum acc(order2);
        for (long long i = 0; i < k; ++i)
            for (long long j = i + 1; j < k; ++j)
                acc.factor(2 * (w.n[i] - w.n[j] + j - i), +1);
        QSeries r = acc.result();
        for (long long i = 1; i <= k; ++i) r.div_phi_factor((int)(w.n[i - 1] + k - i));
        r *= c_prefactor(C, order2);
        for (long long i = 1; i <= n1; ++i) {
            r *= QSeries::phi_i((int)(2 * C + n1 + i), order2);
            r *= QSeries::phi_i((int)(2 * C + n1 + i - at(lam, i)), order2).inverse();
        }
        FactorAccum accd(order2);
        for (long long i = 1; i < n1; ++i)
            for (long long j = i + 1; j <= n1; ++j) {
                long long num = 2 * C - at(lam, i) - at(lam, j) + i + j;
                long long den = 2 * C + i + j;
                if (num == den) continue;
                accd.factor(2 * num, +1);
                accd.factor(2 * den, -1);
            }
        // diagonal (long-root) finite product
        for (long long j = 1; j <= n1; ++j) {
            long long num = C + j - at(lam, j), den = C + j;
            if (num == den) continue;
            accd.factor(2 * num, +1);
            accd.factor(2 * den, -1);
        }
        r *= accd.result();
        return r;
    }

    // d-type via the derived tail-and-products form
    std::vector<Rat> lamr(lam.begin(), lam.end());
    return dinf_char_from_labels(lamr, c, order2);
}

QSeries dinf_char_from_labels(const std::vector<Rat>& lambda, const Rat& c, int order2) {
    auto lam = [&](long long i) { return i >= 1 && i <= (long long)lambda.size() ? lambda[i - 1] : Rat(0); };

    // tail: sum over even subsets of {E_j = c + j - 1 - lambda_j}
    // E_j strictly increases, so the subset enumeration is a DP over j.
    long long jmax = (long long)lambda.size() + order2 + 2;
    std::vector<Rat> exps;
    Rat negsum(0);
    for (long long j = 1; j <= jmax; ++j) {
        Rat e = c + Rat(j - 1) - lam(j);
        Rat e2 = e * Rat(2);
        if (!e2.is_integer()) throw std::domain_error("dinf_char: exponents not half-integral");
        if (e * Rat(2) > Rat(order2) - negsum * Rat(2)) break;
        exps.push_back(e);
        if (e < Rat(0)) negsum += e;
    }
    // DP over (parity, doubled sum); sums may dip below zero by negsum
    int offset = -(int)(negsum * Rat(2)).floor_int().convert_to<long long>();
    int width = order2 + offset + 1;
    std::vector<std::vector<Rat>> dp(2, std::vector<Rat>(width, Rat(0)));
    dp[0][offset] = Rat(1);
    for (const auto& e : exps) {
        long long e2 = (e * Rat(2)).num().convert_to<long long>();
        auto next = dp;
        for (int par = 0; par < 2; ++par)
            for (int s = 0; s < width; ++s) {
                if (dp[par][s].is_zero()) continue;
                long long ns = s + e2;
                if (ns >= 0 && ns < width) next[1 - par][(int)ns] += dp[par][s];
            }
        dp = std::move(next);
    }
    QSeries tail(order2);
    for (int s = 0; s < width; ++s) {
        if (dp[0][s].is_zero()) continue;
        int k2 = s - offset;
        if (k2 < 0) throw std::domain_error("dinf_char: character has negative powers");
        if (k2 <= order2) tail.add2(k2, dp[0][s]);
    }

    // products over the two coroot families
    int order = order2 / 2;
    Rat twoc = c * Rat(2);
    FactorAccum acc(order2);
    long long lmax = 0;
    for (const auto& v : lambda) lmax = std::max(lmax, (v.abs() * Rat(1)).num().convert_to<long long>() + 1);
    long long cap = order + 2 * lmax + (twoc.abs().num().convert_to<long long>()) + 4;
    for (long long i = 1; i <= cap; ++i)
        for (long long j = i + 1; j <= cap; ++j) {
            // F1: (1-q^{lam_i-lam_j+j-i})/(1-q^{j-i})
            Rat num1 = lam(i) - lam(j) + Rat(j - i);
            Rat den1 = Rat(j - i);
            if (num1 != den1 && (num1 <= Rat(order) || den1 <= Rat(order))) {
                acc.factor((num1 * Rat(2)).num().convert_to<long long>(), +1);
                acc.factor((den1 * Rat(2)).num().convert_to<long long>(), -1);
            }
            // F2: (1-q^{2c-lam_i-lam_j+i+j-2})/(1-q^{i+j-1})
            Rat num2 = twoc - lam(i) - lam(j) + Rat(i + j - 2);
            Rat den2 = Rat(i + j - 1);
            if (num2 != den2 && (num2 <= Rat(order) || den2 <= Rat(order))) {
                acc.factor((num2 * Rat(2)).num().convert_to<long long>(), +1);
                acc.factor((den2 * Rat(2)).num().convert_to<long long>(), -1);
            }
        }
    return tail * acc.result();
}

QSeries walg_char(WalgKind kind, int l, int order2) {
    if (l < 1) throw std::invalid_argument("walg_char: l must be >= 1");
    QSeries r = QSeries::one(order2);
    QSeries phiinv = QSeries::euler_phi(order2).inverse();
    for (int i = 1; i <= l; ++i) {
        int e = kind == WalgKind::WD ? (i == l ? l - 1 : 2 * i - 1) : 2 * i - 1;
        r.mul_phi_factor(e);
        r *= phiinv;
    }
    if (kind == WalgKind::WBSuper) {
        // prod_{n>=1} (1 + q^{n + l - 1/2})
        for (int n = 1; 2 * n + 2 * l - 1 <= order2; ++n) r.mul_one_plus(2 * n + 2 * l - 1, Rat(1));
    }
    return r;
}

}  // namespace winf
