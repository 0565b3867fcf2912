#include "winf/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace winf {

namespace {

Rat product_ratio(const std::vector<Rat>& lam, const std::vector<Rat>& rho, bool with_sum,
                  const Rat& sumshift) {
    int l = (int)rho.size();
    Rat num(1), den(1);
    auto L = [&](int i) { return i < (int)lam.size() ? lam[i] : Rat(0); };
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            num *= (L(i) + rho[i]) - (L(j) + rho[j]);
            den *= rho[i] - rho[j];
            if (with_sum) {
                num *= (L(i) + rho[i]) + (L(j) + rho[j]) + sumshift;
                den *= rho[i] + rho[j] + sumshift;
            }
        }
    return num / den;
}

}  // namespace

Rat weyl_dim_sp(int l, const std::vector<Rat>& lam) {
    if (l == 0) return Rat(1);
    std::vector<Rat> rho;
    for (int i = 0; i < l; ++i) rho.push_back(Rat(l - i));
    Rat r = product_ratio(lam, rho, true, Rat(0));
    for (int i = 0; i < l; ++i) {
        Rat L = i < (int)lam.size() ? lam[i] : Rat(0);
        r *= (L + rho[i]) / rho[i];
    }
    return r;
}

Rat weyl_dim_so_odd(int l, const std::vector<Rat>& lam) {
    if (l == 0) return Rat(1);
    std::vector<Rat> rho;
    for (int i = 0; i < l; ++i) rho.push_back(Rat(2 * (l - i) - 1, 2));
    Rat r = product_ratio(lam, rho, true, Rat(0));
    for (int i = 0; i < l; ++i) {
        Rat L = i < (int)lam.size() ? lam[i] : Rat(0);
        r *= (L + rho[i]) / rho[i];
    }
    return r;
}

Rat weyl_dim_so_even(int l, const std::vector<Rat>& lam) {
    if (l <= 1) return Rat(1);
    std::vector<Rat> rho;
    for (int i = 0; i < l; ++i) rho.push_back(Rat(l - 1 - i));
    // rho has a zero entry; the D-type formula only uses pair products
    int n = l;
    Rat num(1), den(1);
    auto L = [&](int i) { return i < (int)lam.size() ? lam[i] : Rat(0); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= (L(i) + rho[i]) - (L(j) + rho[j]);
            num *= (L(i) + rho[i]) + (L(j) + rho[j]);
            den *= rho[i] - rho[j];
            den *= rho[i] + rho[j];
        }
    return num / den;
}

Rat weyl_dim(const std::string& group, const std::vector<Rat>& lam) {
    auto open = group.find('(');
    auto close = group.find(')');
    if (open == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("weyl_dim: bad group name " + group);
    std::string fam = group.substr(0, open);
    int n = std::stoi(group.substr(open + 1, close - open - 1));
    if (fam == "Sp") {
        if (n % 2 != 0) throw std::invalid_argument("weyl_dim: Sp needs even size");
        return weyl_dim_sp(n / 2, lam);
    }
    if (fam == "SO") return n % 2 == 0 ? weyl_dim_so_even(n / 2, lam) : weyl_dim_so_odd(n / 2, lam);
    throw std::invalid_argument("weyl_dim: unknown family " + fam);
}

std::vector<int> rho2_of(RootFamily fam, int rank) {
    std::vector<int> rho2(rank, 0);
    for (int i = 0; i < rank; ++i) {
        switch (fam) {
            case RootFamily::C: rho2[i] = 2 * (rank - i); break;
            case RootFamily::B: rho2[i] = 2 * (rank - i) - 1; break;
            case RootFamily::D: rho2[i] = 2 * (rank - 1 - i); break;
        }
    }
    return rho2;
}

Rat weyl_alternant(RootFamily fam, const std::map<std::vector<int>, Rat>& data,
                   const std::vector<int>& lam2) {
    int rank = (int)lam2.size();
    if (rank == 0) {
        auto it = data.find({});
        return it == data.end() ? Rat(0) : it->second;
    }
    std::vector<int> rho2 = rho2_of(fam, rank);
    std::vector<int> target(rank);
    for (int i = 0; i < rank; ++i) target[i] = lam2[i] + rho2[i];

    std::vector<int> perm(rank);
    for (int i = 0; i < rank; ++i) perm[i] = i;
    Rat total(0);
    do {
        // permutation sign
        int psign = 1;
        {
            std::vector<int> p = perm;
            for (int i = 0; i < rank; ++i)
                while (p[i] != i) {
                    std::swap(p[i], p[p[i]]);
                    psign = -psign;
                }
        }
        for (int mask = 0; mask < (1 << rank); ++mask) {
            int flips = __builtin_popcount(mask);
            if (fam == RootFamily::D && flips % 2 != 0) continue;
            int fsign = (fam == RootFamily::D) ? 1 : ((flips % 2 == 0) ? 1 : -1);
            // w(target): permute then flip signs; we need data at w^{-1}... the
            // sum over the full group makes orientation irrelevant.
            std::vector<int> key(rank);
            for (int i = 0; i < rank; ++i) {
                int v = target[perm[i]];
                if (mask & (1 << i)) v = -v;
                key[i] = v - rho2[i];
            }
            auto it = data.find(key);
            if (it == data.end()) continue;
            total += it->second * Rat(psign * fsign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace winf
