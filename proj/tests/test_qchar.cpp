#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winf/qchar.hpp"

using namespace winf;

namespace {

std::vector<FundWeightSum> weight_family(char algebra, int kmax, int n1max, int hmax) {
    std::vector<FundWeightSum> out;
    std::vector<std::vector<long long>> shapes = {{}};
    for (int k = 1; k <= kmax; ++k) {
        std::vector<std::vector<long long>> next;
        for (const auto& s : shapes) {
            if ((int)s.size() != k - 1) continue;
            long long top = s.empty() ? n1max : s.back();
            for (long long v = 1; v <= top; ++v) {
                auto t = s;
                t.push_back(v);
                next.push_back(t);
            }
        }
        shapes.insert(shapes.end(), next.begin(), next.end());
    }
    for (const auto& s : shapes)
        for (long long h = 0; h <= hmax; ++h) out.push_back({algebra, s, h});
    return out;
}

QSeries neutral_fermion_even_char(int order2) {
    // even part of the half-integer moded neutral fermion Fock space
    QSeries plus = QSeries::one(order2), minus = QSeries::one(order2);
    for (int n = 1; 2 * n - 1 <= order2; ++n) {
        plus.mul_one_plus(2 * n - 1, Rat(1));
        minus.mul_one_plus(2 * n - 1, Rat(-1));
    }
    return (plus + minus) * Rat(1, 2);
}

}  // namespace

TEST_CASE("gl characters") {
    // vacuum Lambda_0: 1/phi
    QSeries v = qchar({'a', {0}, 0}, 10);
    QSeries parts = QSeries::euler_phi(10).inverse();
    CHECK(v == parts);
    CHECK(v.coeff2(10) == Rat(7));

    // Lambda_1 + Lambda_0: (1-q^2)/phi^2
    QSeries w = qchar({'a', {1, 0}, 0}, 8);
    QSeries expect = QSeries::euler_phi(8).inverse();
    expect *= expect;
    expect.mul_one_plus(4, Rat(-1));
    CHECK(w == expect);
}

TEST_CASE("b and c vacua and small weights against raw Weyl-Kac") {
    // b with zero labels, h = 0: trivial weight, character 1
    CHECK(raw_weylkac_qchar({'b', {}, 0}, 12) == QSeries::one(12));
    CHECK(qchar({'b', {}, 0}, 12) == QSeries::one(12));

    // spec's internal identity examples
    CHECK(raw_weylkac_qchar({'b', {1}, 0}, 12) == qchar({'b', {1}, 0}, 12));
    CHECK(raw_weylkac_qchar({'c', {}, 1}, 12) == qchar({'c', {}, 1}, 12));

    // c vacuum at c=1 equals (1-q^2)/phi (the Sp(2)-invariants oracle)
    QSeries expect = QSeries::euler_phi(12).inverse();
    expect.mul_one_plus(4, Rat(-1));
    CHECK(qchar({'c', {}, 1}, 12) == expect);
    // and c Lambda_1: (1-q^4)/phi
    QSeries e2 = QSeries::euler_phi(12).inverse();
    e2.mul_one_plus(8, Rat(-1));
    CHECK(qchar({'c', {1}, 0}, 12) == e2);
}

TEST_CASE("criterion 7: raw equals simplified to q^20 for the weight family") {
    const int order2 = 40;
    for (char alg : {'b', 'c'}) {
        for (const auto& w : weight_family(alg, 3, 4, 3)) {
            QSeries raw = raw_weylkac_qchar(w, order2);
            QSeries simp = qchar(w, order2);
            INFO("algebra ", alg, " k=", w.n.size(), " h=", w.h);
            CHECK(raw == simp);
        }
    }
}

TEST_CASE("criterion 7: hook identity to q^20") {
    const int order2 = 40;
    for (const auto& w : weight_family('b', 3, 4, 0)) {
        // A-form: prod_{i<j<=k} over phi's == hook product == raw pair form
        FundWeightSum only{w.algebra, w.n, 0};
        QSeries hooks = hook_product_char(only.n, order2);
        // raw pair form of A from the conjugate labels
        auto lam = only.conjugate();
        // reuse the b raw at 2c = 0 won't work (needs the full product), so
        // build the pair form directly through raw_weylkac with a huge charge
        // cancelling the B factor is awkward; instead compare against the
        // simplified first factor.
        QSeries simp = QSeries::one(order2);
        long long k = (long long)only.n.size();
        for (long long i = 0; i < k; ++i)
            for (long long j = i + 1; j < k; ++j) {
                long long e = only.n[i] - only.n[j] + j - i;
                if (2 * e <= order2) simp.mul_one_plus((int)(2 * e), Rat(-1));
            }
        for (long long i = 1; i <= k; ++i) simp.div_phi_factor((int)(only.n[i - 1] + k - i));
        CHECK(hooks == simp);
    }
}

TEST_CASE("d characters: basic and spinor ground cases") {
    // L(d; Lambda_0) at c=1/2 is the even neutral fermion character
    QSeries lhs = dinf_char_from_labels({}, Rat(1, 2), 24);
    CHECK(lhs == neutral_fermion_even_char(24));

    // trivial weight
    CHECK(dinf_char_from_labels({}, Rat(0), 16) == QSeries::one(16));

    // all coefficients nonnegative integers for a sample of weights
    for (const auto& w : weight_family('d', 2, 3, 2)) {
        QSeries ch = qchar(w, 24);
        for (int i = 0; i <= 24; ++i) {
            CHECK(ch.coeff2(i).is_integer());
            CHECK(ch.coeff2(i) >= Rat(0));
        }
    }
}

TEST_CASE("W-algebra characters") {
    QSeries wd1 = walg_char(WalgKind::WD, 1, 10);
    CHECK(wd1 == QSeries::euler_phi(10).inverse());

    QSeries wd2 = walg_char(WalgKind::WD, 2, 10);
    QSeries expect = QSeries::euler_phi(10).inverse();
    expect *= expect;
    expect.mul_one_plus(2, Rat(-1));
    expect.mul_one_plus(2, Rat(-1));
    CHECK(wd2 == expect);

    QSeries wb1 = walg_char(WalgKind::WBSuper, 1, 9);
    // (1-q)/phi * (1 + q^{3/2} + q^{5/2} + ...) = 1 + q^{3/2} + q^2 + ...
    CHECK(wb1.coeff2(0) == Rat(1));
    CHECK(wb1.coeff2(1) == Rat(0));
    CHECK(wb1.coeff2(2) == Rat(0));  // (1-q)/phi kills q^1
    CHECK(wb1.coeff2(3) == Rat(1));  // q^{3/2}
    CHECK(wb1.coeff2(4) == Rat(1));
}

TEST_CASE("criterion 8: eq_newch for l = 1,2,3 to q^15") {
    const int order2 = 30;
    for (int l = 1; l <= 3; ++l) {
        FundWeightSum vac{'d', {}, 2ll * l};
        std::vector<long long> ones(2 * l, 1);
        FundWeightSum det{'d', ones, 0};
        QSeries lhs = qchar(vac, order2) + qchar(det, order2).shifted(2 * l);
        QSeries rhs = walg_char(WalgKind::WD, l, order2);
        INFO("l = ", l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("criterion 8: eq_wb for l = 1,2 to q^15 in half steps") {
    const int order2 = 30;
    for (int l = 1; l <= 2; ++l) {
        FundWeightSum vac{'d', {}, 2ll * l + 1};
        std::vector<long long> ones(2 * l + 1, 1);
        FundWeightSum det{'d', ones, 0};
        QSeries lhs = qchar(vac, order2) + qchar(det, order2).shifted(2 * l + 1);
        QSeries rhs = walg_char(WalgKind::WBSuper, l, order2);
        INFO("l = ", l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("character coefficients are nonnegative integers") {
    for (char alg : {'a', 'b', 'c'}) {
        for (const auto& w : weight_family(alg, 2, 3, 2)) {
            QSeries ch = qchar(w, 20);
            for (int i = 0; i <= 20; ++i) {
                CHECK(ch.coeff2(i).is_integer());
                CHECK(ch.coeff2(i) >= Rat(0));
            }
        }
    }
}
