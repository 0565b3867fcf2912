#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "winf/window.hpp"

using namespace winf;

namespace {

DOp random_fixed(std::mt19937_64& rng, int sign, int kmax, int degmax) {
    DOp a;
    int nterms = 1 + rng() % 3;
    for (int t = 0; t < nterms; ++t) {
        int k = (int)(rng() % (2 * kmax + 1)) - kmax;
        Rat center = sign < 0 ? Rat(k, 2) : Rat(k + 1, 2);
        bool odd = sign > 0 || k % 2 == 0;
        std::vector<Rat> g(degmax + 2, Rat(0));
        for (int d = odd ? 1 : 0; d <= degmax; d += 2) g[d] = Rat((long long)(rng() % 9) - 4);
        a.add_term(k, Poly(g).compose(Poly({center, Rat(1)})));
    }
    return a;
}

}  // namespace

TEST_CASE("window bracket on unit matrices") {
    int N = 6, m = 0;
    Window e01 = unit_matrix(N, m, 0, 1), e10 = unit_matrix(N, m, 1, 0);
    Window b = window_bracket(e01, e10);
    Window expect = unit_matrix(N, m, 0, 0) - unit_matrix(N, m, 1, 1);
    // J = sum_{j<=0} E_jj: the cocycle fires exactly when i <= 0 < j
    expect.central() = RmPoly::unit(m);
    CHECK(b == expect);

    CHECK(window_bracket(e10, e01) == -b);

    // both indices <= 0: no central term
    Window c = window_bracket(unit_matrix(N, m, -1, 0), unit_matrix(N, m, 0, -1));
    CHECK(c.central().is_zero());
    // straddling pair at i = -1: [E_{-1,0}] has both <= 0 as well; the
    // straddle happens for [E_{-1,1}, E_{1,-1}]
    Window s = window_bracket(unit_matrix(N, m, -1, 1), unit_matrix(N, m, 1, -1));
    CHECK(s.central() == RmPoly::unit(m));
}

TEST_CASE("phi images of simple elements") {
    int N = 5;
    Rat s(1, 3);
    Window w = phi(s, 0, PhiVariant::General, DOp::d(), N);
    for (int j = -N; j <= N; ++j) {
        RmPoly v(0);
        v.coeff(0) = Rat(-j) + s;
        CHECK(w.entry(j, j) == v);
    }

    Window wt = phi(Rat(0), 1, PhiVariant::General, DOp::t(1), N);
    for (int j = -N + 1; j <= N; ++j) CHECK(wt.entry(j - 1, j) == RmPoly::unit(1));
    CHECK((int)wt.entries().size() == 2 * N);

    // phi_{1/2} of t^2 g(D+1), g odd, lands in the c-infinity condition
    // (restricted to the reflection-closed index range [1-N, N])
    DOp a = DOp::term(2, Poly::x().compose(Poly({Rat(1), Rat(1)})));  // t^2 (D+1)
    Window img = phi(Rat(1, 2), 2, PhiVariant::Minus, a, N);
    CHECK(classical_membership(ClassicalKind::C, img.restricted(1 - N, N)));
}

TEST_CASE("hat_phi_correction small cases") {
    CHECK(hat_phi_correction(Rat(0), 0, PhiVariant::Minus, 1).is_zero());
    CHECK(hat_phi_correction(Rat(0), 0, PhiVariant::Plus, 1).is_zero());
    for (long long num = -3; num <= 3; ++num) {
        Rat s(num, 2);
        RmPoly c = hat_phi_correction(s, 0, PhiVariant::Minus, 1);
        CHECK(c.coeff(0) == s * (s - Rat(1)) / Rat(2));
    }
    CHECK_THROWS(hat_phi_correction(Rat(0), 0, PhiVariant::Minus, 2));
}

TEST_CASE("hat_phi is a homomorphism (sampled)") {
    std::mt19937_64 rng(77);
    const int N = 9;
    struct Case { Rat s; int sign; };
    std::vector<Case> cases = {{Rat(0), -1}, {Rat(0), +1}, {Rat(1, 2), -1},
                               {Rat(-1, 2), +1}, {Rat(1, 3), -1}, {Rat(1, 3), +1}};
    for (const auto& cs : cases)
        for (int m = 0; m <= 2; ++m)
            for (int it = 0; it < 6; ++it) {
                PhiVariant var = cs.sign < 0 ? PhiVariant::Minus : PhiVariant::Plus;
                DOp a = random_fixed(rng, cs.sign, 2, 4);
                DOp b = random_fixed(rng, cs.sign, 2, 4);
                Window lhs = window_bracket(hat_phi(cs.s, m, var, a, N),
                                            hat_phi(cs.s, m, var, b, N));
                Window rhs = hat_phi(cs.s, m, var, bracket(a, b), N);
                int radius = N - 4;
                CHECK(Window::equal_interior(lhs, rhs, radius));
            }
}

TEST_CASE("classical image containment") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 25; ++it) {
        int N = 8, m = it % 3;
        DOp am = random_fixed(rng, -1, 2, 4);
        DOp ap = random_fixed(rng, +1, 2, 4);
        CHECK(classical_membership(ClassicalKind::BMinus, phi(Rat(0), m, PhiVariant::Minus, am, N)));
        CHECK(classical_membership(ClassicalKind::C,
                                   phi(Rat(1, 2), m, PhiVariant::Minus, am, N).restricted(1 - N, N)));
        CHECK(classical_membership(ClassicalKind::D,
                                   phi(Rat(0), m, PhiVariant::Plus, ap, N).restricted(1 - N, N)));
        CHECK(classical_membership(ClassicalKind::BPlus, phi(Rat(-1, 2), m, PhiVariant::Plus, ap, N)));
    }
    // explicit examples
    int N = 4, m = 0;
    Window d_elem = unit_matrix(N, m, 1, 2) - unit_matrix(N, m, -1, 0);
    CHECK(classical_membership(ClassicalKind::D, d_elem));
    CHECK(!classical_membership(ClassicalKind::C, unit_matrix(N, m, 0, 0)));
    CHECK(classical_membership(ClassicalKind::C, Window(N, m)));
    CHECK(classical_membership(ClassicalKind::D, Window(N, m)));
}

TEST_CASE("nu shift: phi_{s+1} = nu . phi_s on the interior") {
    std::mt19937_64 rng(111);
    for (int it = 0; it < 10; ++it) {
        int N = 8, m = it % 3;
        Rat s(1 + (long long)(rng() % 3), 3);
        DOp a = random_fixed(rng, -1, 2, 4);
        Window w1 = phi(s + Rat(1), m, PhiVariant::General, a, N);
        Window w0 = phi(s, m, PhiVariant::General, a, N);
        Window shifted(N, m);
        for (const auto& [ij, v] : w0.entries()) shifted.add_entry(ij.first + 1, ij.second + 1, v);
        CHECK(Window::equal_interior(w1, shifted, N - 3));
    }
}

TEST_CASE("labels_from_weight") {
    // zero weight
    LabelTable z = labels_from_weight(WeightAlgebra::GL, {}, RmPoly(1));
    for (const auto& [i, row] : z.h)
        for (const auto& v : row) CHECK(v == Rat(0));

    // gl fundamental weight Lambda_0: central 1, all diagonal values 0
    LabelTable gl = labels_from_weight(WeightAlgebra::GL, {}, RmPoly::unit(0));
    CHECK(gl.c[0] == Rat(1));
    CHECK(gl.h.at(0)[0] == Rat(1));
    CHECK(gl.h.at(1)[0] == Rat(0));
    CHECK(gl.h.at(-1)[0] == Rat(0));

    // d-type h_0 = -lambda_1 - lambda_2 + 2 c
    std::map<int, RmPoly> diag;
    RmPoly d1(0); d1.coeff(0) = Rat(3); diag.emplace(1, d1);
    RmPoly d2(0); d2.coeff(0) = Rat(1); diag.emplace(2, d2);
    RmPoly cen(0); cen.coeff(0) = Rat(2);
    LabelTable d = labels_from_weight(WeightAlgebra::D, diag, cen);
    // lambda_1 = diag[1] - diag[0] = 3, lambda_2 = diag[2] - diag[-1] = 1
    CHECK(d.lambda.at(1)[0] == Rat(3));
    CHECK(d.lambda.at(2)[0] == Rat(1));
    CHECK(d.h.at(0)[0] == Rat(-3) - Rat(1) + Rat(4));
    CHECK(d.h.at(1)[0] == Rat(2));

    // b-type odd/even split: u^1 E_00 weight with m = 1
    std::map<int, RmPoly> bd;
    RmPoly b0(1); b0.coeff(1) = Rat(1); bd.emplace(0, b0);
    RmPoly bc(1); bc.coeff(0) = Rat(1, 2);
    LabelTable b = labels_from_weight(WeightAlgebra::B, bd, bc);
    CHECK(b.lambda.at(0)[1] == Rat(2));        // 2 u E_00 value
    CHECK(b.h.at(0)[1] == Rat(2));             // lambda_0 - lambda_1 + c_1 = 2 - 0 + 0
    CHECK(b.h.at(0)[0] == Rat(1));             // -2 lambda_1 + 2 c_0 = 1
}
