#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "winf/quasipoly.hpp"

using namespace winf;

TEST_CASE("rationals reduce and parse") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat::parse("-3/2").str() == "-3/2");
    CHECK(Rat::parse("7").str() == "7");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(-7, 2).floor_int() == BigInt(-4));
    CHECK(Rat(5, 2).is_half_odd_integer());
    CHECK(!Rat(3).is_half_odd_integer());
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(0) == Poly(Rat(1)));
    CHECK(falling_factorial(2) == Poly({Rat(0), Rat(-1), Rat(1)}));
    CHECK(falling_factorial(3) == Poly({Rat(0), Rat(2), Rat(-3), Rat(1)}));
}

TEST_CASE("polynomial division and gcd") {
    Poly a = Poly({Rat(0), Rat(0), Rat(-1), Rat(0), Rat(1)});  // w^4 - w^2
    Poly b = Poly({Rat(0), Rat(-1), Rat(0), Rat(1)});          // w^3 - w
    CHECK(Poly::gcd(a, b) == Poly({Rat(0), Rat(-1), Rat(0), Rat(1)}).monic());
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(b.parity() == Parity::Odd);
    CHECK(a.parity() == Parity::Even);
    CHECK((a + b).parity() == Parity::Neither);
}

TEST_CASE("analytic series expansions") {
    XSeries c = XSeries::cosh(Rat(1), 4);
    CHECK(c.coeff(0) == Rat(1));
    CHECK(c.coeff(2) == Rat(1, 2));
    CHECK(c.coeff(4) == Rat(1, 24));
    CHECK(c.coeff(1) == Rat(0));

    XSeries t = XSeries::tanh(Rat(1, 4), 3);
    CHECK(t.coeff(1) == Rat(1, 4));
    CHECK(t.coeff(3) == Rat(-1, 192));

    QSeries phi = QSeries::euler_phi(10);  // order q^5
    CHECK(phi.coeff2(0) == Rat(1));
    CHECK(phi.coeff2(2) == Rat(-1));
    CHECK(phi.coeff2(4) == Rat(-1));
    CHECK(phi.coeff2(6) == Rat(0));
    CHECK(phi.coeff2(10) == Rat(1));
}

TEST_CASE("euler phi times partition series is one") {
    int order2 = 40;
    QSeries phi = QSeries::euler_phi(order2);
    QSeries parts = phi.inverse();
    // sanity: partition numbers
    CHECK(parts.coeff2(8) == Rat(5));
    CHECK(parts.coeff2(20) == Rat(42));
    QSeries prod = phi * parts;
    CHECK(prod == QSeries::one(order2));
}

TEST_CASE("qseries multiplication associative and commutative (random)") {
    std::mt19937_64 rng(7);
    auto rnd = [&](int order2) {
        QSeries s(order2);
        for (int i = 0; i <= order2; ++i)
            s.add2(i, Rat((long long)(rng() % 11) - 5, 1 + (long long)(rng() % 3)));
        return s;
    };
    for (int it = 0; it < 20; ++it) {
        QSeries a = rnd(16), b = rnd(16), c = rnd(16);
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

namespace {

Quasipoly random_qp(std::mt19937_64& rng) {
    std::vector<QTerm> ts;
    int nterms = 1 + rng() % 3;
    for (int i = 0; i < nterms; ++i) {
        Rat alpha((long long)(rng() % 7) - 3, 1 + (long long)(rng() % 2));
        std::vector<Rat> cs;
        int deg = rng() % 3;
        for (int d = 0; d <= deg; ++d) cs.push_back(Rat((long long)(rng() % 9) - 4));
        ts.push_back(QTerm{Poly(cs), alpha, (rng() % 2) ? QKind::Cosh : QKind::Sinh});
    }
    return Quasipoly(std::move(ts));
}

}  // namespace

TEST_CASE("quasipoly normalization preserves expansion") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        std::vector<QTerm> raw;
        Quasipoly sum;
        int n = 1 + rng() % 4;
        for (int i = 0; i < n; ++i) {
            Quasipoly t = random_qp(rng);
            sum += t;
            for (auto& term : t.terms()) raw.push_back(term);
        }
        // expansion of the normalized sum equals the term-by-term expansion
        XSeries direct(12);
        for (const auto& t : raw) {
            XSeries fn = t.kind == QKind::Cosh ? XSeries::cosh(t.alpha, 12)
                                               : XSeries::sinh(t.alpha, 12);
            direct += XSeries::from_poly(t.p, 12) * fn;
        }
        CHECK(sum.expand(12) == direct);
    }
}

TEST_CASE("quasipoly product expands correctly") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        Quasipoly a = random_qp(rng), b = random_qp(rng);
        CHECK((a * b).expand(10) == a.expand(10) * b.expand(10));
    }
}

TEST_CASE("minimal annihilator on stated examples") {
    bool triv = false;
    Poly b1 = minimal_annihilator(Quasipoly::cosh_term(Poly(Rat(1)), Rat(1)), Parity::Even, &triv);
    CHECK(b1 == Poly({Rat(-1), Rat(0), Rat(1)}));
    CHECK(!triv);

    Poly b2 = minimal_annihilator(Quasipoly::cosh_term(Poly(Rat(1)), Rat(0)), Parity::Odd);
    CHECK(b2 == Poly::x());

    Poly b3 = minimal_annihilator(Quasipoly::sinh_term(Poly::x(), Rat(1, 2)), Parity::Even);
    Poly f({Rat(-1, 4), Rat(0), Rat(1)});
    CHECK(b3 == f * f);

    CHECK(minimal_annihilator(Quasipoly(), Parity::Even, &triv) == Poly(Rat(1)));
    CHECK(triv);
}

TEST_CASE("minimal annihilator kills F and is minimal over divisors") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        Quasipoly F = random_qp(rng);
        if (F.is_zero()) continue;
        for (Parity par : {Parity::Even, Parity::Odd}) {
            Poly b = minimal_annihilator(F, par);
            CHECK(F.apply_ode(b).is_zero());
            CHECK((b.parity() == par));
            // maximal proper divisors of matching parity must fail
            std::map<Rat, int> mult;
            int zexp = 0;
            for (int i = 0; i <= b.degree() && b.coeff(i).is_zero(); ++i) zexp = i + 1;
            for (const auto& t : F.terms())
                if (!t.alpha.is_zero()) mult[t.alpha] = 1;
            for (const auto& [alpha, unused] : mult) {
                Poly q, r;
                Poly::divmod(b, Poly({alpha * alpha * Rat(-1), Rat(0), Rat(1)}), q, r);
                REQUIRE(r.is_zero());
                CHECK(!F.apply_ode(q).is_zero());
            }
            if (zexp >= 2) {
                Poly q, r;
                Poly::divmod(b, Poly::monomial(2), q, r);
                REQUIRE(r.is_zero());
                CHECK(!F.apply_ode(q).is_zero());
            }
        }
    }
}
