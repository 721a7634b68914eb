#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "epchar/dirac.hpp"
#include "epchar/epcore.hpp"
#include "epchar/errors.hpp"
#include "epchar/io.hpp"

using namespace epchar;

namespace {

Weight w1(std::int64_t c) { return Weight({c}); }

VirtualCharacter chr(int rank, std::initializer_list<std::pair<Weight, int>> terms) {
    VirtualCharacter c(rank);
    for (const auto& [w, m] : terms) c.add_term(w, m);
    return c;
}

}  // namespace

TEST_CASE("datum construction on the fixtures") {
    CartanDatum sl2 = builtin_datum("sl2R");
    CHECK(sl2.rho == w1(2));    // true weight 1
    CHECK(sl2.rho_k == w1(0));
    CHECK(sl2.p_char == chr(1, {{w1(4), 1}, {w1(-4), 1}}));  // true weights +-2
    CHECK(sl2.inner(sl2.rho, sl2.rho) == Rational(1, 2));

    CartanDatum su2 = builtin_datum("su2");
    CHECK(su2.rho == su2.rho_k);
    CHECK(su2.p_char.empty());

    CartanDatum sp4 = builtin_datum("sp4R");
    CHECK(sp4.weyl_order() == 2);
    CHECK(sp4.noncompact_positive_roots().size() == 3);
    CHECK(sp4.rho == Weight({4, 2}));      // true (2, 1)
    CHECK(sp4.rho_n == Weight({3, 3}));    // true (3/2, 3/2)

    RawCartanDatum bad;
    bad.rank = 1;
    bad.name = "bad";
    bad.positive_roots = {w1(0)};
    bad.root_class = {RootClass::noncompact};
    bad.gram = RationalMatrix(1, 1);
    bad.gram(0, 0) = 1;
    CHECK_THROWS_AS(build_cartan_datum(bad), calc_error);

    RawCartanDatum asym;
    asym.rank = 2;
    asym.name = "asym";
    asym.positive_roots = {Weight({2, 0})};
    asym.root_class = {RootClass::compact};
    asym.gram = RationalMatrix(2, 2);
    asym.gram(0, 1) = 1;
    try {
        build_cartan_datum(asym);
        CHECK(false);
    } catch (const calc_error& e) {
        CHECK(e.kind() == errc::gram_not_symmetric);
    }
}

TEST_CASE("delta characters") {
    CartanDatum sl2 = builtin_datum("sl2R");
    DeltaCharacters d = delta_characters(sl2);
    CHECK(d.delta_c == VirtualCharacter::trivial(1));
    CHECK(d.delta_n == chr(1, {{w1(0), 1}, {w1(-4), -1}}));
    CHECK(d.delta_full == d.delta_n);

    CartanDatum su2 = builtin_datum("su2");
    DeltaCharacters e = delta_characters(su2);
    CHECK(e.delta_n == VirtualCharacter::trivial(1));
    CHECK(e.delta_c == chr(1, {{w1(0), 1}, {w1(-4), -1}}));

    RawCartanDatum empty;
    empty.rank = 1;
    empty.name = "torus";
    empty.gram = RationalMatrix(1, 1);
    empty.gram(0, 0) = 1;
    DeltaCharacters f = delta_characters(build_cartan_datum(empty));
    CHECK(f.delta_c == VirtualCharacter::trivial(1));
    CHECK(f.delta_n == VirtualCharacter::trivial(1));
    CHECK(f.delta_full == VirtualCharacter::trivial(1));
}

TEST_CASE("Euler-Poincare indices on SL(2,R)") {
    CartanDatum d = builtin_datum("sl2R");
    VirtualCharacter triv = VirtualCharacter::trivial(1);
    CHECK(ep_index(d, triv, triv) == 2);
    CHECK(ep_index(d, triv, VirtualCharacter::exponential(w1(4))) == -1);
    CHECK(ep_index(d, triv, VirtualCharacter::exponential(w1(-4))) == -1);
    CHECK_THROWS_AS(ep_index(d, chr(1, {{w1(0), -1}}), triv), calc_error);

    // half versions, p_minus = e^{-2 true}
    VirtualCharacter p_minus = VirtualCharacter::exponential(w1(-4));
    CHECK(ep_index_half(d, p_minus, triv, triv) == 1);
    CHECK(ep_index_half(d, p_minus, triv, VirtualCharacter::exponential(w1(-4))) == -1);
    // empty p_minus degenerates to the plain multiplicity
    CHECK(ep_index_half(d, VirtualCharacter(1), VirtualCharacter::exponential(w1(4)),
                        VirtualCharacter::exponential(w1(4))) == 1);
    CHECK_THROWS_AS(ep_index_half(d, VirtualCharacter::exponential(w1(2)), triv, triv),
                    calc_error);  // not a subcharacter of p
}

TEST_CASE("ep index degenerates to a plain constant term when K is a torus") {
    CartanDatum d = builtin_datum("sl2R");
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::int64_t> coord(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        VirtualCharacter tau(1), sigma(1);
        tau.add_term(w1(coord(rng)), 1 + static_cast<int>(rng() % 3));
        sigma.add_term(w1(coord(rng)), 1 + static_cast<int>(rng() % 3));
        Int direct = constant_term(
            tensor(tensor(exterior_alternating(d.p_char), tau), dual(sigma)));
        CHECK(ep_index(d, tau, sigma) == direct);
    }
}

TEST_CASE("theta evaluation") {
    CartanDatum d = builtin_datum("sl2R");
    RegularCharacter that = make_regular_character(d, w1(6));  // true weight 3
    for (double theta : {0.3, 0.9, 2.2}) {
        std::complex<double> i(0, 1);
        std::complex<double> want =
            std::exp(3.0 * i * theta) / (1.0 - std::exp(-2.0 * i * theta));
        std::complex<double> got = theta_evaluate(d, that, TorusPoint({theta}));
        CHECK(std::abs(got - want) < 1e-12);
    }
    CHECK_THROWS_AS(theta_evaluate(d, that, TorusPoint({0.0})), calc_error);

    // n / 'Delta recovers the Weyl character up to the e^{-rho} phase
    CartanDatum su2 = builtin_datum("su2");
    VirtualCharacter chi = irreducible_character(su2, w1(4));
    VirtualCharacter lhs = tensor(chi, delta_characters(su2).delta_full);
    VirtualCharacter rhs = tensor(VirtualCharacter::exponential(-su2.rho),
                                  alternating_orbit_sum(su2, w1(4) + su2.rho));
    CHECK(lhs == rhs);
}

TEST_CASE("discrete coefficients on SL(2,R)") {
    CartanDatum d = builtin_datum("sl2R");
    VirtualCharacter tau = VirtualCharacter::exponential(w1(6));  // true weight 3
    CHECK(discrete_coefficient(d, tau, make_regular_character(d, w1(6))) == 1);
    CHECK(discrete_coefficient(d, tau, make_regular_character(d, w1(2))) == -1);
    CHECK(discrete_coefficient(d, tau, make_regular_character(d, w1(14))) == 0);
}

TEST_CASE("discrete expansion") {
    CartanDatum d = builtin_datum("sl2R");
    VirtualCharacter tau = VirtualCharacter::exponential(w1(6));
    DiscreteExpansion ex = discrete_expansion(d, tau);
    REQUIRE(ex.coefficients.size() == 2);
    CHECK(ex.coefficients.at(w1(6)) == 1);
    CHECK(ex.coefficients.at(w1(2)) == -1);
    CHECK(ex.remainder.empty());

    DiscreteExpansion none = discrete_expansion(d, VirtualCharacter(1));
    CHECK(none.coefficients.empty());
    CHECK(none.remainder.empty());

    CartanDatum su2 = builtin_datum("su2");
    for (std::int64_t l = 0; l <= 4; ++l) {
        VirtualCharacter chi = irreducible_character(su2, w1(2 * l));
        DiscreteExpansion e2 = discrete_expansion(su2, chi);
        REQUIRE(e2.coefficients.size() == 1);
        CHECK(e2.coefficients.begin()->first == w1(2 * l) + su2.rho);
        CHECK(e2.coefficients.begin()->second == 1);
        CHECK(e2.remainder.empty());
    }

    // the singular weight 0 lands in the remainder on the compact datum
    VirtualCharacter odd = VirtualCharacter::exponential(w1(2));
    DiscreteExpansion e3 = discrete_expansion(su2, odd);
    VirtualCharacter recon = e3.remainder;
    for (const auto& [that, c] : e3.coefficients)
        recon = linear_combination(recon, discrete_series_numerator(su2, that), 1, c);
    CHECK(recon == tensor(odd, delta_characters(su2).delta_full));
}

TEST_CASE("orbital integrals") {
    CartanDatum d = builtin_datum("sl2R");
    TorusPoint t({0.7});
    CHECK(std::abs(orbital_regular(d, VirtualCharacter::trivial(1), t) - 1.0) < 1e-12);
    std::complex<double> i(0, 1);
    CHECK(std::abs(orbital_regular(d, VirtualCharacter::exponential(w1(6)), t) -
                   std::exp(3.0 * i * 0.7)) < 1e-12);
    CHECK_THROWS_AS(orbital_regular(d, VirtualCharacter::trivial(1), TorusPoint({0.0})),
                    calc_error);

    CartanDatum su2 = builtin_datum("su2");
    std::complex<double> got = orbital_regular(su2, irreducible_character(su2, w1(2)), t);
    CHECK(std::abs(got - (std::exp(i * 0.7) + std::exp(-i * 0.7))) < 1e-12);
}

TEST_CASE("general orbital formula") {
    RationalMatrix gram(1, 1);
    gram(0, 0) = Rational(1, 8);
    CHECK(orbital_general_formula(3.5, 1.0, 1, w1(2), {}, gram) == std::complex<double>(3.5));
    std::complex<double> v1 = orbital_general_formula(1.0, 2.0, 3, w1(2), {w1(4)}, gram);
    // <rho, alpha> = 2 * 1/8 * 4 = 1, so the value is 1 * (1/2) * 3 * 1
    CHECK(std::abs(v1 - std::complex<double>(1.5)) < 1e-12);
    std::complex<double> v2 = orbital_general_formula(1.0, 4.0, 3, w1(2), {w1(4)}, gram);
    CHECK(std::abs(v1 - 2.0 * v2) < 1e-12);
    CHECK_THROWS_AS(orbital_general_formula(1.0, 0.0, 1, w1(2), {}, gram), calc_error);
}

TEST_CASE("pseudo orbital integrals") {
    CartanDatum d = builtin_datum("sl2R");
    std::complex<double> i(0, 1);
    for (double theta : {0.4, 1.3}) {
        TorusPoint t({theta});
        std::complex<double> want =
            std::exp(2.0 * i * theta) / (std::exp(i * theta) - std::exp(-i * theta));
        CHECK(std::abs(pseudo_orbital(d, VirtualCharacter::exponential(w1(4)), t) - want) <
              1e-12);

        auto [plus, minus] = half_spin_characters(d.noncompact_positive_roots(), 1);
        VirtualCharacter diff = linear_combination(plus, minus, 1, -1);
        CHECK(std::abs(pseudo_orbital(d, diff, t) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(pseudo_orbital(d, VirtualCharacter::trivial(1), TorusPoint({0.0})),
                    calc_error);
}

TEST_CASE("casimir shift") {
    CartanDatum su2 = builtin_datum("su2");
    CHECK(casimir_shift(su2, w1(0)) == Rational(0));

    CartanDatum sl2 = builtin_datum("sl2R");
    CHECK(casimir_shift(sl2, w1(0)) == Rational(-1, 2));

    // scaling the form scales the shift
    CartanDatum scaled = sl2;
    scaled.gram = sl2.gram.scaled(Rational(3));
    CHECK(casimir_shift(scaled, w1(0)) == Rational(-3, 2));

    CHECK_THROWS_AS(casimir_shift(su2, w1(-2)), calc_error);
}

TEST_CASE("Harish-Chandra constant") {
    CHECK(harish_chandra_constant({0, 0, 0, 1, 2.5}) == doctest::Approx(2.5));
    double v = harish_chandra_constant({1, 1, 1, 1, 1.0});
    CHECK(v == doctest::Approx(-2.0 * std::numbers::pi * std::sqrt(2.0)));
    CHECK(harish_chandra_constant({2, 1, 0, 4, 1.0}) ==
          doctest::Approx(2.0 * harish_chandra_constant({2, 1, 0, 2, 1.0})));
    CHECK_THROWS_AS(harish_chandra_constant({0, 0, 0, 1, -1.0}), calc_error);
}

TEST_CASE("Weyl integration factor") {
    CartanDatum sl2 = builtin_datum("sl2R");
    for (double theta : {0.2, 1.0, 2.9})
        CHECK(weyl_integration_factor(sl2, TorusPoint({theta})) ==
              doctest::Approx(4.0 * std::sin(theta) * std::sin(theta)).epsilon(1e-12));
    CHECK(weyl_integration_factor(sl2, TorusPoint({0.0})) == doctest::Approx(0.0));

    RawCartanDatum empty;
    empty.rank = 1;
    empty.name = "torus";
    empty.gram = RationalMatrix(1, 1);
    empty.gram(0, 0) = 1;
    CHECK(weyl_integration_factor(build_cartan_datum(empty), TorusPoint({0.5})) ==
          doctest::Approx(1.0));
}

TEST_CASE("split Cartan factors") {
    SplitCartanDatum sd =
        make_split_datum(1, {SplitRoot{{Rational(2)}, Weight()}}, {}, CartanDatum{});
    REQUIRE(sd.rho_p.size() == 1);
    CHECK(sd.rho_p[0] == Rational(1));
    for (double s : {0.3, -0.8, 1.7}) {
        CHECK(delta_plus_evaluate(sd, {s}, TorusPoint{}) ==
              doctest::Approx(2.0 * std::abs(std::sinh(s))).epsilon(1e-12));
        std::complex<double> nf = normalized_orbital_factor(sd, {s}, TorusPoint{});
        CHECK(std::abs(nf - std::complex<double>(2.0 * std::sinh(s))) < 1e-12);
    }
    CHECK(delta_plus_evaluate(sd, {0.0}, TorusPoint{}) == doctest::Approx(0.0));
    CHECK(std::abs(normalized_orbital_factor(sd, {0.0}, TorusPoint{})) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(delta_plus_evaluate(sd, {0.1, 0.2}, TorusPoint{}), calc_error);

    // no non-imaginary roots: empty product, and rho_P derives to zero
    SplitCartanDatum flat = make_split_datum(1, {}, {}, CartanDatum{});
    CHECK(delta_plus_evaluate(flat, {0.5}, TorusPoint{}) == doctest::Approx(1.0));

    // rank-0 split part embeds a compact Cartan: the product over the
    // imaginary roots of (1 - e^{-a}(t))
    CartanDatum su2 = builtin_datum("su2");
    SplitCartanDatum comp = make_split_datum(0, {}, {}, su2);
    TorusPoint t({0.9});
    std::complex<double> want = evaluate(delta_characters(su2).delta_full, t);
    CHECK(std::abs(normalized_orbital_factor(comp, {}, t) - want) < 1e-12);

    CHECK_THROWS_AS(make_split_datum(1, {SplitRoot{{Rational(2)}, Weight()}},
                                     {Rational(5)}, CartanDatum{}),
                    calc_error);
}

TEST_CASE("Dirac square models") {
    PolarizedSpace sp{1};
    for (int dim = 1; dim <= 5; ++dim) {
        DiracReport rep = dirac_square_check(sl2_dirac_model(dim), sp);
        CHECK(rep.max_defect == Rational(0));
        CHECK(rep.defect_plus == Rational(0));
        CHECK(rep.defect_minus == Rational(0));
        CHECK(rep.lemma_scalar_ok);
        CHECK(rep.ok);
    }

    // negative control: a wrong Casimir must show up as a nonzero defect
    DiracModel wrong = sl2_dirac_model(2);
    wrong.pi_casimir = RationalMatrix::identity(2).scaled(Rational(7));
    CHECK(dirac_square_check(wrong, sp).max_defect != Rational(0));

    // matrices that do not close under the k-action are rejected
    DiracModel bad = sl2_dirac_model(2);
    bad.pi_x2 = RationalMatrix::identity(2);
    CHECK_THROWS_AS(dirac_square_check(bad, sp), calc_error);

    CHECK_THROWS_AS(dirac_square_check(sl2_dirac_model(2), PolarizedSpace{2}), calc_error);
}

TEST_CASE("explicit matrix oracle for the Dirac square (4x4 and 6x6 blocks)") {
    // dims 2 and 3, built from first principles with Gaussian-rational blocks
    PolarizedSpace sp{1};
    auto G = [](int num, int den = 1) { return GaussianRational(Rational(num, den)); };
    auto Gi = [](int num, int den = 1) {
        return GaussianRational(Rational(0), Rational(num, den));
    };

    GaussianMatrix cx1(2, 2), cx2(2, 2), sj(2, 2);
    cx1(0, 1) = G(2);
    cx1(1, 0) = G(-1, 2);
    cx2(0, 1) = Gi(2);
    cx2(1, 0) = Gi(1, 2);
    sj(0, 0) = Gi(-1);
    sj(1, 1) = Gi(1);

    for (int n : {2, 3}) {
        // pi from the ladder formulas, written out here on purpose
        RationalMatrix h(n, n), e(n, n), f(n, n);
        for (int j = 0; j < n; ++j) {
            h(j, j) = Rational(n - 1 - 2 * j);
            if (j + 1 < n) {
                f(j + 1, j) = 1;
                e(j, j + 1) = Rational((j + 1) * (n - 1 - j));
            }
        }
        RationalMatrix x2 = e + f;
        RationalMatrix pj = e - f;

        int dim = 2 * n;
        GaussianMatrix dirac(dim, dim), jtot(dim, dim);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < 2; ++d) {
                        GaussianRational dv = GaussianRational(h(a, c)) * cx1(b, d) +
                                              GaussianRational(x2(a, c)) * cx2(b, d);
                        dirac(a * 2 + b, c * 2 + d) = dv;
                        GaussianRational jv(Rational(0));
                        if (b == d) jv = jv + GaussianRational(pj(a, c));
                        if (a == c) jv = jv + sj(b, d);
                        jtot(a * 2 + b, c * 2 + d) = jv;
                    }

        GaussianMatrix d2 = dirac * dirac;
        GaussianMatrix rhs = (jtot * jtot).scaled(G(-1));
        for (int i = 0; i < dim; ++i)
            rhs(i, i) = rhs(i, i) - G(n * n - 1) - G(1);  // pi(C), B(rho)=1, B(rho_K)=0
        CHECK(d2 == rhs);
    }
}
