#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epchar/clifford.hpp"
#include "epchar/errors.hpp"
#include "epchar/io.hpp"

using namespace epchar;

namespace {

Weight w1(std::int64_t c) { return Weight({c}); }

// Brute-force rewrite oracle: products of generator words reduced with the
// bare relations g g -> 0, h g -> -g h (+ 2 if the slots are paired). Kept
// independent of the bitmask kernel on purpose.
struct Word {
    std::vector<int> slots;
    Rational coeff;
};

std::map<Blade, Rational> rewrite_oracle(const PolarizedSpace& sp, std::vector<int> word) {
    std::vector<Word> work{{std::move(word), Rational(1)}};
    std::map<Blade, Rational> done;
    while (!work.empty()) {
        Word cur = work.back();
        work.pop_back();
        bool reduced = false;
        for (std::size_t i = 0; i + 1 < cur.slots.size(); ++i) {
            int a = cur.slots[i], b = cur.slots[i + 1];
            if (a < b) continue;
            reduced = true;
            if (a == b) break;  // isotropic square, the term dies
            // swap with sign, plus the contraction when paired
            Word swapped = cur;
            std::swap(swapped.slots[i], swapped.slots[i + 1]);
            swapped.coeff = -swapped.coeff;
            work.push_back(std::move(swapped));
            if (sp.partner(a) == b) {
                Word contracted;
                contracted.coeff = cur.coeff * 2;
                for (std::size_t j = 0; j < cur.slots.size(); ++j)
                    if (j != i && j != i + 1) contracted.slots.push_back(cur.slots[j]);
                work.push_back(std::move(contracted));
            }
            break;
        }
        if (reduced) continue;
        Blade b = 0;
        for (int s : cur.slots) b |= Blade(1) << s;
        done[b] += cur.coeff;
        if (done[b] == 0) done.erase(b);
    }
    return done;
}

CliffordElement word_product(const PolarizedSpace& sp, const std::vector<int>& word) {
    CliffordElement x = CliffordElement::scalar(sp, 1);
    for (int s : word) x = mul(sp, x, CliffordElement::generator(sp, s));
    return x;
}

}  // namespace

TEST_CASE("generator products against the rewrite oracle") {
    PolarizedSpace sp{2};
    CHECK(word_product(sp, {0, 0}).empty());  // e1 e1 = 0

    CliffordElement anti = mul(sp, CliffordElement::e(sp, 1), CliffordElement::f(sp, 1)) +
                           mul(sp, CliffordElement::f(sp, 1), CliffordElement::e(sp, 1));
    CHECK(anti == CliffordElement::scalar(sp, 2));  // q(e1,f1) = -1

    // (e1 f1)(e1 f1): frozen from the oracle
    auto oracle = rewrite_oracle(sp, {0, 2, 0, 2});
    CliffordElement expect(sp.m);
    for (const auto& [b, c] : oracle) expect.add_term(b, c);
    CliffordElement ef = word_product(sp, {0, 2});
    CHECK(mul(sp, ef, ef) == expect);
    CHECK(expect == ef.scaled(2));  // the reduction lands on +2 e1 f1

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        PolarizedSpace space{1 + static_cast<int>(rng() % 3)};
        std::vector<int> word;
        int len = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            word.push_back(static_cast<int>(rng() % space.slots()));
        CliffordElement got = word_product(space, word);
        CliffordElement want(space.m);
        for (const auto& [b, c] : rewrite_oracle(space, word)) want.add_term(b, c);
        CHECK(got == want);
    }
}

TEST_CASE("clifford relations exhaustively") {
    for (int m = 1; m <= 5; ++m) {
        PolarizedSpace sp{m};
        for (int a = 0; a < sp.slots(); ++a)
            for (int b = 0; b < sp.slots(); ++b) {
                CliffordElement u = CliffordElement::generator(sp, a);
                CliffordElement v = CliffordElement::generator(sp, b);
                Rational q = bilinear_q(sp, u, v);
                CHECK(mul(sp, u, v) + mul(sp, v, u) == CliffordElement::scalar(sp, -2 * q));
            }
    }
}

TEST_CASE("spin action rules") {
    PolarizedSpace sp{1};
    SpinVector vac = SpinVector::vacuum(sp);
    SpinVector f1 = SpinVector::basis(sp, 1);

    CHECK(spin_apply(sp, CliffordElement::f(sp, 1), vac) == f1);
    CHECK(spin_apply(sp, CliffordElement::e(sp, 1), vac).empty());
    // contraction carries the coefficient 2 forced by q(e1, f1) = -1,
    // so that the rules assemble to a genuine module action
    CHECK(spin_apply(sp, CliffordElement::e(sp, 1), f1) == vac.scaled(2));
}

TEST_CASE("spin action is a module action") {
    std::mt19937_64 rng(29);
    for (int m = 1; m <= 4; ++m) {
        PolarizedSpace sp{m};
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<int> wx, wy;
            for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i)
                wx.push_back(static_cast<int>(rng() % sp.slots()));
            for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i)
                wy.push_back(static_cast<int>(rng() % sp.slots()));
            CliffordElement x = word_product(sp, wx);
            CliffordElement y = word_product(sp, wy);
            CliffordElement xy = mul(sp, x, y);
            for (std::uint32_t basis = 0; basis < (1u << m); ++basis) {
                SpinVector s = SpinVector::basis(sp, basis);
                CHECK(spin_apply(sp, xy, s) == spin_apply(sp, x, spin_apply(sp, y, s)));
            }
        }
    }
}

TEST_CASE("vectors act with square -q(v)") {
    PolarizedSpace sp{2};
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        CliffordElement v(sp.m);
        for (int s = 0; s < sp.slots(); ++s)
            if (rng() % 2) v.add_term(Blade(1) << s, Rational(1 + static_cast<int>(rng() % 5), 2));
        if (v.empty()) continue;
        Rational q = quadratic_q(sp, v);
        for (std::uint32_t basis = 0; basis < 4; ++basis) {
            SpinVector s = SpinVector::basis(sp, basis);
            CHECK(spin_apply(sp, v, spin_apply(sp, v, s)) == s.scaled(-q));
        }
    }
}

TEST_CASE("conjugation: identity, reflection composite, center") {
    PolarizedSpace sp{1};
    CliffordElement e1 = CliffordElement::e(sp, 1);
    CliffordElement f1 = CliffordElement::f(sp, 1);
    CliffordElement one = CliffordElement::scalar(sp, 1);

    CHECK(conjugate(sp, one, one, e1) == e1);

    // x = (e1 + f1)(e1 - f1); the composed reflections send e1 to -e1.
    std::vector<CliffordElement> factors{e1 + f1, e1 - f1};
    CHECK(conjugate_by_vectors(sp, factors, e1) == e1.scaled(-1));
    CHECK(conjugate_by_vectors(sp, factors, f1) == f1.scaled(-1));

    // matrix oracle on span{e1, f1}: r_w(v) = v - 2 q(v,w)/q(w) w
    auto reflect = [&](const CliffordElement& w, const CliffordElement& v) {
        Rational scale = Rational(2) * bilinear_q(sp, v, w) / quadratic_q(sp, w);
        return v - w.scaled(scale);
    };
    for (const CliffordElement& v : {e1, f1, e1 + f1.scaled(Rational(3, 2))}) {
        CliffordElement via_matrices = reflect(e1 + f1, reflect(e1 - f1, v));
        CHECK(conjugate_by_vectors(sp, factors, v) == via_matrices);
    }

    // -x acts identically
    std::vector<CliffordElement> neg{(e1 + f1).scaled(-1), e1 - f1};
    CHECK(conjugate_by_vectors(sp, neg, e1) == e1.scaled(-1));

    CHECK_THROWS_AS(conjugate_by_vectors(sp, {e1}, f1), calc_error);  // isotropic factor

    // an invertible element outside Pin drags the result out of the span
    CliffordElement x = one + e1;  // inverse is 1 - e1
    try {
        conjugate(sp, x, one - e1, f1);
        CHECK(false);
    } catch (const calc_error& e) {
        CHECK(e.kind() == errc::not_vector);
    }
}

TEST_CASE("conjugation by even products preserves q") {
    std::mt19937_64 rng(37);
    PolarizedSpace sp{3};
    std::vector<CliffordElement> gens;
    for (int s = 0; s < sp.slots(); ++s) gens.push_back(CliffordElement::generator(sp, s));
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<CliffordElement> factors;
        for (int k = 0; k < 2; ++k) {
            int i = 1 + static_cast<int>(rng() % sp.m);
            CliffordElement v = CliffordElement::e(sp, i).scaled(Rational(1 + rng() % 3)) +
                                CliffordElement::f(sp, i).scaled(Rational(1 + rng() % 3));
            factors.push_back(v);
        }
        std::vector<CliffordElement> images;
        for (const auto& g : gens) images.push_back(conjugate_by_vectors(sp, factors, g));
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j)
                CHECK(bilinear_q(sp, images[i], images[j]) == bilinear_q(sp, gens[i], gens[j]));
    }
}

TEST_CASE("half-spin characters") {
    auto [p0, m0] = half_spin_characters({}, 1);
    CHECK(p0 == VirtualCharacter::trivial(1));
    CHECK(m0.empty());

    auto [p1, m1] = half_spin_characters({w1(2)}, 1);
    CHECK(p1 == VirtualCharacter::exponential(w1(1)));
    CHECK(m1 == VirtualCharacter::exponential(w1(-1)));

    auto [p2, m2] = half_spin_characters({w1(2), w1(2)}, 1);
    VirtualCharacter expect_p(1), expect_m(1);
    expect_p.add_term(w1(2), 1);
    expect_p.add_term(w1(-2), 1);
    expect_m.add_term(w1(0), 2);
    CHECK(p2 == expect_p);
    CHECK(m2 == expect_m);

    for (int m = 1; m <= 6; ++m) {
        std::vector<Weight> mu(m, w1(4));
        auto [plus, minus] = half_spin_characters(mu, 1);
        CHECK(plus.dimension() == (Int(1) << (m - 1)));
        CHECK(minus.dimension() == (Int(1) << (m - 1)));
    }
}

TEST_CASE("epsilon weight") {
    CHECK(epsilon_weight({}, 1) == w1(0));
    CHECK(epsilon_weight({w1(2)}, 1) == w1(1));
    CHECK(epsilon_weight({w1(2), w1(4)}, 1) == w1(3));
}

TEST_CASE("spin square report") {
    SpinSquareReport r1 = spin_square_report({w1(2)}, 1);
    VirtualCharacter lhs(1), rhs(1);
    lhs.add_term(w1(2), 1);
    lhs.add_term(w1(0), -2);
    lhs.add_term(w1(-2), 1);
    rhs.add_term(w1(0), 2);
    rhs.add_term(w1(2), -1);
    rhs.add_term(w1(-2), -1);
    CHECK(r1.lhs == lhs);
    CHECK(r1.rhs == rhs);
    CHECK(r1.sign == -1);
    CHECK(r1.equal);

    SpinSquareReport r0 = spin_square_report({}, 1);
    CHECK(r0.sign == 1);
    CHECK(r0.equal);
    CHECK(r0.lhs == VirtualCharacter::trivial(1));

    CHECK(spin_square_report({w1(2), w1(4)}, 1).equal);
    CHECK(spin_square_report({w1(2), w1(4)}, 1).sign == 1);
}

TEST_CASE("epsilon twist report") {
    EpsilonTwistReport r1 = epsilon_twist_report({w1(2)}, 1);
    CHECK(r1.flipped);
    CHECK(r1.parity_matched);
    CHECK(r1.s_plus_twisted == VirtualCharacter::exponential(w1(2)));
    CHECK(r1.s_minus_twisted == VirtualCharacter::trivial(1));

    EpsilonTwistReport r2 = epsilon_twist_report({w1(2), w1(4)}, 1);
    CHECK_FALSE(r2.flipped);
    CHECK(r2.parity_matched);

    EpsilonTwistReport r0 = epsilon_twist_report({}, 1);
    CHECK(r0.parity_matched);
}

TEST_CASE("spinoriality and orientation") {
    CartanDatum sl2 = builtin_datum("sl2R");
    SpinorialityReport rep = spinoriality(sl2);
    CHECK(rep.lifts);
    CHECK(rep.epsilon == w1(2));  // rho_n, true weight 1

    // p-weights +-1 true: epsilon is half-integral, needs the double cover
    RawCartanDatum raw;
    raw.rank = 1;
    raw.name = "halfspin";
    raw.positive_roots = {w1(2)};
    raw.root_class = {RootClass::noncompact};
    raw.gram = RationalMatrix(1, 1);
    raw.gram(0, 0) = Rational(1, 2);
    CHECK_FALSE(spinoriality(build_cartan_datum(raw)).lifts);

    CHECK(spinoriality(builtin_datum("su2")).lifts);  // no noncompact roots
    CHECK_FALSE(spinoriality(builtin_datum("sp4R")).lifts);

    CHECK(orientation_preserving(sl2));
    for (const std::string& name : builtin_datum_names())
        CHECK(orientation_preserving(builtin_datum(name)));
    VirtualCharacter unpaired(1);
    unpaired.add_term(w1(2), 1);
    CHECK_FALSE(orientation_from_p_char(unpaired));
}

TEST_CASE("parity of the action") {
    PolarizedSpace sp{3};
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Blade blade = rng() & ((Blade(1) << sp.slots()) - 1);
        CliffordElement x(sp.m);
        x.add_term(blade, 1);
        int xpar = std::popcount(blade) % 2;
        for (std::uint32_t basis = 0; basis < 8; ++basis) {
            SpinVector out = spin_apply(sp, x, SpinVector::basis(sp, basis));
            for (const auto& [subset, c] : out.terms)
                CHECK(static_cast<int>(std::popcount(subset) % 2) ==
                      (std::popcount(basis) + xpar) % 2);
        }
    }
}
