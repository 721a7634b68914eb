#include "epchar/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "epchar/charlat.hpp"
#include "epchar/clifford.hpp"
#include "epchar/dirac.hpp"
#include "epchar/epcore.hpp"
#include "epchar/io.hpp"

namespace epchar {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

CliffordElement random_clifford(const PolarizedSpace& sp, Rng& rng) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<Blade> blade(0, (Blade(1) << sp.slots()) - 1);
    CliffordElement x(sp.m);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) x.add_term(blade(rng), random_rational(rng));
    return x;
}

VirtualCharacter random_effective(int rank, Rng& rng, int max_terms = 4, int coord_range = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coord(-coord_range, coord_range);
    std::uniform_int_distribution<int> mult(1, 3);
    VirtualCharacter c(rank);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Weight w = Weight::zero(rank);
        for (int j = 0; j < rank; ++j) w.coords[j] = coord(rng);
        c.add_term(w, mult(rng));
    }
    return c;
}

// W(K)-invariant effective character: a random one symmetrized over the
// datum's Weyl group (ep_index expects genuine K-class functions).
VirtualCharacter random_invariant_effective(const CartanDatum& d, Rng& rng) {
    VirtualCharacter base = random_effective(d.rank, rng, 3, 4);
    VirtualCharacter sym(d.rank);
    for (const WeylElement& w : d.weyl)
        for (const auto& [wt, m] : base.terms()) sym.add_term(w.apply(wt), m);
    return sym;
}

Weight rank1(std::int64_t doubled) { return Weight({doubled}); }

struct Checker {
    std::vector<CheckResult> out;
    void record(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    }
};

std::string show(std::size_t failed, std::size_t total) {
    std::ostringstream ss;
    ss << (total - failed) << "/" << total << " cases";
    return ss.str();
}

// ---- criterion 1: Clifford relations ------------------------------------

CheckResult check_clifford_relations() {
    std::size_t failures = 0, total = 0;
    for (int m = 1; m <= 5; ++m) {
        PolarizedSpace sp{m};
        for (int a = 0; a < sp.slots(); ++a)
            for (int b = 0; b < sp.slots(); ++b) {
                CliffordElement u = CliffordElement::generator(sp, a);
                CliffordElement v = CliffordElement::generator(sp, b);
                CliffordElement anti = mul(sp, u, v) + mul(sp, v, u);
                Rational expect = Rational(-2) * bilinear_q(sp, u, v);
                ++total;
                if (!(anti == CliffordElement::scalar(sp, expect))) ++failures;
            }
    }
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        PolarizedSpace sp{1 + static_cast<int>(rng() % 4)};
        CliffordElement x = random_clifford(sp, rng);
        CliffordElement y = random_clifford(sp, rng);
        CliffordElement z = random_clifford(sp, rng);
        ++total;
        if (!(mul(sp, mul(sp, x, y), z) == mul(sp, x, mul(sp, y, z)))) ++failures;
    }
    return {"1 Clifford relations and associativity", failures == 0, show(failures, total)};
}

// ---- criterion 2: spin module action -------------------------------------

CheckResult check_spin_module() {
    std::size_t failures = 0, total = 0;
    for (int m = 1; m <= 4; ++m) {
        PolarizedSpace sp{m};
        std::vector<std::vector<int>> words;
        for (int a = 0; a < sp.slots(); ++a) {
            words.push_back({a});
            for (int b = 0; b < sp.slots(); ++b) {
                words.push_back({a, b});
                for (int c = 0; c < sp.slots(); ++c) words.push_back({a, b, c});
            }
        }
        for (const auto& word : words) {
            CliffordElement prod = CliffordElement::scalar(sp, 1);
            for (int slot : word) prod = mul(sp, prod, CliffordElement::generator(sp, slot));
            for (std::uint32_t basis = 0; basis < (1u << m); ++basis) {
                SpinVector s = SpinVector::basis(sp, basis);
                SpinVector via_product = spin_apply(sp, prod, s);
                SpinVector via_composition = s;
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    via_composition =
                        spin_apply(sp, CliffordElement::generator(sp, *it), via_composition);
                ++total;
                if (!(via_product == via_composition)) ++failures;
            }
        }
    }
    // v (v s) = -q(v) s for random vectors
    Rng rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        PolarizedSpace sp{m};
        CliffordElement v(sp.m);
        for (int s = 0; s < sp.slots(); ++s)
            if (rng() % 2) v.add_term(Blade(1) << s, random_rational(rng));
        if (v.empty()) v = CliffordElement::e(sp, 1);
        Rational q = quadratic_q(sp, v);
        for (std::uint32_t basis = 0; basis < (1u << m); ++basis) {
            SpinVector s = SpinVector::basis(sp, basis);
            ++total;
            if (!(spin_apply(sp, v, spin_apply(sp, v, s)) == s.scaled(-q))) ++failures;
        }
    }
    return {"2 spin module action composition and v.v = -q(v)", failures == 0,
            show(failures, total)};
}

// ---- criteria 3,4,5: half-spin character identities ----------------------

std::vector<std::vector<Weight>> half_spin_corpus() {
    std::vector<std::vector<Weight>> corpus;
    corpus.push_back({});
    std::vector<std::int64_t> range;
    for (std::int64_t v = -8; v <= 8; v += 2) range.push_back(v);
    for (std::int64_t a : range) corpus.push_back({rank1(a)});
    for (std::int64_t a : range)
        for (std::int64_t b : range) corpus.push_back({rank1(a), rank1(b)});
    for (std::int64_t a : range)
        for (std::int64_t b : range)
            for (std::int64_t c : range) corpus.push_back({rank1(a), rank1(b), rank1(c)});
    Rng rng(303);
    std::uniform_int_distribution<int> mm(1, 6);
    std::uniform_int_distribution<std::int64_t> coord(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Weight> mu;
        int m = mm(rng);
        for (int i = 0; i < m; ++i) mu.push_back(rank1(2 * coord(rng)));
        corpus.push_back(std::move(mu));
    }
    return corpus;
}

CheckResult check_spin_square(const std::vector<std::vector<Weight>>& corpus) {
    std::size_t failures = 0;
    for (const auto& mu : corpus)
        if (!spin_square_report(mu, 1).equal) ++failures;
    return {"3 spin-square identity (chS+ - chS-)^2 = (-1)^m Lambda_-1(chV)", failures == 0,
            show(failures, corpus.size())};
}

CheckResult check_epsilon_twist(const std::vector<std::vector<Weight>>& corpus) {
    std::size_t failures = 0;
    for (const auto& mu : corpus)
        if (!epsilon_twist_report(mu, 1).parity_matched) ++failures;
    return {"4 epsilon twist chS+- e^eps = Lambda^even/odd chV+", failures == 0,
            show(failures, corpus.size())};
}

CheckResult check_half_spin_product(const std::vector<std::vector<Weight>>& corpus) {
    std::size_t failures = 0;
    for (const auto& mu : corpus) {
        auto [plus, minus] = half_spin_characters(mu, 1);
        VirtualCharacter diff = linear_combination(plus, minus, 1, -1);
        VirtualCharacter prod = VirtualCharacter::trivial(1);
        for (const Weight& m : mu) {
            VirtualCharacter factor(1);
            factor.add_term(m.half(), 1);
            factor.add_term(-(m.half()), -1);
            prod = tensor(prod, factor);
        }
        if (!(diff == prod)) ++failures;
    }
    return {"5 product formula chS+ - chS- = prod(e^{mu/2} - e^{-mu/2})", failures == 0,
            show(failures, corpus.size())};
}

// ---- criterion 6: SL(2,R) pseudo-coefficient expansion --------------------

CheckResult check_sl2_expansion() {
    CartanDatum d = builtin_datum("sl2R");
    DeltaCharacters delta = delta_characters(d);
    std::size_t failures = 0, total = 0;
    for (std::int64_t n = -5; n <= 5; ++n) {
        VirtualCharacter tau = VirtualCharacter::exponential(rank1(2 * n));
        DiscreteExpansion ex = discrete_expansion(d, tau);
        std::map<Weight, Int> expect{{rank1(2 * n), 1}, {rank1(2 * n - 4), -1}};
        ++total;
        bool ok = ex.coefficients == expect && ex.remainder.empty();
        // reconstruction
        VirtualCharacter recon(d.rank);
        for (const auto& [that, c] : ex.coefficients)
            recon = linear_combination(recon, discrete_series_numerator(d, that), 1, c);
        recon = linear_combination(recon, ex.remainder, 1, 1);
        ok = ok && recon == tensor(tau, delta.delta_full);
        if (!ok) ++failures;
    }
    return {"6 SL(2,R) expansion tau_n -> {n:+1, n-2:-1}, empty remainder", failures == 0,
            show(failures, total)};
}

// ---- criterion 7: SL(2,R) Euler-Poincare indices --------------------------

CheckResult check_sl2_ep_indices() {
    CartanDatum d = builtin_datum("sl2R");
    VirtualCharacter triv = VirtualCharacter::trivial(1);
    bool ok = ep_index(d, triv, triv) == 2;
    ok = ok && ep_index(d, triv, VirtualCharacter::exponential(rank1(4))) == -1;
    ok = ok && ep_index(d, triv, VirtualCharacter::exponential(rank1(-4))) == -1;

    // a datum whose p contains the zero weight kills every index
    CartanDatum degenerate = d;
    degenerate.p_char.add_term(Weight::zero(1), 1);
    Rng rng(404);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        VirtualCharacter tau = random_effective(1, rng);
        VirtualCharacter sigma = random_effective(1, rng);
        ok = ok && ep_index(degenerate, tau, sigma) == 0;
        ok = ok && exterior_alternating(linear_combination(
                                            tau, VirtualCharacter::trivial(1), 1, 1))
                       .empty();
    }
    return {"7 SL(2,R) EP indices 2,-1,-1 and vanishing when p contains e^0", ok, ""};
}

// ---- criterion 8: orthonormality of the numerator family ------------------

CheckResult check_orthonormality() {
    std::size_t failures = 0, total = 0;
    Rng rng(505);
    for (const std::string& name : {"su2", "su3", "sp4R"}) {
        CartanDatum d = builtin_datum(name);
        std::uniform_int_distribution<std::int64_t> coord(-200, 200);
        std::vector<Weight> reps;
        std::set<Weight> seen_orbit;
        while (reps.size() < 20) {
            Weight w = Weight::zero(d.rank);
            for (int i = 0; i < d.rank; ++i) w.coords[i] = coord(rng);
            if (!is_regular(d, w)) continue;
            Weight rep = orbit_representative(d, w).first;
            if (!seen_orbit.insert(rep).second) continue;
            reps.push_back(rep);
        }
        Int order(d.weyl_order());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            VirtualCharacter ni = alternating_orbit_sum(d, reps[i]);
            ++total;
            if (constant_term(tensor(ni, dual(ni))) != order) ++failures;
            if (i + 1 < reps.size()) {
                VirtualCharacter nj = alternating_orbit_sum(d, reps[i + 1]);
                ++total;
                if (constant_term(tensor(ni, dual(nj))) != 0) ++failures;
            }
        }
    }
    return {"8 orthonormality (1/|W|) CT(N dual(N)) = 1, cross-orbit 0", failures == 0,
            show(failures, total)};
}

// ---- criterion 9: Weyl characters -----------------------------------------

CheckResult check_weyl_characters() {
    bool ok = true;
    std::string detail;

    CartanDatum su2 = builtin_datum("su2");
    std::vector<VirtualCharacter> su2_chars;
    for (std::int64_t l = 0; l <= 6; ++l) {
        Weight lam = rank1(2 * l);
        VirtualCharacter chi = irreducible_character(su2, lam);
        su2_chars.push_back(chi);
        Rational dim = weyl_dimension(su2, lam);
        ok = ok && Rational(chi.dimension()) == dim && dim == Rational(l + 1);
        for (const WeylElement& w : su2.weyl) {
            VirtualCharacter moved(su2.rank);
            for (const auto& [wt, m] : chi.terms()) moved.add_term(w.apply(wt), m);
            ok = ok && moved == chi;
        }
    }

    CartanDatum su3 = builtin_datum("su3");
    std::vector<std::pair<Weight, Int>> su3_cases = {
        {Weight({0, 0}), 1}, {Weight({2, 0}), 3}, {Weight({0, 2}), 3}, {Weight({2, 2}), 8}};
    std::vector<VirtualCharacter> su3_chars;
    for (const auto& [lam, dim] : su3_cases) {
        VirtualCharacter chi = irreducible_character(su3, lam);
        su3_chars.push_back(chi);
        ok = ok && chi.dimension() == dim && Rational(dim) == weyl_dimension(su3, lam);
        for (const WeylElement& w : su3.weyl) {
            VirtualCharacter moved(su3.rank);
            for (const auto& [wt, m] : chi.terms()) moved.add_term(w.apply(wt), m);
            ok = ok && moved == chi;
        }
    }

    for (std::size_t i = 0; i < su2_chars.size(); ++i)
        for (std::size_t j = 0; j < su2_chars.size(); ++j)
            ok = ok && inner_product(su2, su2_chars[i], su2_chars[j]) ==
                           Rational(i == j ? 1 : 0);
    for (std::size_t i = 0; i < su3_chars.size(); ++i)
        for (std::size_t j = 0; j < su3_chars.size(); ++j)
            ok = ok && inner_product(su3, su3_chars[i], su3_chars[j]) ==
                           Rational(i == j ? 1 : 0);

    return {"9 Weyl characters: dimension formula, W-invariance, orthonormality", ok, detail};
}

// ---- criterion 10: Dirac square --------------------------------------------

CheckResult check_dirac() {
    PolarizedSpace sp{1};
    std::size_t failures = 0;
    std::ostringstream detail;
    for (int dim = 1; dim <= 5; ++dim) {
        DiracReport rep = dirac_square_check(sl2_dirac_model(dim), sp);
        if (!rep.ok || !rep.lemma_scalar_ok) {
            ++failures;
            detail << "dim " << dim << " defect " << rational_str(rep.max_defect) << "; ";
        }
    }
    return {"10 Dirac square defect exactly 0 for dim pi in 1..5", failures == 0, detail.str()};
}

// ---- criterion 11: evaluators ----------------------------------------------

CheckResult check_evaluators() {
    bool ok = true;
    CartanDatum sl2 = builtin_datum("sl2R");
    for (int i = 1; i <= 100; ++i) {
        double theta = 3.1 * i / 101.0;
        double got = weyl_integration_factor(sl2, TorusPoint({theta}));
        double want = 4.0 * std::sin(theta) * std::sin(theta);
        ok = ok && std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want));
    }

    SplitCartanDatum split =
        make_split_datum(1, {SplitRoot{{Rational(2)}, Weight()}}, {}, CartanDatum{});
    for (int i = 1; i <= 50; ++i) {
        double s = -2.0 + 4.0 * i / 51.0;
        double dp = delta_plus_evaluate(split, {s}, TorusPoint{});
        double want = 2.0 * std::abs(std::sinh(s));
        ok = ok && std::abs(dp - want) <= 1e-9 * std::max(1.0, std::abs(want));
        std::complex<double> nf = normalized_orbital_factor(split, {s}, TorusPoint{});
        ok = ok && std::abs(nf - std::complex<double>(2.0 * std::sinh(s))) <= 1e-9;
    }

    for (int np = 0; np <= 4 && ok; ++np)
        for (int nn = 0; nn <= np && ok; ++nn)
            for (int nu = 0; nu <= 4 && ok; ++nu)
                for (long w = 1; w <= 4 && ok; ++w)
                    for (double ratio : {0.5, 1.0, 2.5}) {
                        double c = harish_chandra_constant({np, nn, nu, w, ratio});
                        double mag = std::pow(2 * std::numbers::pi, np) *
                                     std::pow(2.0, nu / 2.0) * ratio * w;
                        double want = (nn % 2 == 0 ? mag : -mag);
                        ok = ok && std::abs(c - want) <= 1e-12 * std::abs(want);
                        ok = ok && ((nn % 2 == 0) == (c > 0));
                    }

    return {"11 evaluators: 4sin^2, 2|sinh|, 2sinh, Harish-Chandra sign rule", ok, ""};
}

// ---- criterion 12: reconstruction totality ---------------------------------

CheckResult check_reconstruction() {
    std::size_t failures = 0, total = 0;
    Rng rng(606);
    for (const std::string& name : builtin_datum_names()) {
        CartanDatum d = builtin_datum(name);
        DeltaCharacters delta = delta_characters(d);
        for (int trial = 0; trial < 50; ++trial) {
            VirtualCharacter tau = random_effective(d.rank, rng);
            DiscreteExpansion ex = discrete_expansion(d, tau);
            VirtualCharacter recon = ex.remainder;
            for (const auto& [that, c] : ex.coefficients)
                recon = linear_combination(recon, discrete_series_numerator(d, that), 1, c);
            ++total;
            if (!(recon == tensor(tau, delta.delta_full))) ++failures;
            // with a trivial Weyl group every weight is regular
            if (d.weyl_order() == 1 && !ex.remainder.empty()) ++failures;
        }
    }
    return {"12 reconstruction sum c N + remainder = tau 'Delta, integral coefficients",
            failures == 0, show(failures, total)};
}

}  // namespace

std::vector<CheckResult> acceptance_checks() {
    std::vector<CheckResult> out;
    auto corpus = half_spin_corpus();
    out.push_back(check_clifford_relations());
    out.push_back(check_spin_module());
    out.push_back(check_spin_square(corpus));
    out.push_back(check_epsilon_twist(corpus));
    out.push_back(check_half_spin_product(corpus));
    out.push_back(check_sl2_expansion());
    out.push_back(check_sl2_ep_indices());
    out.push_back(check_orthonormality());
    out.push_back(check_weyl_characters());
    out.push_back(check_dirac());
    out.push_back(check_evaluators());
    out.push_back(check_reconstruction());
    return out;
}

namespace {

CheckResult check_character_algebra() {
    Rng rng(707);
    std::size_t failures = 0, total = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int rank = 1 + static_cast<int>(rng() % 3);
        VirtualCharacter a = random_effective(rank, rng);
        VirtualCharacter b = random_effective(rank, rng);
        VirtualCharacter c = random_effective(rank, rng);
        ++total;
        if (!(tensor(a, b) == tensor(b, a))) ++failures;
        ++total;
        if (!(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)))) ++failures;
        ++total;
        if (!(dual(dual(a)) == a)) ++failures;
        ++total;
        if (!(dual(tensor(a, b)) == tensor(dual(a), dual(b)))) ++failures;

        TorusPoint t;
        for (int i = 0; i < rank; ++i)
            t.angles.push_back(0.1 + 0.37 * i + 0.01 * trial);
        auto lhs = evaluate(tensor(a, b), t);
        auto rhs = evaluate(a, t) * evaluate(b, t);
        ++total;
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) ++failures;
    }
    return {"characters: tensor algebra, duality, evaluation homomorphism", failures == 0,
            show(failures, total)};
}

CheckResult check_exterior_powers() {
    Rng rng(808);
    std::size_t failures = 0, total = 0;
    for (int trial = 0; trial < 30; ++trial) {
        VirtualCharacter a = random_effective(1 + static_cast<int>(rng() % 2), rng, 3, 3);
        std::int64_t n = a.dimension().convert_to<std::int64_t>();
        Int sum = 0;
        for (std::int64_t p = 0; p <= n; ++p) sum += exterior_power(a, p).dimension();
        ++total;
        if (sum != (Int(1) << n)) ++failures;
        ++total;
        if (!exterior_power(a, static_cast<int>(n) + 1).empty()) ++failures;
    }
    return {"exterior powers: total dimension 2^n and vanishing past the top", failures == 0,
            show(failures, total)};
}

CheckResult check_weyl_machinery() {
    bool ok = true;
    CartanDatum sl2 = builtin_datum("sl2R");
    CartanDatum su2 = builtin_datum("su2");
    CartanDatum su3 = builtin_datum("su3");
    CartanDatum sp4 = builtin_datum("sp4R");
    ok = ok && sl2.weyl_order() == 1 && su2.weyl_order() == 2 && su3.weyl_order() == 6 &&
         sp4.weyl_order() == 2;
    if (su2.weyl_order() == 2) {
        int signs = 0;
        for (const auto& w : su2.weyl) signs += w.sign;
        ok = ok && signs == 0;
    }
    // equivariance N(w lam) = eps(w) N(lam)
    Rng rng(909);
    for (int trial = 0; trial < 20; ++trial) {
        for (const CartanDatum* d : {&su2, &su3, &sp4}) {
            Weight lam = Weight::zero(d->rank);
            for (int i = 0; i < d->rank; ++i)
                lam.coords[i] = static_cast<std::int64_t>(rng() % 13) - 6;
            VirtualCharacter n = alternating_orbit_sum(*d, lam);
            for (const WeylElement& w : d->weyl) {
                VirtualCharacter moved = alternating_orbit_sum(*d, w.apply(lam));
                VirtualCharacter scaled =
                    linear_combination(n, VirtualCharacter(d->rank), w.sign, 0);
                ok = ok && moved == scaled;
            }
        }
    }
    return {"Weyl machinery: orders, signs, equivariance of alternating sums", ok, ""};
}

CheckResult check_conjugation() {
    Rng rng(1010);
    std::size_t failures = 0, total = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + static_cast<int>(rng() % 3);
        PolarizedSpace sp{m};
        // even product of non-isotropic vectors a e_i + b f_i
        std::vector<CliffordElement> factors;
        for (int k = 0; k < 2 + 2 * static_cast<int>(rng() % 2); ++k) {
            int i = 1 + static_cast<int>(rng() % m);
            Rational a = random_rational(rng);
            Rational b = random_rational(rng);
            CliffordElement v =
                CliffordElement::e(sp, i).scaled(a) + CliffordElement::f(sp, i).scaled(b);
            if (quadratic_q(sp, v) == 0) v = CliffordElement::e(sp, i) - CliffordElement::f(sp, i).scaled(Rational(1, 2));
            factors.push_back(v);
        }
        std::vector<CliffordElement> gens;
        for (int s = 0; s < sp.slots(); ++s) gens.push_back(CliffordElement::generator(sp, s));
        std::vector<CliffordElement> images;
        for (const auto& g : gens) images.push_back(conjugate_by_vectors(sp, factors, g));
        // q-Gram preserved
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                ++total;
                if (!(bilinear_q(sp, images[i], images[j]) == bilinear_q(sp, gens[i], gens[j])))
                    ++failures;
            }
        // -x acts the same
        std::vector<CliffordElement> neg = factors;
        neg[0] = neg[0].scaled(Rational(-1));
        ++total;
        if (!(conjugate_by_vectors(sp, neg, gens[0]) == images[0])) ++failures;
    }
    return {"conjugation: even vector products preserve q; x and -x agree", failures == 0,
            show(failures, total)};
}

CheckResult check_spin_parity() {
    Rng rng(1111);
    std::size_t failures = 0, total = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        PolarizedSpace sp{m};
        Blade blade = rng() & ((Blade(1) << sp.slots()) - 1);
        CliffordElement x(sp.m);
        x.add_term(blade, 1);
        int xpar = std::popcount(blade) % 2;
        for (std::uint32_t basis = 0; basis < (1u << m); ++basis) {
            SpinVector s = SpinVector::basis(sp, basis);
            SpinVector out = spin_apply(sp, x, s);
            int spar = std::popcount(basis) % 2;
            ++total;
            for (const auto& [subset, c] : out.terms)
                if (std::popcount(subset) % 2 != (spar + xpar) % 2) {
                    ++failures;
                    break;
                }
        }
    }
    return {"spin module: even elements preserve parity, odd elements swap it", failures == 0,
            show(failures, total)};
}

CheckResult check_half_spin_dimensions() {
    Rng rng(1212);
    std::size_t failures = 0, total = 0;
    for (int m = 1; m <= 8; ++m) {
        std::vector<Weight> mu;
        for (int i = 0; i < m; ++i)
            mu.push_back(rank1(2 * (static_cast<std::int64_t>(rng() % 9) - 4)));
        auto [plus, minus] = half_spin_characters(mu, 1);
        ++total;
        if (plus.dimension() != (Int(1) << (m - 1)) || minus.dimension() != (Int(1) << (m - 1)))
            ++failures;
    }
    return {"half-spin characters: both sides have dimension 2^(m-1)", failures == 0,
            show(failures, total)};
}

CheckResult check_ep_symmetry() {
    Rng rng(1313);
    std::size_t failures = 0, total = 0;
    for (const std::string& name : {"sl2R", "sp4R"}) {
        CartanDatum d = builtin_datum(name);
        for (int trial = 0; trial < 50; ++trial) {
            VirtualCharacter tau = random_invariant_effective(d, rng);
            VirtualCharacter sigma = random_invariant_effective(d, rng);
            ++total;
            if (ep_index(d, tau, sigma) != ep_index(d, sigma, tau)) ++failures;
        }
    }
    return {"ep_index symmetry in tau and sigma", failures == 0, show(failures, total)};
}

CheckResult check_theta_and_orbitals() {
    bool ok = true;
    CartanDatum sl2 = builtin_datum("sl2R");
    CartanDatum su2 = builtin_datum("su2");
    DeltaCharacters dl = delta_characters(sl2);

    for (int i = 1; i <= 20; ++i) {
        double theta = 3.0 * i / 21.0;
        TorusPoint t({theta});
        RegularCharacter that = make_regular_character(sl2, rank1(6));
        std::complex<double> lhs = theta_evaluate(sl2, that, t) * evaluate(dl.delta_full, t);
        std::complex<double> rhs = evaluate(alternating_orbit_sum(sl2, rank1(6)), t);
        ok = ok && std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs));

        VirtualCharacter tau = VirtualCharacter::exponential(rank1(4));
        auto [plus, minus] = half_spin_characters(sl2.noncompact_positive_roots(), 1);
        std::complex<double> diff = evaluate(linear_combination(plus, minus, 1, -1), t);
        ok = ok && std::abs(pseudo_orbital(sl2, tau, t) * diff - evaluate(tau, t)) <= 1e-9;
        ok = ok && std::abs(orbital_regular(sl2, tau, t) - evaluate(tau, t)) == 0;
    }

    // chi_lambda 'Delta = e^{-rho} N_{lambda+rho} exactly on the compact datum
    for (std::int64_t l = 0; l <= 5; ++l) {
        VirtualCharacter chi = irreducible_character(su2, rank1(2 * l));
        VirtualCharacter lhs = tensor(chi, delta_characters(su2).delta_full);
        VirtualCharacter rhs = tensor(VirtualCharacter::exponential(-su2.rho),
                                      alternating_orbit_sum(su2, rank1(2 * l) + su2.rho));
        ok = ok && lhs == rhs;
    }
    return {"theta/orbital consistency and chi 'Delta = e^-rho N_{lam+rho}", ok, ""};
}

CheckResult check_spinoriality_orientation() {
    bool ok = true;
    CartanDatum sl2 = builtin_datum("sl2R");
    CartanDatum su2 = builtin_datum("su2");
    CartanDatum sp4 = builtin_datum("sp4R");
    ok = ok && spinoriality(sl2).lifts;          // rho_n = 1, integral
    ok = ok && spinoriality(su2).lifts;          // no noncompact roots
    ok = ok && !spinoriality(sp4).lifts;         // rho_n = (3/2, 3/2)
    ok = ok && orientation_preserving(sl2) && orientation_preserving(su2) &&
         orientation_preserving(sp4);
    VirtualCharacter unpaired(1);
    unpaired.add_term(rank1(2), 1);
    ok = ok && !orientation_from_p_char(unpaired);
    return {"spinoriality on the fixtures; orientation of paired p", ok, ""};
}

CheckResult check_discrete_coefficients() {
    bool ok = true;
    CartanDatum sl2 = builtin_datum("sl2R");
    VirtualCharacter tau = VirtualCharacter::exponential(rank1(2 * 3));
    ok = ok && discrete_coefficient(sl2, tau, make_regular_character(sl2, rank1(6))) == 1;
    ok = ok && discrete_coefficient(sl2, tau, make_regular_character(sl2, rank1(2))) == -1;
    ok = ok && discrete_coefficient(sl2, tau, make_regular_character(sl2, rank1(14))) == 0;

    CartanDatum su2 = builtin_datum("su2");
    for (std::int64_t l = 0; l <= 4; ++l) {
        VirtualCharacter chi = irreducible_character(su2, rank1(2 * l));
        Weight param = rank1(2 * l) + su2.rho;
        ok = ok && discrete_coefficient(su2, chi, make_regular_character(su2, param)) == 1;
        DiscreteExpansion ex = discrete_expansion(su2, chi);
        ok = ok && ex.remainder.empty() && ex.coefficients.size() == 1 &&
             ex.coefficients.count(param) == 1 && ex.coefficients.at(param) == 1;
    }
    return {"discrete coefficients on SL(2,R) and the compact fixture", ok, ""};
}

}  // namespace

std::vector<CheckResult> invariant_checks() {
    std::vector<CheckResult> out;
    out.push_back(check_character_algebra());
    out.push_back(check_exterior_powers());
    out.push_back(check_weyl_machinery());
    out.push_back(check_conjugation());
    out.push_back(check_spin_parity());
    out.push_back(check_half_spin_dimensions());
    out.push_back(check_ep_symmetry());
    out.push_back(check_theta_and_orbitals());
    out.push_back(check_spinoriality_orientation());
    out.push_back(check_discrete_coefficients());
    return out;
}

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out = acceptance_checks();
    std::vector<CheckResult> inv = invariant_checks();
    out.insert(out.end(), inv.begin(), inv.end());
    return out;
}

}  // namespace epchar
