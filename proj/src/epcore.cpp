#include "epchar/epcore.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "epchar/clifford.hpp"
#include "epchar/errors.hpp"

namespace epchar {

namespace {

constexpr double kSingularTolerance = 1e-12;

void require_compact_cartan(const CartanDatum& d, const char* what) {
    if (!d.is_compact_cartan()) fail(errc::not_compact_cartan, what);
}

Int rational_to_int(const Rational& r, errc on_fail, const char* what) {
    if (denominator(r) != 1) fail(on_fail, what);
    return numerator(r);
}

}  // namespace

RegularCharacter make_regular_character(const CartanDatum& d, const Weight& w) {
    if (w.rank() != d.rank) fail(errc::rank_mismatch, "character rank differs from datum rank");
    if (!is_regular(d, w))
        fail(errc::validation_error, "weight has a nontrivial Weyl stabilizer");
    return {w};
}

DeltaCharacters delta_characters(const CartanDatum& d) {
    require_compact_cartan(d, "delta characters need a compact Cartan datum");
    auto product = [&](const std::vector<Weight>& roots) {
        VirtualCharacter r = VirtualCharacter::trivial(d.rank);
        for (const Weight& alpha : roots) {
            VirtualCharacter factor(d.rank);
            factor.add_term(Weight::zero(d.rank), 1);
            factor.add_term(-alpha, -1);
            r = tensor(r, factor);
        }
        return r;
    };
    DeltaCharacters out;
    out.delta_c = product(d.compact_positive_roots());
    out.delta_n = product(d.noncompact_positive_roots());
    out.delta_full = tensor(out.delta_c, out.delta_n);
    return out;
}

Int ep_index(const CartanDatum& d, const VirtualCharacter& tau, const VirtualCharacter& sigma) {
    require_compact_cartan(d, "ep index needs a compact Cartan datum");
    if (!tau.is_effective() || !sigma.is_effective())
        fail(errc::negative_multiplicity, "ep index needs effective characters");
    CartanDatum k = d.compact_subdatum();
    VirtualCharacter pairing = tensor(exterior_alternating(d.p_char), tau);
    Rational value = inner_product(k, pairing, sigma);
    return rational_to_int(value, errc::non_integral_coefficient, "ep index is not integral");
}

Int ep_index_half(const CartanDatum& d, const VirtualCharacter& p_minus,
                  const VirtualCharacter& tau, const VirtualCharacter& sigma) {
    require_compact_cartan(d, "ep index needs a compact Cartan datum");
    if (!p_minus.is_effective()) fail(errc::negative_multiplicity, "p_minus must be effective");
    for (const auto& [w, m] : p_minus.terms())
        if (m > d.p_char.coefficient(w))
            fail(errc::not_subcharacter, "p_minus is not contained in p");
    if (!tau.is_effective() || !sigma.is_effective())
        fail(errc::negative_multiplicity, "ep index needs effective characters");
    CartanDatum k = d.compact_subdatum();
    VirtualCharacter pairing = tensor(exterior_alternating(p_minus), tau);
    Rational value = inner_product(k, pairing, sigma);
    return rational_to_int(value, errc::non_integral_coefficient, "ep index is not integral");
}

std::complex<double> theta_evaluate(const CartanDatum& d, const RegularCharacter& that,
                                    const TorusPoint& t) {
    DeltaCharacters delta = delta_characters(d);
    std::complex<double> denom = evaluate(delta.delta_full, t);
    if (std::abs(denom) < kSingularTolerance)
        fail(errc::singular_element, "'Delta vanishes at this point");
    std::complex<double> numer = evaluate(alternating_orbit_sum(d, that.weight), t);
    return numer / denom;
}

VirtualCharacter discrete_series_numerator(const CartanDatum& d, const Weight& that) {
    VirtualCharacter twist = VirtualCharacter::exponential(-d.rho_k);
    return tensor(twist, alternating_orbit_sum(d, that));
}

Int discrete_coefficient(const CartanDatum& d, const VirtualCharacter& tau,
                         const RegularCharacter& that) {
    require_compact_cartan(d, "discrete coefficient needs a compact Cartan datum");
    if (!tau.is_effective()) fail(errc::negative_multiplicity, "tau must be effective");
    DeltaCharacters delta = delta_characters(d);
    VirtualCharacter g = tensor(tau, delta.delta_full);
    VirtualCharacter n = discrete_series_numerator(d, that.weight);
    Int ct = constant_term(tensor(g, dual(n)));
    Rational value(ct, Int(d.weyl_order()));
    return rational_to_int(value, errc::non_integral_coefficient,
                           "expansion coefficient is not integral");
}

DiscreteExpansion discrete_expansion(const CartanDatum& d, const VirtualCharacter& tau) {
    require_compact_cartan(d, "discrete expansion needs a compact Cartan datum");
    if (!tau.is_effective()) fail(errc::negative_multiplicity, "tau must be effective");

    DeltaCharacters delta = delta_characters(d);
    VirtualCharacter g = tensor(tau, delta.delta_full);
    // shift into the Weyl-alternating picture
    VirtualCharacter h = tensor(g, VirtualCharacter::exponential(d.rho_k));

    DiscreteExpansion out;
    out.remainder = g;
    std::set<Weight> visited;
    for (const auto& [w, m] : h.terms()) {
        if (visited.count(w)) continue;
        auto [rep, sign] = orbit_representative(d, w);
        for (const WeylElement& elt : d.weyl) visited.insert(elt.apply(rep));
        if (!is_regular(d, rep)) continue;  // singular orbits stay in the remainder
        Int c = h.coefficient(rep);
        if (c == 0) continue;
        out.coefficients.emplace(rep, c);
        VirtualCharacter piece = discrete_series_numerator(d, rep);
        out.remainder = linear_combination(out.remainder, piece, 1, -c);
    }
    return out;
}

std::complex<double> orbital_regular(const CartanDatum& d, const VirtualCharacter& tau,
                                     const TorusPoint& t) {
    DeltaCharacters delta = delta_characters(d);
    if (std::abs(evaluate(delta.delta_full, t)) < kSingularTolerance)
        fail(errc::singular_element, "point is not regular");
    return evaluate(tau, t);
}

std::complex<double> orbital_general_formula(std::complex<double> tau_value, double c_g,
                                             long weyl_order, const Weight& rho_g,
                                             const std::vector<Weight>& pos_roots_g,
                                             const RationalMatrix& gram) {
    if (c_g == 0.0) fail(errc::zero_constant, "Harish-Chandra constant is zero");
    auto pair = [&gram](const Weight& a, const Weight& b) {
        std::vector<Rational> vb(b.rank());
        for (int i = 0; i < b.rank(); ++i) vb[i] = Rational(b.coords[i]);
        std::vector<Rational> gb = gram.apply(vb);
        Rational r = 0;
        for (int i = 0; i < a.rank(); ++i) r += Rational(a.coords[i]) * gb[i];
        return r;
    };
    double prod = 1.0;
    for (const Weight& alpha : pos_roots_g) prod *= to_double(pair(rho_g, alpha));
    return tau_value * (1.0 / c_g) * static_cast<double>(weyl_order) * prod;
}

std::complex<double> pseudo_orbital(const CartanDatum& d, const VirtualCharacter& tau,
                                    const TorusPoint& t) {
    require_compact_cartan(d, "pseudo orbital needs a compact Cartan datum");
    auto [plus, minus] = half_spin_characters(d.noncompact_positive_roots(), d.rank);
    std::complex<double> denom = evaluate(linear_combination(plus, minus, 1, -1), t);
    if (std::abs(denom) < kSingularTolerance)
        fail(errc::singular_element, "half-spin difference vanishes at this point");
    return evaluate(tau, t) / denom;
}

Rational casimir_shift(const CartanDatum& d, const Weight& tau_highest) {
    if (!d.dominant_for_compact(tau_highest))
        fail(errc::not_dominant, "highest weight not dominant for the compact roots");
    // highest weight of the dual: the dominant representative of -lambda
    Weight dual_hw = -tau_highest;
    for (const WeylElement& w : d.weyl) {
        Weight cand = w.apply(-tau_highest);
        if (d.dominant_for_compact(cand)) {
            dual_hw = cand;
            break;
        }
    }
    Weight shifted = dual_hw + d.rho_k * 2;
    return d.inner(dual_hw, shifted) - d.inner(d.rho, d.rho) + d.inner(d.rho_k, d.rho_k);
}

double harish_chandra_constant(const HcInputs& in) {
    if (in.vol_ratio <= 0) fail(errc::validation_error, "volume ratio must be positive");
    if (in.n_noncompact > in.n_pos_roots || in.n_noncompact < 0 || in.nu < 0 ||
        in.weyl_order < 1)
        fail(errc::validation_error, "inconsistent root counts");
    double sign = (in.n_noncompact % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(2.0 * std::numbers::pi, in.n_pos_roots) *
           std::pow(2.0, in.nu / 2.0) * in.vol_ratio * static_cast<double>(in.weyl_order);
}

double weyl_integration_factor(const CartanDatum& d, const TorusPoint& t) {
    double prod = 1.0;
    for (const Weight& alpha : d.positive_roots) {
        std::complex<double> za = evaluate_weight(alpha, t);
        prod *= std::abs(1.0 - za) * std::abs(1.0 - 1.0 / za);
    }
    return prod;
}

SplitCartanDatum make_split_datum(int real_rank, std::vector<SplitRoot> roots,
                                  std::vector<Rational> rho_p, CartanDatum imaginary_part) {
    if (real_rank < 0) fail(errc::validation_error, "negative real rank");
    for (const SplitRoot& r : roots)
        if (static_cast<int>(r.a_form.size()) != real_rank)
            fail(errc::dimension_mismatch, "root functional length differs from real rank");

    std::vector<Rational> half(real_rank, Rational(0));
    for (const SplitRoot& r : roots)
        for (int i = 0; i < real_rank; ++i) half[i] += r.a_form[i] / 2;
    if (rho_p.empty()) rho_p = half;
    if (rho_p != half)
        fail(errc::validation_error, "rho_P differs from half the sum of the functionals");

    return {real_rank, std::move(roots), std::move(rho_p), std::move(imaginary_part)};
}

namespace {

double functional_at(const std::vector<Rational>& form, const std::vector<double>& coords) {
    double v = 0;
    for (std::size_t i = 0; i < form.size(); ++i) v += to_double(form[i]) * coords[i];
    return v;
}

std::complex<double> torus_part(const Weight& t_weight, const TorusPoint& t) {
    if (t_weight.rank() == 0 || t_weight.is_zero()) return 1.0;
    return evaluate_weight(t_weight, t);
}

}  // namespace

double delta_plus_evaluate(const SplitCartanDatum& sd, const std::vector<double>& a_coords,
                           const TorusPoint& t) {
    if (static_cast<int>(a_coords.size()) != sd.real_rank)
        fail(errc::dimension_mismatch, "split coordinates have the wrong length");
    double prod = 1.0;
    for (const SplitRoot& r : sd.restricted_roots) {
        std::complex<double> term =
            1.0 - std::exp(-functional_at(r.a_form, a_coords)) / torus_part(r.t_weight, t);
        prod *= std::abs(term);
    }
    return prod * std::exp(functional_at(sd.rho_p, a_coords));
}

std::complex<double> normalized_orbital_factor(const SplitCartanDatum& sd,
                                               const std::vector<double>& a_coords,
                                               const TorusPoint& t) {
    if (static_cast<int>(a_coords.size()) != sd.real_rank)
        fail(errc::dimension_mismatch, "split coordinates have the wrong length");
    std::complex<double> prod = std::exp(functional_at(sd.rho_p, a_coords));
    for (const SplitRoot& r : sd.restricted_roots)
        prod *= 1.0 - std::exp(-functional_at(r.a_form, a_coords)) / torus_part(r.t_weight, t);
    for (const Weight& alpha : sd.imaginary_part.positive_roots)
        prod *= 1.0 - 1.0 / evaluate_weight(alpha, t);
    return prod;
}

}  // namespace epchar
