#pragma once

#include <complex>
#include <map>

#include "epchar/cartan.hpp"
#include "epchar/charlat.hpp"
#include "epchar/virtual_character.hpp"

namespace epchar {

// Regular character of the compact Cartan: a weight with trivial Weyl
// stabilizer, the parameter of a discrete series restriction.
struct RegularCharacter {
    Weight weight;  // doubled coordinates
};

RegularCharacter make_regular_character(const CartanDatum& d, const Weight& w);

struct DeltaCharacters {
    VirtualCharacter delta_c, delta_n, delta_full;
};

// 'Delta_c = prod over compact positive roots (1 - e^{-a}), 'Delta_n the
// noncompact analogue, 'Delta their product.
DeltaCharacters delta_characters(const CartanDatum& d);

// Alternating sum over exterior powers of p: the Euler-Poincare pairing
// sum_p (-1)^p dim Hom_K(sigma, Lambda^p p (x) dual(tau)).
Int ep_index(const CartanDatum& d, const VirtualCharacter& tau, const VirtualCharacter& sigma);

// Same with Lambda p_minus in place of Lambda p; p_minus must be an
// effective subcharacter of p_char.
Int ep_index_half(const CartanDatum& d, const VirtualCharacter& p_minus,
                  const VirtualCharacter& tau, const VirtualCharacter& sigma);

// Value of the normalized discrete-series kernel N_that / 'Delta at a
// regular torus point.
std::complex<double> theta_evaluate(const CartanDatum& d, const RegularCharacter& that,
                                    const TorusPoint& t);

// e^{-rho_K} N_that: the exact torus restriction of 'Delta times the
// discrete series character with parameter that.
VirtualCharacter discrete_series_numerator(const CartanDatum& d, const Weight& that);

// Fourier coefficient of tau 'Delta against the numerator basis; an exact
// integer for valid data.
Int discrete_coefficient(const CartanDatum& d, const VirtualCharacter& tau,
                         const RegularCharacter& that);

struct DiscreteExpansion {
    // coefficient per lexicographically-largest orbit representative
    std::map<Weight, Int> coefficients;
    VirtualCharacter remainder;
    // contract: tau * 'Delta = sum coefficients[r] * numerator(r) + remainder
};

DiscreteExpansion discrete_expansion(const CartanDatum& d, const VirtualCharacter& tau);

// Orbital integral of the Euler-Poincare function at a regular elliptic
// point: just the trace of tau there.
std::complex<double> orbital_regular(const CartanDatum& d, const VirtualCharacter& tau,
                                     const TorusPoint& t);

// Nonregular closed form, evaluated from supplied centralizer data.
std::complex<double> orbital_general_formula(std::complex<double> tau_value, double c_g,
                                             long weyl_order, const Weight& rho_g,
                                             const std::vector<Weight>& pos_roots_g,
                                             const RationalMatrix& gram);

// Orbital integral of the pseudo-coefficient: tr tau / tr(.|S+ - S-) with
// the half-spin characters built from the noncompact positive roots.
std::complex<double> pseudo_orbital(const CartanDatum& d, const VirtualCharacter& tau,
                                    const TorusPoint& t);

// <dual-hw, dual-hw + 2 rho_K> - <rho, rho> + <rho_K, rho_K>.
Rational casimir_shift(const CartanDatum& d, const Weight& tau_highest);

struct HcInputs {
    int n_pos_roots = 0;
    int n_noncompact = 0;
    int nu = 0;
    long weyl_order = 1;
    double vol_ratio = 1.0;  // v(T)/v(K), supplied
};

// (-1)^{|Phi_n+|} (2 pi)^{|Phi+|} 2^{nu/2} (v(T)/v(K)) |W|.
double harish_chandra_constant(const HcInputs& in);

// |det(1 - t | g/h)| as the product over all roots of |1 - e^{-a}(t)|.
double weyl_integration_factor(const CartanDatum& d, const TorusPoint& t);

// Positive non-imaginary root of a split Cartan: a rational functional on
// the split part plus a weight on the compact part.
struct SplitRoot {
    std::vector<Rational> a_form;
    Weight t_weight;  // zero weight when the root is trivial on T
};

struct SplitCartanDatum {
    int real_rank = 0;
    std::vector<SplitRoot> restricted_roots;
    std::vector<Rational> rho_p;  // half sum of the a_form functionals
    CartanDatum imaginary_part;   // rank may be 0
};

SplitCartanDatum make_split_datum(int real_rank, std::vector<SplitRoot> roots,
                                  std::vector<Rational> rho_p, CartanDatum imaginary_part);

// Delta_+(at) = |prod (1 - (at)^{-a})| a^{rho_P} over non-imaginary roots.
double delta_plus_evaluate(const SplitCartanDatum& sd, const std::vector<double>& a_coords,
                           const TorusPoint& t);

// h^{rho_P} prod over all positive roots (1 - h^{-a}): the denominator
// relating 'F_f to the orbital integral.
std::complex<double> normalized_orbital_factor(const SplitCartanDatum& sd,
                                               const std::vector<double>& a_coords,
                                               const TorusPoint& t);

}  // namespace epchar
