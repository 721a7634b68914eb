#pragma once

#include "epchar/cartan.hpp"
#include "epchar/virtual_character.hpp"

namespace epchar {

// N_lam = sum over the datum's Weyl group of eps(w) e^{w lam}; vanishes when
// lam is fixed by a reflection.
VirtualCharacter alternating_orbit_sum(const CartanDatum& d, const Weight& lam);
VirtualCharacter alternating_orbit_sum_serial(const CartanDatum& d, const Weight& lam);
VirtualCharacter alternating_orbit_sum_parallel(const CartanDatum& d, const Weight& lam);

// Irreducible character with highest weight lam on an all-compact datum,
// computed as the exact quotient of Weyl numerators.
VirtualCharacter irreducible_character(const CartanDatum& d, const Weight& lam);

// Weyl dimension formula, prod <lam+rho,a>/<rho,a>, as an exact rational.
Rational weyl_dimension(const CartanDatum& d, const Weight& lam);

// (1/|W|) CT( a dual(b) prod over ALL roots (1 - e^a) ); the inner product
// of K-class functions restricted to the torus. Exact rational, an integer
// for genuine characters.
Rational inner_product(const CartanDatum& d, const VirtualCharacter& a,
                       const VirtualCharacter& b);

// Exact quotient of finitely supported characters; throws if the division
// does not come out exact.
VirtualCharacter divide_exact(const VirtualCharacter& num, const VirtualCharacter& den);

bool is_regular(const CartanDatum& d, const Weight& w);

// Lexicographically largest weight in the Weyl orbit, with the sign of the
// group element carrying w there.
std::pair<Weight, int> orbit_representative(const CartanDatum& d, const Weight& w);

}  // namespace epchar
