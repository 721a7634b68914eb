#pragma once

#include "epchar/clifford.hpp"
#include "epchar/ratmat.hpp"

namespace epchar {

// Desk-scale model of the sl(2,R) Dirac operator: pi on the orthonormal
// basis X1 = diag(1,-1), X2 = offdiag(1,1) of p, with B = (1/2) tr. In this
// normalization B(X_i, X_j) = delta_ij, B(rho) = 1 and [X1, X2] = 2 J for
// the rotation generator J of k.
struct DiracModel {
    int dim = 0;  // dim V_pi
    RationalMatrix pi_x1, pi_x2;
    RationalMatrix pi_casimir;
    Rational tau_casimir_k;  // asserted C_K eigenvalue of the pairing K-type
    Rational b_rho, b_rho_k;
};

// Built-in model with pi the n-dimensional irreducible representation.
DiracModel sl2_dirac_model(int dim);

struct DiracReport {
    Rational max_defect;    // largest |entry| of D^2 - rhs, exact
    Rational defect_plus;   // restricted to V (x) S+
    Rational defect_minus;  // restricted to V (x) S-
    bool lemma_scalar_ok;   // tau_casimir_k - pi(C) - B(rho) + B(rho_K) == 0
    bool ok;                // max_defect == 0
};

// Builds D = sum_i pi(X_i) (x) c(X_i) on V (x) S over Q(i), squares it, and
// compares with pi (x) s(C_K) - pi(C) (x) 1 - B(rho) + B(rho_K).
DiracReport dirac_square_check(const DiracModel& model, const PolarizedSpace& sp);

}  // namespace epchar
