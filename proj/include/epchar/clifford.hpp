#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "epchar/cartan.hpp"
#include "epchar/numeric.hpp"
#include "epchar/virtual_character.hpp"
#include "epchar/weight.hpp"

namespace epchar {

// Polarized quadratic space of dimension 2m: V+ spanned by e_1..e_m, V- by
// f_1..f_m, both isotropic, coupled by q(e_i, f_j) = -delta_ij. Generator
// slots are numbered e_i -> i-1, f_i -> m+i-1; the canonical blade order is
// e_1 < ... < e_m < f_1 < ... < f_m.
struct PolarizedSpace {
    int m = 0;

    int dim() const { return 2 * m; }
    int slots() const { return 2 * m; }
    bool is_e(int slot) const { return slot < m; }
    int partner(int slot) const { return slot < m ? slot + m : slot - m; }
};

using Blade = std::uint64_t;

// Element of the Clifford algebra: rational combination of canonical blades.
struct CliffordElement {
    int m = 0;
    std::map<Blade, Rational> terms;

    CliffordElement() = default;
    explicit CliffordElement(int m_) : m(m_) {}

    static CliffordElement zero(const PolarizedSpace& sp) { return CliffordElement(sp.m); }
    static CliffordElement scalar(const PolarizedSpace& sp, const Rational& c);
    static CliffordElement generator(const PolarizedSpace& sp, int slot);
    static CliffordElement e(const PolarizedSpace& sp, int i) { return generator(sp, i - 1); }
    static CliffordElement f(const PolarizedSpace& sp, int i) {
        return generator(sp, sp.m + i - 1);
    }

    bool empty() const { return terms.empty(); }
    bool is_scalar() const;
    bool is_vector() const;  // homogeneous of blade degree 1
    Rational coefficient(Blade b) const;
    void add_term(Blade b, const Rational& c);

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement scaled(const Rational& c) const;
    bool operator==(const CliffordElement& o) const = default;
};

// Element of the spin module S = Lambda^* V^-: rational combination of
// subsets of the f-generators.
struct SpinVector {
    int m = 0;
    std::map<std::uint32_t, Rational> terms;

    SpinVector() = default;
    explicit SpinVector(int m_) : m(m_) {}

    static SpinVector vacuum(const PolarizedSpace& sp);
    static SpinVector basis(const PolarizedSpace& sp, std::uint32_t subset);

    bool empty() const { return terms.empty(); }
    void add_term(std::uint32_t subset, const Rational& c);
    SpinVector operator+(const SpinVector& o) const;
    SpinVector operator-(const SpinVector& o) const;
    SpinVector scaled(const Rational& c) const;
    bool operator==(const SpinVector& o) const = default;
};

// Bilinear form on degree-1 elements: q(e_i, f_i) = -1, isotropic otherwise.
Rational bilinear_q(const PolarizedSpace& sp, const CliffordElement& u,
                    const CliffordElement& v);
// Quadratic value q(v) = q(v, v).
Rational quadratic_q(const PolarizedSpace& sp, const CliffordElement& v);

// Clifford product with the relation uv + vu = -2 q(u,v).
CliffordElement mul(const PolarizedSpace& sp, const CliffordElement& x,
                    const CliffordElement& y);
CliffordElement mul_serial(const PolarizedSpace& sp, const CliffordElement& x,
                           const CliffordElement& y);
CliffordElement mul_parallel(const PolarizedSpace& sp, const CliffordElement& x,
                             const CliffordElement& y);

// Module action on S: f_i wedges, e_i contracts (with the coefficient 2
// forced by q(e_i, f_i) = -1), blades act by composition.
SpinVector spin_apply(const PolarizedSpace& sp, const CliffordElement& x, const SpinVector& s);

// Inverse of a non-isotropic vector: v^{-1} = -v / q(v).
CliffordElement vector_inverse(const PolarizedSpace& sp, const CliffordElement& v);

// x v x^{-1} with x given together with its inverse. Throws NotInvertible if
// x x_inv != 1 and NotVector if the result leaves the span of generators.
CliffordElement conjugate(const PolarizedSpace& sp, const CliffordElement& x,
                          const CliffordElement& x_inv, const CliffordElement& v);

// Same, with x presented as a product of non-isotropic vectors.
CliffordElement conjugate_by_vectors(const PolarizedSpace& sp,
                                     const std::vector<CliffordElement>& factors,
                                     const CliffordElement& v);

// Characters of the half spin representations for p-weights mu_1..mu_m:
// weights (sum of +-mu_i)/2 with an even (S+) resp. odd (S-) number of
// minus signs.
std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters(
    const std::vector<Weight>& mu, int rank);
std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters_serial(
    const std::vector<Weight>& mu, int rank);
std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters_parallel(
    const std::vector<Weight>& mu, int rank);

// The determinant square root weight (mu_1 + ... + mu_m)/2.
Weight epsilon_weight(const std::vector<Weight>& mu, int rank);

struct SpinSquareReport {
    VirtualCharacter lhs;   // (ch S+ - ch S-)^{x2}
    VirtualCharacter rhs;   // Lambda_{-1} of ch V
    int sign = 0;           // lhs = sign * rhs; (-1)^m when both vanish
    bool equal = false;     // lhs == (-1)^m rhs
};
SpinSquareReport spin_square_report(const std::vector<Weight>& mu, int rank);

struct EpsilonTwistReport {
    bool parity_matched = false;  // matches with the flip-iff-m-odd rule
    bool flipped = false;         // m odd
    VirtualCharacter even_side;   // Lambda^{even} ch V+
    VirtualCharacter odd_side;    // Lambda^{odd} ch V+
    VirtualCharacter s_plus_twisted, s_minus_twisted;
};
EpsilonTwistReport epsilon_twist_report(const std::vector<Weight>& mu, int rank);

struct SpinorialityReport {
    bool lifts = false;
    Weight epsilon;  // rho_n, doubled coordinates
};
// The adjoint map of a compact-Cartan datum factors over the spin group iff
// rho_n is a genuine torus character (even doubled coordinates).
SpinorialityReport spinoriality(const CartanDatum& d);

// True iff the top exterior power of p_char is the trivial character.
bool orientation_from_p_char(const VirtualCharacter& p_char);
bool orientation_preserving(const CartanDatum& d);

}  // namespace epchar
