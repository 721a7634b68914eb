#pragma once

#include <complex>
#include <map>
#include <vector>

#include "epchar/numeric.hpp"
#include "epchar/weight.hpp"

namespace epchar {

// Finitely supported integer-valued function on torus weights, the common
// currency of the whole library. Zero multiplicities are never stored.
// Values are immutable in spirit: every operation returns a fresh character.
class VirtualCharacter {
public:
    using TermMap = std::map<Weight, Int>;

    VirtualCharacter() : rank_(0) {}
    explicit VirtualCharacter(int rank) : rank_(rank) {}

    static VirtualCharacter zero(int rank) { return VirtualCharacter(rank); }
    static VirtualCharacter exponential(const Weight& w, Int mult = 1);
    static VirtualCharacter trivial(int rank) { return exponential(Weight::zero(rank)); }

    int rank() const { return rank_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const Weight& w) const;
    // Total dimension: sum of multiplicities.
    Int dimension() const;
    bool is_effective() const;
    bool operator==(const VirtualCharacter& o) const = default;

    void add_term(const Weight& w, const Int& mult);

private:
    int rank_;
    TermMap terms_;
};

// ca*a + cb*b, zero entries pruned.
VirtualCharacter linear_combination(const VirtualCharacter& a, const VirtualCharacter& b,
                                    const Int& ca, const Int& cb);

// Product of characters: convolution of supports.
VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter tensor_serial(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter tensor_parallel(const VirtualCharacter& a, const VirtualCharacter& b);

// Negates every support weight.
VirtualCharacter dual(const VirtualCharacter& a);

// p-th exterior power of an effective character, from the generating product
// prod_lambda (1 + t e^lambda)^m truncated at degree p.
VirtualCharacter exterior_power(const VirtualCharacter& a, int p);

// Lambda_{-1}: sum_p (-1)^p Lambda^p(a) = prod_lambda (1 - e^lambda)^m.
VirtualCharacter exterior_alternating(const VirtualCharacter& a);

// Multiplicity of the zero weight.
Int constant_term(const VirtualCharacter& a);

// sum_lambda m_lambda exp(i*(lambda.theta)/2).
std::complex<double> evaluate(const VirtualCharacter& a, const TorusPoint& t);
std::complex<double> evaluate_weight(const Weight& w, const TorusPoint& t);

}  // namespace epchar
