#pragma once

#include <string>
#include <vector>

#include "epchar/ratmat.hpp"
#include "epchar/virtual_character.hpp"
#include "epchar/weyl.hpp"

namespace epchar {

enum class RootClass { compact, noncompact, real, complex_pair };

const char* root_class_name(RootClass c);
RootClass root_class_from_name(const std::string& s);

// Root system of a Cartan subgroup with compact/noncompact classification,
// the bilinear form on the (doubled) weight lattice, and everything derived
// from them: the half sums, the character of p and the Weyl group generated
// by reflections in compact roots (plus any explicitly supplied extra
// generators, for disconnected groups).
//
// Fields are public so degenerate data can be assembled directly in tests;
// build_cartan_datum is the validating entry point.
struct CartanDatum {
    int rank = 0;
    std::string name;
    std::vector<Weight> positive_roots;     // doubled coordinates
    std::vector<RootClass> root_class;
    RationalMatrix gram;                    // form on doubled coordinates
    std::vector<WeylElement> extra_weyl_generators;

    // Derived on construction.
    Weight rho, rho_k, rho_n;               // doubled; always integral there
    VirtualCharacter p_char;                // sum over noncompact roots of e^a + e^-a
    std::vector<WeylElement> weyl;          // full enumerated group

    Rational inner(const Weight& a, const Weight& b) const;

    bool is_compact_cartan() const;   // only imaginary (compact/noncompact) roots
    bool all_compact() const;

    std::vector<Weight> compact_positive_roots() const;
    std::vector<Weight> noncompact_positive_roots() const;

    // Root subsystem of the maximal compact subgroup, same lattice and form.
    CartanDatum compact_subdatum() const;

    bool dominant_for_compact(const Weight& w) const;

    std::size_t weyl_order() const { return weyl.size(); }
};

struct RawCartanDatum {
    int rank = 0;
    std::string name;
    std::vector<Weight> positive_roots;
    std::vector<RootClass> root_class;
    RationalMatrix gram;
    std::vector<Mat<std::int64_t>> extra_weyl_generators;
};

CartanDatum build_cartan_datum(const RawCartanDatum& raw, std::size_t weyl_bound = 100000);

// Recomputes the derived fields of a hand-assembled datum without any
// validation. Intended for tests that need degenerate data.
void derive_unchecked(CartanDatum& d, std::size_t weyl_bound = 100000);

}  // namespace epchar
