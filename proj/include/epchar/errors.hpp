#pragma once

#include <stdexcept>
#include <string>

namespace epchar {

enum class errc {
    rank_mismatch,
    negative_multiplicity,
    group_too_large,
    not_dominant,
    not_compact_datum,
    not_compact_cartan,
    not_subcharacter,
    singular_element,
    non_integral_coefficient,
    not_invertible,
    not_vector,
    dimension_mismatch,
    zero_constant,
    bad_classification,
    gram_not_symmetric,
    parse_error,
    validation_error,
};

inline const char* errc_name(errc k) {
    switch (k) {
        case errc::rank_mismatch: return "RankMismatch";
        case errc::negative_multiplicity: return "NegativeMultiplicity";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::not_dominant: return "NotDominant";
        case errc::not_compact_datum: return "NotCompactDatum";
        case errc::not_compact_cartan: return "NotCompactCartan";
        case errc::not_subcharacter: return "NotSubcharacter";
        case errc::singular_element: return "SingularElement";
        case errc::non_integral_coefficient: return "NonIntegralCoefficient";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_vector: return "NotVector";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::zero_constant: return "ZeroConstant";
        case errc::bad_classification: return "BadClassification";
        case errc::gram_not_symmetric: return "GramNotSymmetric";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

class calc_error : public std::runtime_error {
public:
    calc_error(errc k, const std::string& msg)
        : std::runtime_error(std::string(errc_name(k)) + ": " + msg), kind_(k) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw calc_error(k, msg); }

}  // namespace epchar
