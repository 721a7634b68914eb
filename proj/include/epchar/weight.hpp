#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "epchar/errors.hpp"
#include "epchar/numeric.hpp"

namespace epchar {

// Weight of a compact torus, stored in the doubled character lattice: the
// true weight is coords/2, so half-integral weights (half-spin weights,
// rho for odd root sums) stay integral. All weights inside one computation
// share the same rank.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (auto v : coords)
            if (v != 0) return false;
        return true;
    }

    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& v : r.coords) v = -v;
        return r;
    }
    Weight operator*(std::int64_t k) const {
        Weight r = *this;
        for (auto& v : r.coords) v *= k;
        return r;
    }

    // Exact halving; throws if some coordinate is odd.
    Weight half() const {
        Weight r = *this;
        for (auto& v : r.coords) {
            if (v % 2 != 0) fail(errc::validation_error, "weight not halvable in the doubled lattice");
            v /= 2;
        }
        return r;
    }
    bool even() const {
        for (auto v : coords)
            if (v % 2 != 0) return false;
        return true;
    }
};

// Converts true-coordinate rationals (denominator 1 or 2) to doubled integers.
inline Weight weight_from_true(const std::vector<Rational>& true_coords) {
    Weight w;
    w.coords.reserve(true_coords.size());
    for (const auto& c : true_coords) {
        Rational d = c * 2;
        if (denominator(d) != 1)
            fail(errc::validation_error, "weight coordinate " + rational_str(c) +
                                             " has denominator > 2");
        w.coords.push_back(numerator(d).convert_to<std::int64_t>());
    }
    return w;
}

inline std::vector<Rational> weight_to_true(const Weight& w) {
    std::vector<Rational> r;
    r.reserve(w.coords.size());
    for (auto c : w.coords) r.emplace_back(Int(c), Int(2));
    return r;
}

// Elliptic element t = exp(i*theta) of the torus, one angle per coordinate.
// A doubled weight lambda evaluates at t as exp(i*(lambda.theta)/2).
struct TorusPoint {
    std::vector<double> angles;

    TorusPoint() = default;
    explicit TorusPoint(std::vector<double> a) : angles(std::move(a)) {}

    int rank() const { return static_cast<int>(angles.size()); }
};

}  // namespace epchar
