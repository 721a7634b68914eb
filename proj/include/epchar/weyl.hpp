#pragma once

#include <cstdint>
#include <vector>

#include "epchar/ratmat.hpp"
#include "epchar/weight.hpp"

namespace epchar {

// Integer matrix acting on the doubled weight lattice, together with its
// determinant sign.
struct WeylElement {
    Mat<std::int64_t> matrix;
    int sign = 1;

    Weight apply(const Weight& w) const {
        Weight r = Weight::zero(static_cast<int>(matrix.rows));
        for (std::size_t i = 0; i < matrix.rows; ++i)
            for (std::size_t j = 0; j < matrix.cols; ++j)
                r.coords[i] += matrix(i, j) * w.coords[j];
        return r;
    }

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

WeylElement weyl_identity(int rank);

// Reflection in a root, using the bilinear form: s(x) = x - (2<x,a>/<a,a>) a.
// The matrix must be integral on the doubled lattice.
WeylElement reflection(const Weight& root, const RationalMatrix& gram);

int matrix_sign(const Mat<std::int64_t>& m);

// Closure of the generators under multiplication, breadth first, duplicates
// removed; includes the identity. Throws GroupTooLarge past the bound.
std::vector<WeylElement> enumerate_group(const std::vector<WeylElement>& generators, int rank,
                                         std::size_t bound = 100000);

}  // namespace epchar
