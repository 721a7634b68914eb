#include "epchar/weyl.hpp"

#include <deque>
#include <set>

#include "epchar/errors.hpp"

namespace epchar {

WeylElement weyl_identity(int rank) {
    return {Mat<std::int64_t>::identity(rank), 1};
}

int matrix_sign(const Mat<std::int64_t>& m) {
    RationalMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(i, j) = Rational(m(i, j));
    Rational d = determinant(r);
    if (d == 1) return 1;
    if (d == -1) return -1;
    fail(errc::validation_error, "group element has determinant " + rational_str(d));
}

WeylElement reflection(const Weight& root, const RationalMatrix& gram) {
    int n = root.rank();
    std::vector<Rational> alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = Rational(root.coords[i]);
    std::vector<Rational> g_alpha = gram.apply(alpha);
    Rational norm = 0;
    for (int i = 0; i < n; ++i) norm += alpha[i] * g_alpha[i];
    if (norm <= 0) fail(errc::bad_classification, "root with nonpositive norm");

    // s = I - (2/<a,a>) a (Ga)^T
    Mat<std::int64_t> s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational entry = (i == j ? Rational(1) : Rational(0)) -
                             Rational(2) * alpha[i] * g_alpha[j] / norm;
            if (denominator(entry) != 1)
                fail(errc::bad_classification, "reflection is not integral on the lattice");
            s(i, j) = numerator(entry).convert_to<std::int64_t>();
        }
    return {s, -1};
}

std::vector<WeylElement> enumerate_group(const std::vector<WeylElement>& generators, int rank,
                                         std::size_t bound) {
    auto key = [](const Mat<std::int64_t>& m) { return m.data; };

    std::vector<WeylElement> elements;
    std::set<std::vector<std::int64_t>> seen;
    std::deque<std::size_t> frontier;

    WeylElement id = weyl_identity(rank);
    elements.push_back(id);
    seen.insert(key(id.matrix));
    frontier.push_back(0);

    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        WeylElement current = elements[idx];
        for (const auto& g : generators) {
            WeylElement next{g.matrix * current.matrix, g.sign * current.sign};
            if (seen.insert(key(next.matrix)).second) {
                if (elements.size() >= bound)
                    fail(errc::group_too_large,
                         "group exceeds bound " + std::to_string(bound));
                elements.push_back(next);
                frontier.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}

}  // namespace epchar
