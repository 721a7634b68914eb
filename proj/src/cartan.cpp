#include "epchar/cartan.hpp"

#include <algorithm>

#include "epchar/errors.hpp"

namespace epchar {

const char* root_class_name(RootClass c) {
    switch (c) {
        case RootClass::compact: return "compact";
        case RootClass::noncompact: return "noncompact";
        case RootClass::real: return "real";
        case RootClass::complex_pair: return "complex";
    }
    return "?";
}

RootClass root_class_from_name(const std::string& s) {
    if (s == "compact") return RootClass::compact;
    if (s == "noncompact") return RootClass::noncompact;
    if (s == "real") return RootClass::real;
    if (s == "complex") return RootClass::complex_pair;
    fail(errc::bad_classification, "unknown root class '" + s + "'");
}

Rational CartanDatum::inner(const Weight& a, const Weight& b) const {
    std::vector<Rational> vb(rank);
    for (int i = 0; i < rank; ++i) vb[i] = Rational(b.coords[i]);
    std::vector<Rational> gb = gram.apply(vb);
    Rational r = 0;
    for (int i = 0; i < rank; ++i) r += Rational(a.coords[i]) * gb[i];
    return r;
}

bool CartanDatum::is_compact_cartan() const {
    return std::all_of(root_class.begin(), root_class.end(), [](RootClass c) {
        return c == RootClass::compact || c == RootClass::noncompact;
    });
}

bool CartanDatum::all_compact() const {
    return std::all_of(root_class.begin(), root_class.end(),
                       [](RootClass c) { return c == RootClass::compact; });
}

std::vector<Weight> CartanDatum::compact_positive_roots() const {
    std::vector<Weight> r;
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (root_class[i] == RootClass::compact) r.push_back(positive_roots[i]);
    return r;
}

std::vector<Weight> CartanDatum::noncompact_positive_roots() const {
    std::vector<Weight> r;
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (root_class[i] == RootClass::noncompact) r.push_back(positive_roots[i]);
    return r;
}

CartanDatum CartanDatum::compact_subdatum() const {
    CartanDatum k;
    k.rank = rank;
    k.name = name + ":K";
    k.positive_roots = compact_positive_roots();
    k.root_class.assign(k.positive_roots.size(), RootClass::compact);
    k.gram = gram;
    k.extra_weyl_generators = extra_weyl_generators;
    derive_unchecked(k);
    return k;
}

bool CartanDatum::dominant_for_compact(const Weight& w) const {
    for (const Weight& alpha : compact_positive_roots())
        if (inner(w, alpha) < 0) return false;
    return true;
}

namespace {

Weight half_sum(const std::vector<Weight>& roots, int rank) {
    Weight sum = Weight::zero(rank);
    for (const Weight& r : roots) sum = sum + r;
    for (auto& c : sum.coords) {
        if (c % 2 != 0)
            fail(errc::validation_error, "half sum of roots leaves the doubled lattice");
        c /= 2;
    }
    return sum;
}

}  // namespace

void derive_unchecked(CartanDatum& d, std::size_t weyl_bound) {
    d.rho = half_sum(d.positive_roots, d.rank);
    d.rho_k = half_sum(d.compact_positive_roots(), d.rank);
    d.rho_n = half_sum(d.noncompact_positive_roots(), d.rank);

    d.p_char = VirtualCharacter(d.rank);
    for (const Weight& beta : d.noncompact_positive_roots()) {
        d.p_char.add_term(beta, 1);
        d.p_char.add_term(-beta, 1);
    }

    std::vector<WeylElement> gens;
    for (const Weight& alpha : d.compact_positive_roots())
        gens.push_back(reflection(alpha, d.gram));
    for (const auto& g : d.extra_weyl_generators) gens.push_back(g);
    d.weyl = enumerate_group(gens, d.rank, weyl_bound);
}

CartanDatum build_cartan_datum(const RawCartanDatum& raw, std::size_t weyl_bound) {
    if (raw.rank <= 0) fail(errc::validation_error, "rank must be positive");
    if (raw.positive_roots.size() != raw.root_class.size())
        fail(errc::bad_classification, "one class tag required per root");
    if (raw.gram.rows != static_cast<std::size_t>(raw.rank) ||
        raw.gram.cols != static_cast<std::size_t>(raw.rank))
        fail(errc::gram_not_symmetric, "gram matrix must be rank x rank");
    for (std::size_t i = 0; i < raw.gram.rows; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (raw.gram(i, j) != raw.gram(j, i))
                fail(errc::gram_not_symmetric, "gram matrix is not symmetric");

    CartanDatum d;
    d.rank = raw.rank;
    d.name = raw.name;
    d.positive_roots = raw.positive_roots;
    d.root_class = raw.root_class;
    d.gram = raw.gram;

    for (const Weight& r : d.positive_roots) {
        if (r.rank() != d.rank) fail(errc::rank_mismatch, "root rank differs from datum rank");
        if (r.is_zero()) fail(errc::validation_error, "zero root");
    }

    // Positive definiteness of the form on the span of the compact roots:
    // the Gram matrix of the compact roots must be positive semidefinite and
    // each compact root must have positive norm (reflection() checks that).
    std::vector<Weight> compact = d.compact_positive_roots();
    RationalMatrix croots(compact.size(), compact.size());
    for (std::size_t i = 0; i < compact.size(); ++i)
        for (std::size_t j = 0; j < compact.size(); ++j)
            croots(i, j) = d.inner(compact[i], compact[j]);
    if (!positive_semidefinite(croots))
        fail(errc::gram_not_symmetric, "form is not positive on the compact-root span");

    for (const auto& g : raw.extra_weyl_generators) {
        if (g.rows != static_cast<std::size_t>(d.rank) ||
            g.cols != static_cast<std::size_t>(d.rank))
            fail(errc::validation_error, "extra Weyl generator has wrong shape");
        d.extra_weyl_generators.push_back({g, matrix_sign(g)});
    }

    derive_unchecked(d, weyl_bound);

    // Reflections in compact roots must permute the root set up to sign and
    // preserve the classification.
    auto find_root = [&](const Weight& w) -> int {
        for (std::size_t i = 0; i < d.positive_roots.size(); ++i)
            if (d.positive_roots[i] == w || -d.positive_roots[i] == w)
                return static_cast<int>(i);
        return -1;
    };
    for (const Weight& alpha : compact) {
        WeylElement s = reflection(alpha, d.gram);
        for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
            int j = find_root(s.apply(d.positive_roots[i]));
            if (j < 0)
                fail(errc::bad_classification,
                     "compact reflection does not permute the root set");
            if (d.root_class[j] != d.root_class[i])
                fail(errc::bad_classification,
                     "compact reflection does not preserve the root classification");
        }
    }

    return d;
}

}  // namespace epchar
