#include "epchar/charlat.hpp"

#include "epchar/errors.hpp"

#ifdef EPCHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace epchar {

VirtualCharacter alternating_orbit_sum_serial(const CartanDatum& d, const Weight& lam) {
    VirtualCharacter r(d.rank);
    for (const WeylElement& w : d.weyl) r.add_term(w.apply(lam), w.sign);
    return r;
}

VirtualCharacter alternating_orbit_sum_parallel(const CartanDatum& d, const Weight& lam) {
#ifndef EPCHAR_HAVE_OPENMP
    return alternating_orbit_sum_serial(d, lam);
#else
    // The matrix applies split across threads; the exact merge makes the
    // result identical to the serial kernel for any thread count.
    int nthreads = omp_get_max_threads();
    std::vector<VirtualCharacter::TermMap> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
        auto& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(d.weyl.size()); ++i) {
            auto [it, inserted] =
                local.emplace(d.weyl[i].apply(lam), Int(d.weyl[i].sign));
            if (!inserted) it->second += d.weyl[i].sign;
        }
    }
    VirtualCharacter r(d.rank);
    for (auto& part : partial)
        for (auto& [w, m] : part) r.add_term(w, m);
    return r;
#endif
}

VirtualCharacter alternating_orbit_sum(const CartanDatum& d, const Weight& lam) {
#ifdef EPCHAR_HAVE_OPENMP
    if (d.weyl.size() >= 4096 && omp_get_max_threads() > 1)
        return alternating_orbit_sum_parallel(d, lam);
#endif
    return alternating_orbit_sum_serial(d, lam);
}

VirtualCharacter divide_exact(const VirtualCharacter& num, const VirtualCharacter& den) {
    if (num.rank() != den.rank()) fail(errc::rank_mismatch, "quotient rank");
    if (den.empty()) fail(errc::validation_error, "division by the zero character");

    // Cancel lexicographically leading terms. Because the leading term of a
    // product is the product of leading terms, this terminates in exactly
    // |support(quotient)| steps whenever the quotient exists.
    const auto& lead = *den.terms().rbegin();
    VirtualCharacter quotient(num.rank());
    VirtualCharacter rem = num;
    std::size_t guard = 0;
    while (!rem.empty()) {
        if (++guard > 2000000) fail(errc::validation_error, "character division diverges");
        const auto& top = *rem.terms().rbegin();
        Int q = top.second / lead.second;
        if (q * lead.second != top.second)
            fail(errc::non_integral_coefficient, "character division is not exact");
        Weight shift = top.first - lead.first;
        quotient.add_term(shift, q);
        VirtualCharacter piece(num.rank());
        for (const auto& [w, m] : den.terms()) piece.add_term(w + shift, m * q);
        rem = linear_combination(rem, piece, 1, -1);
    }
    return quotient;
}

VirtualCharacter irreducible_character(const CartanDatum& d, const Weight& lam) {
    if (!d.all_compact()) fail(errc::not_compact_datum, "datum has noncompact roots");
    for (const Weight& alpha : d.positive_roots)
        if (d.inner(lam, alpha) < 0) fail(errc::not_dominant, "highest weight not dominant");

    VirtualCharacter numerator = alternating_orbit_sum(d, lam + d.rho);
    VirtualCharacter denominator = alternating_orbit_sum(d, d.rho);
    return divide_exact(numerator, denominator);
}

Rational weyl_dimension(const CartanDatum& d, const Weight& lam) {
    Rational dim = 1;
    for (const Weight& alpha : d.positive_roots)
        dim *= d.inner(lam + d.rho, alpha) / d.inner(d.rho, alpha);
    return dim;
}

Rational inner_product(const CartanDatum& d, const VirtualCharacter& a,
                       const VirtualCharacter& b) {
    if (!d.all_compact())
        fail(errc::not_compact_datum, "inner product needs a compact-type datum");

    VirtualCharacter density = VirtualCharacter::trivial(d.rank);
    for (const Weight& alpha : d.positive_roots) {
        VirtualCharacter factor(d.rank);
        factor.add_term(Weight::zero(d.rank), 2);
        factor.add_term(alpha, -1);
        factor.add_term(-alpha, -1);
        density = tensor(density, factor);
    }
    VirtualCharacter integrand = tensor(tensor(a, dual(b)), density);
    return Rational(constant_term(integrand), Int(d.weyl_order()));
}

bool is_regular(const CartanDatum& d, const Weight& w) {
    const auto id = Mat<std::int64_t>::identity(d.rank);
    for (const WeylElement& g : d.weyl)
        if (g.apply(w) == w && !(g.matrix == id)) return false;
    return true;
}

std::pair<Weight, int> orbit_representative(const CartanDatum& d, const Weight& w) {
    Weight best = w;
    int sign = 1;
    for (const WeylElement& g : d.weyl) {
        Weight cand = g.apply(w);
        if (best < cand) {
            best = cand;
            sign = g.sign;
        }
    }
    return {best, sign};
}

}  // namespace epchar
