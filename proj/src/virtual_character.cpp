#include "epchar/virtual_character.hpp"

#include <cmath>
#include <cstdlib>

#include "epchar/errors.hpp"

#ifdef EPCHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace epchar {

namespace {

void require_same_rank(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.rank() != b.rank())
        fail(errc::rank_mismatch,
             "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
}

// Support sizes above which tensor() switches to the OpenMP kernel.
constexpr std::size_t kParallelWorkThreshold = 1 << 14;

bool parallel_worthwhile(std::size_t work) {
#ifdef EPCHAR_HAVE_OPENMP
    return work >= kParallelWorkThreshold && omp_get_max_threads() > 1;
#else
    (void)work;
    return false;
#endif
}

}  // namespace

VirtualCharacter VirtualCharacter::exponential(const Weight& w, Int mult) {
    VirtualCharacter c(w.rank());
    c.add_term(w, mult);
    return c;
}

Int VirtualCharacter::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

Int VirtualCharacter::dimension() const {
    Int d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
}

bool VirtualCharacter::is_effective() const {
    for (const auto& [w, m] : terms_)
        if (m < 0) return false;
    return true;
}

void VirtualCharacter::add_term(const Weight& w, const Int& mult) {
    if (mult == 0) return;
    if (w.rank() != rank_) fail(errc::rank_mismatch, "term rank differs from character rank");
    auto [it, inserted] = terms_.emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

VirtualCharacter linear_combination(const VirtualCharacter& a, const VirtualCharacter& b,
                                    const Int& ca, const Int& cb) {
    require_same_rank(a, b);
    VirtualCharacter r(a.rank());
    for (const auto& [w, m] : a.terms()) r.add_term(w, ca * m);
    for (const auto& [w, m] : b.terms()) r.add_term(w, cb * m);
    return r;
}

VirtualCharacter tensor_serial(const VirtualCharacter& a, const VirtualCharacter& b) {
    require_same_rank(a, b);
    VirtualCharacter r(a.rank());
    for (const auto& [wa, ma] : a.terms())
        for (const auto& [wb, mb] : b.terms()) r.add_term(wa + wb, ma * mb);
    return r;
}

namespace {

std::uint64_t weight_hash(const std::vector<std::int64_t>& coords) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t c : coords) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

VirtualCharacter tensor_parallel(const VirtualCharacter& a, const VirtualCharacter& b) {
    require_same_rank(a, b);
#ifndef EPCHAR_HAVE_OPENMP
    return tensor_serial(a, b);
#else
    std::vector<const std::pair<const Weight, Int>*> left, right;
    left.reserve(a.support_size());
    right.reserve(b.support_size());
    for (const auto& t : a.terms()) left.push_back(&t);
    for (const auto& t : b.terms()) right.push_back(&t);

    // Each thread owns a disjoint slice of the output keys (by hash), so the
    // partial maps never overlap and the expensive multiply/accumulate work
    // is split without a merge pass. Sums are exact; the result is identical
    // to the serial kernel whatever the thread count.
    int nthreads = omp_get_max_threads();
    std::vector<VirtualCharacter::TermMap> partial(nthreads);
    int rank = a.rank();

#pragma omp parallel num_threads(nthreads)
    {
        unsigned tid = static_cast<unsigned>(omp_get_thread_num());
        unsigned nth = static_cast<unsigned>(omp_get_num_threads());
        auto& local = partial[tid];
        std::vector<std::int64_t> sum(rank);
        for (const auto* ta : left) {
            const auto& [wa, ma] = *ta;
            for (const auto* tb : right) {
                const auto& [wb, mb] = *tb;
                for (int i = 0; i < rank; ++i) sum[i] = wa.coords[i] + wb.coords[i];
                if (weight_hash(sum) % nth != tid) continue;
                auto [it, inserted] = local.emplace(Weight(sum), ma * mb);
                if (!inserted) it->second += ma * mb;
            }
        }
    }

    VirtualCharacter r(rank);
    for (auto& part : partial)
        for (auto& [w, m] : part) r.add_term(w, m);
    return r;
#endif
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
    std::size_t work = a.support_size() * b.support_size();
    if (parallel_worthwhile(work)) return tensor_parallel(a, b);
    return tensor_serial(a, b);
}

VirtualCharacter dual(const VirtualCharacter& a) {
    VirtualCharacter r(a.rank());
    for (const auto& [w, m] : a.terms()) r.add_term(-w, m);
    return r;
}

VirtualCharacter exterior_power(const VirtualCharacter& a, int p) {
    if (p < 0) fail(errc::validation_error, "negative exterior power");
    if (!a.is_effective())
        fail(errc::negative_multiplicity, "exterior power of a virtual character");

    // Degree-truncated product of (1 + t e^lambda)^m over the support.
    std::vector<VirtualCharacter> by_degree(p + 1, VirtualCharacter::zero(a.rank()));
    by_degree[0] = VirtualCharacter::trivial(a.rank());
    for (const auto& [lambda, mult] : a.terms()) {
        std::vector<VirtualCharacter> next(p + 1, VirtualCharacter::zero(a.rank()));
        for (int d = 0; d <= p; ++d) {
            if (by_degree[d].empty()) continue;
            for (int k = 0; d + k <= p; ++k) {
                Int coeff = binomial(mult, k);
                if (coeff == 0) break;
                VirtualCharacter shift =
                    VirtualCharacter::exponential(lambda * k, coeff);
                next[d + k] = linear_combination(next[d + k], tensor(by_degree[d], shift), 1, 1);
            }
        }
        by_degree = std::move(next);
    }
    return by_degree[p];
}

VirtualCharacter exterior_alternating(const VirtualCharacter& a) {
    if (!a.is_effective())
        fail(errc::negative_multiplicity, "alternating exterior sum of a virtual character");
    VirtualCharacter r = VirtualCharacter::trivial(a.rank());
    for (const auto& [lambda, mult] : a.terms()) {
        // (1 - e^lambda)^m, expanded by the binomial theorem.
        VirtualCharacter factor(a.rank());
        std::uint64_t m = mult.convert_to<std::uint64_t>();
        for (std::uint64_t k = 0; k <= m; ++k) {
            Int c = binomial(mult, k);
            if (k % 2 == 1) c = -c;
            factor.add_term(lambda * static_cast<std::int64_t>(k), c);
        }
        r = tensor(r, factor);
        if (r.empty()) break;
    }
    return r;
}

Int constant_term(const VirtualCharacter& a) {
    return a.coefficient(Weight::zero(a.rank()));
}

std::complex<double> evaluate_weight(const Weight& w, const TorusPoint& t) {
    if (w.rank() != t.rank()) fail(errc::rank_mismatch, "weight rank differs from torus rank");
    double phase = 0.0;
    for (int i = 0; i < w.rank(); ++i) phase += static_cast<double>(w.coords[i]) * t.angles[i];
    phase *= 0.5;  // undo the lattice doubling
    return {std::cos(phase), std::sin(phase)};
}

std::complex<double> evaluate(const VirtualCharacter& a, const TorusPoint& t) {
    std::complex<double> sum = 0.0;
    for (const auto& [w, m] : a.terms()) sum += to_double(m) * evaluate_weight(w, t);
    return sum;
}

}  // namespace epchar
