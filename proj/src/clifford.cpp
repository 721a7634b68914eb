#include "epchar/clifford.hpp"

#include <bit>

#include "epchar/errors.hpp"

#ifdef EPCHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace epchar {

namespace {

void require_same_space(const PolarizedSpace& sp, const CliffordElement& x) {
    if (x.m != sp.m) fail(errc::dimension_mismatch, "element belongs to a different space");
}

}  // namespace

CliffordElement CliffordElement::scalar(const PolarizedSpace& sp, const Rational& c) {
    CliffordElement r(sp.m);
    r.add_term(0, c);
    return r;
}

CliffordElement CliffordElement::generator(const PolarizedSpace& sp, int slot) {
    if (sp.m > 32) fail(errc::dimension_mismatch, "blades are limited to 64 generator slots");
    if (slot < 0 || slot >= sp.slots()) fail(errc::dimension_mismatch, "generator slot");
    CliffordElement r(sp.m);
    r.add_term(Blade(1) << slot, 1);
    return r;
}

bool CliffordElement::is_scalar() const {
    for (const auto& [b, c] : terms)
        if (b != 0) return false;
    return true;
}

bool CliffordElement::is_vector() const {
    if (terms.empty()) return false;
    for (const auto& [b, c] : terms)
        if (std::popcount(b) != 1) return false;
    return true;
}

Rational CliffordElement::coefficient(Blade b) const {
    auto it = terms.find(b);
    return it == terms.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(Blade b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [b, c] : o.terms) r.add_term(b, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [b, c] : o.terms) r.add_term(b, -c);
    return r;
}

CliffordElement CliffordElement::scaled(const Rational& c) const {
    CliffordElement r(m);
    if (c == 0) return r;
    for (const auto& [b, cc] : terms) r.add_term(b, cc * c);
    return r;
}

SpinVector SpinVector::vacuum(const PolarizedSpace& sp) {
    SpinVector s(sp.m);
    s.add_term(0, 1);
    return s;
}

SpinVector SpinVector::basis(const PolarizedSpace& sp, std::uint32_t subset) {
    SpinVector s(sp.m);
    s.add_term(subset, 1);
    return s;
}

void SpinVector::add_term(std::uint32_t subset, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(subset, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SpinVector SpinVector::operator+(const SpinVector& o) const {
    SpinVector r = *this;
    for (const auto& [b, c] : o.terms) r.add_term(b, c);
    return r;
}

SpinVector SpinVector::operator-(const SpinVector& o) const {
    SpinVector r = *this;
    for (const auto& [b, c] : o.terms) r.add_term(b, -c);
    return r;
}

SpinVector SpinVector::scaled(const Rational& c) const {
    SpinVector r(m);
    if (c == 0) return r;
    for (const auto& [b, cc] : terms) r.add_term(b, cc * c);
    return r;
}

Rational bilinear_q(const PolarizedSpace& sp, const CliffordElement& u,
                    const CliffordElement& v) {
    require_same_space(sp, u);
    require_same_space(sp, v);
    if (!u.is_vector() || !v.is_vector()) fail(errc::not_vector, "q needs degree-1 elements");
    Rational r = 0;
    for (int i = 0; i < sp.m; ++i) {
        Blade eb = Blade(1) << i;
        Blade fb = Blade(1) << (sp.m + i);
        r += -(u.coefficient(eb) * v.coefficient(fb) + u.coefficient(fb) * v.coefficient(eb));
    }
    return r;
}

Rational quadratic_q(const PolarizedSpace& sp, const CliffordElement& v) {
    return bilinear_q(sp, v, v);
}

namespace {

// blade * generator: the incoming generator moves left past the letters of
// the canonical word above its slot. Each pass anticommutes (sign flip);
// passing the paired slot additionally emits the contraction term with
// coefficient 2 (from e_i f_i + f_i e_i = -2 q(e_i, f_i) = 2), and landing
// on an occupied slot kills the branch (isotropic generators square to 0).
std::map<Blade, Rational> blade_gen_product(const PolarizedSpace& sp, Blade blade, int gen) {
    std::map<Blade, Rational> out;
    int partner = sp.partner(gen);
    int walk_sign = 1;
    for (int h = sp.slots() - 1; h > gen; --h) {
        if (!(blade & (Blade(1) << h))) continue;
        if (h == partner) out.emplace(blade & ~(Blade(1) << h), Rational(2 * walk_sign));
        walk_sign = -walk_sign;
    }
    if (!(blade & (Blade(1) << gen)))
        out.emplace(blade | (Blade(1) << gen), Rational(walk_sign));
    return out;
}

std::map<Blade, Rational> element_times_blade(const PolarizedSpace& sp,
                                              const std::map<Blade, Rational>& x, Blade b) {
    std::map<Blade, Rational> state = x;
    for (int s = 0; s < sp.slots(); ++s) {
        if (!(b & (Blade(1) << s))) continue;
        std::map<Blade, Rational> next;
        for (const auto& [blade, coeff] : state) {
            for (const auto& [nb, nc] : blade_gen_product(sp, blade, s)) {
                auto [it, inserted] = next.emplace(nb, coeff * nc);
                if (!inserted) {
                    it->second += coeff * nc;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        state = std::move(next);
    }
    return state;
}

}  // namespace

CliffordElement mul_serial(const PolarizedSpace& sp, const CliffordElement& x,
                           const CliffordElement& y) {
    require_same_space(sp, x);
    require_same_space(sp, y);
    CliffordElement r(sp.m);
    for (const auto& [by, cy] : y.terms) {
        auto prod = element_times_blade(sp, x.terms, by);
        for (const auto& [b, c] : prod) r.add_term(b, c * cy);
    }
    return r;
}

CliffordElement mul_parallel(const PolarizedSpace& sp, const CliffordElement& x,
                             const CliffordElement& y) {
#ifndef EPCHAR_HAVE_OPENMP
    return mul_serial(sp, x, y);
#else
    require_same_space(sp, x);
    require_same_space(sp, y);
    std::vector<std::pair<Blade, Rational>> right(y.terms.begin(), y.terms.end());
    int nthreads = omp_get_max_threads();
    std::vector<CliffordElement> partial(nthreads, CliffordElement(sp.m));
#pragma omp parallel num_threads(nthreads)
    {
        auto& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(right.size()); ++i) {
            auto prod = element_times_blade(sp, x.terms, right[i].first);
            for (const auto& [b, c] : prod) local.add_term(b, c * right[i].second);
        }
    }
    CliffordElement r(sp.m);
    for (const auto& part : partial)
        for (const auto& [b, c] : part.terms) r.add_term(b, c);
    return r;
#endif
}

CliffordElement mul(const PolarizedSpace& sp, const CliffordElement& x,
                    const CliffordElement& y) {
#ifdef EPCHAR_HAVE_OPENMP
    if (x.terms.size() * y.terms.size() >= 4096 && omp_get_max_threads() > 1)
        return mul_parallel(sp, x, y);
#endif
    return mul_serial(sp, x, y);
}

SpinVector spin_apply(const PolarizedSpace& sp, const CliffordElement& x, const SpinVector& s) {
    require_same_space(sp, x);
    if (s.m != sp.m) fail(errc::dimension_mismatch, "spin vector belongs to a different space");

    SpinVector result(sp.m);
    for (const auto& [blade, coeff] : x.terms) {
        SpinVector cur = s.scaled(coeff);
        // letters of the canonical word act by composition, rightmost first
        for (int slot = sp.slots() - 1; slot >= 0; --slot) {
            if (!(blade & (Blade(1) << slot))) continue;
            SpinVector next(sp.m);
            if (!sp.is_e(slot)) {
                int i = slot - sp.m;  // f_{i+1} wedges
                for (const auto& [subset, c] : cur.terms) {
                    if (subset & (1u << i)) continue;
                    int sgn = (std::popcount(subset & ((1u << i) - 1)) % 2 == 0) ? 1 : -1;
                    next.add_term(subset | (1u << i), c * sgn);
                }
            } else {
                int i = slot;  // e_{i+1} contracts with coefficient 2
                for (const auto& [subset, c] : cur.terms) {
                    if (!(subset & (1u << i))) continue;
                    int sgn = (std::popcount(subset & ((1u << i) - 1)) % 2 == 0) ? 1 : -1;
                    next.add_term(subset & ~(1u << i), c * sgn * 2);
                }
            }
            cur = std::move(next);
        }
        for (const auto& [subset, c] : cur.terms) result.add_term(subset, c);
    }
    return result;
}

CliffordElement vector_inverse(const PolarizedSpace& sp, const CliffordElement& v) {
    Rational q = quadratic_q(sp, v);
    if (q == 0) fail(errc::not_invertible, "isotropic vector has no inverse");
    return v.scaled(Rational(-1) / q);
}

CliffordElement conjugate(const PolarizedSpace& sp, const CliffordElement& x,
                          const CliffordElement& x_inv, const CliffordElement& v) {
    CliffordElement check = mul(sp, x, x_inv);
    if (!(check == CliffordElement::scalar(sp, 1)))
        fail(errc::not_invertible, "x x_inv is not the unit");
    CliffordElement r = mul(sp, mul(sp, x, v), x_inv);
    if (!r.empty() && !r.is_vector())
        fail(errc::not_vector, "conjugate leaves the span of generators");
    return r;
}

CliffordElement conjugate_by_vectors(const PolarizedSpace& sp,
                                     const std::vector<CliffordElement>& factors,
                                     const CliffordElement& v) {
    CliffordElement x = CliffordElement::scalar(sp, 1);
    CliffordElement x_inv = CliffordElement::scalar(sp, 1);
    for (const CliffordElement& u : factors) {
        if (!u.is_vector()) fail(errc::not_vector, "factor is not a vector");
        x = mul(sp, x, u);
        x_inv = mul(sp, vector_inverse(sp, u), x_inv);
    }
    return conjugate(sp, x, x_inv, v);
}

std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters_serial(
    const std::vector<Weight>& mu, int rank) {
    VirtualCharacter plus(rank), minus(rank);
    std::size_t m = mu.size();
    if (m > 62) fail(errc::dimension_mismatch, "too many weights to enumerate");
    for (std::uint64_t signs = 0; signs < (std::uint64_t(1) << m); ++signs) {
        Weight sum = Weight::zero(rank);
        for (std::size_t i = 0; i < m; ++i)
            sum = sum + (signs & (std::uint64_t(1) << i) ? -mu[i] : mu[i]);
        Weight half = sum.half();
        if (std::popcount(signs) % 2 == 0)
            plus.add_term(half, 1);
        else
            minus.add_term(half, 1);
    }
    return {plus, minus};
}

std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters_parallel(
    const std::vector<Weight>& mu, int rank) {
#ifndef EPCHAR_HAVE_OPENMP
    return half_spin_characters_serial(mu, rank);
#else
    std::size_t m = mu.size();
    int nthreads = omp_get_max_threads();
    std::vector<VirtualCharacter> plus_part(nthreads, VirtualCharacter(rank));
    std::vector<VirtualCharacter> minus_part(nthreads, VirtualCharacter(rank));
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(static)
        for (std::int64_t signs = 0; signs < (std::int64_t(1) << m); ++signs) {
            Weight sum = Weight::zero(rank);
            for (std::size_t i = 0; i < m; ++i)
                sum = sum + ((signs >> i) & 1 ? -mu[i] : mu[i]);
            Weight half = sum.half();
            if (std::popcount(static_cast<std::uint64_t>(signs)) % 2 == 0)
                plus_part[tid].add_term(half, 1);
            else
                minus_part[tid].add_term(half, 1);
        }
    }
    VirtualCharacter plus(rank), minus(rank);
    for (int t = 0; t < nthreads; ++t) {
        for (const auto& [w, c] : plus_part[t].terms()) plus.add_term(w, c);
        for (const auto& [w, c] : minus_part[t].terms()) minus.add_term(w, c);
    }
    return {plus, minus};
#endif
}

std::pair<VirtualCharacter, VirtualCharacter> half_spin_characters(
    const std::vector<Weight>& mu, int rank) {
#ifdef EPCHAR_HAVE_OPENMP
    if (mu.size() >= 14 && omp_get_max_threads() > 1)
        return half_spin_characters_parallel(mu, rank);
#endif
    return half_spin_characters_serial(mu, rank);
}

Weight epsilon_weight(const std::vector<Weight>& mu, int rank) {
    Weight sum = Weight::zero(rank);
    for (const Weight& w : mu) sum = sum + w;
    return sum.half();
}

SpinSquareReport spin_square_report(const std::vector<Weight>& mu, int rank) {
    SpinSquareReport rep;
    auto [plus, minus] = half_spin_characters(mu, rank);
    VirtualCharacter diff = linear_combination(plus, minus, 1, -1);
    rep.lhs = tensor(diff, diff);

    VirtualCharacter v_char(rank);
    for (const Weight& w : mu) {
        v_char.add_term(w, 1);
        v_char.add_term(-w, 1);
    }
    rep.rhs = exterior_alternating(v_char);

    int parity = (mu.size() % 2 == 0) ? 1 : -1;
    VirtualCharacter neg_rhs = linear_combination(VirtualCharacter(rank), rep.rhs, 0, -1);
    bool plus_eq = rep.lhs == rep.rhs;
    bool minus_eq = rep.lhs == neg_rhs;
    if (plus_eq && minus_eq)
        rep.sign = parity;  // both sides vanish
    else if (plus_eq)
        rep.sign = 1;
    else if (minus_eq)
        rep.sign = -1;
    else
        rep.sign = 0;
    rep.equal = (parity == 1) ? plus_eq : minus_eq;
    return rep;
}

EpsilonTwistReport epsilon_twist_report(const std::vector<Weight>& mu, int rank) {
    EpsilonTwistReport rep;
    auto [plus, minus] = half_spin_characters(mu, rank);
    Weight eps = epsilon_weight(mu, rank);
    VirtualCharacter twist = VirtualCharacter::exponential(eps);
    rep.s_plus_twisted = tensor(plus, twist);
    rep.s_minus_twisted = tensor(minus, twist);

    VirtualCharacter v_plus(rank);
    for (const Weight& w : mu) v_plus.add_term(w, 1);
    int n = mu.size();
    rep.even_side = VirtualCharacter(rank);
    rep.odd_side = VirtualCharacter(rank);
    for (int p = 0; p <= n; ++p) {
        VirtualCharacter lp = exterior_power(v_plus, p);
        if (p % 2 == 0)
            rep.even_side = linear_combination(rep.even_side, lp, 1, 1);
        else
            rep.odd_side = linear_combination(rep.odd_side, lp, 1, 1);
    }

    rep.flipped = (mu.size() % 2 == 1);
    if (!rep.flipped)
        rep.parity_matched =
            rep.s_plus_twisted == rep.even_side && rep.s_minus_twisted == rep.odd_side;
    else
        rep.parity_matched =
            rep.s_plus_twisted == rep.odd_side && rep.s_minus_twisted == rep.even_side;
    return rep;
}

SpinorialityReport spinoriality(const CartanDatum& d) {
    if (!d.is_compact_cartan())
        fail(errc::not_compact_cartan, "spinoriality needs a compact Cartan datum");
    SpinorialityReport rep;
    rep.epsilon = d.rho_n;
    rep.lifts = d.rho_n.even();
    return rep;
}

bool orientation_from_p_char(const VirtualCharacter& p_char) {
    // weight of Lambda^top = sum over the support with multiplicity
    std::vector<Int> total(p_char.rank(), Int(0));
    for (const auto& [w, m] : p_char.terms())
        for (int i = 0; i < p_char.rank(); ++i) total[i] += Int(w.coords[i]) * m;
    for (const Int& v : total)
        if (v != 0) return false;
    return true;
}

bool orientation_preserving(const CartanDatum& d) {
    if (!d.is_compact_cartan())
        fail(errc::not_compact_cartan, "orientation check needs a compact Cartan datum");
    return orientation_from_p_char(d.p_char);
}

}  // namespace epchar
