// The OpenMP kernels must agree exactly with their serial references.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epchar/charlat.hpp"
#include "epchar/clifford.hpp"

#ifdef EPCHAR_HAVE_OPENMP
#include <omp.h>
#endif

using namespace epchar;

namespace {

VirtualCharacter random_character(int rank, std::size_t terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-15, 15);
    std::uniform_int_distribution<int> mult(-4, 4);
    VirtualCharacter c(rank);
    while (c.support_size() < terms) {
        Weight w = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) w.coords[i] = coord(rng);
        int m = mult(rng);
        c.add_term(w, m == 0 ? 1 : m);
    }
    return c;
}

}  // namespace

TEST_CASE("tensor kernels agree exactly") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        VirtualCharacter a = random_character(2, 120, seed);
        VirtualCharacter b = random_character(2, 90, seed + 100);
        CHECK(tensor_serial(a, b) == tensor_parallel(a, b));
        CHECK(tensor(a, b) == tensor_serial(a, b));
    }
}

TEST_CASE("orbit sum kernels agree exactly") {
    RawCartanDatum raw;
    raw.rank = 6;
    raw.name = "a1^6";
    raw.gram = RationalMatrix(6, 6);
    for (int i = 0; i < 6; ++i) {
        raw.gram(i, i) = Rational(1, 8);
        Weight root = Weight::zero(6);
        root.coords[i] = 4;
        raw.positive_roots.push_back(root);
        raw.root_class.push_back(RootClass::compact);
    }
    CartanDatum d = build_cartan_datum(raw);
    REQUIRE(d.weyl_order() == 64);
    for (std::int64_t shift = 0; shift < 4; ++shift) {
        Weight lam = Weight::zero(6);
        for (int i = 0; i < 6; ++i) lam.coords[i] = i + shift;
        CHECK(alternating_orbit_sum_serial(d, lam) == alternating_orbit_sum_parallel(d, lam));
    }
}

TEST_CASE("half-spin kernels agree exactly") {
    std::mt19937_64 rng(7);
    for (int m = 1; m <= 12; m += 3) {
        std::vector<Weight> mu;
        for (int i = 0; i < m; ++i)
            mu.push_back(Weight({2 * (static_cast<std::int64_t>(rng() % 9) - 4)}));
        auto s = half_spin_characters_serial(mu, 1);
        auto p = half_spin_characters_parallel(mu, 1);
        CHECK(s.first == p.first);
        CHECK(s.second == p.second);
    }
}

TEST_CASE("clifford product kernels agree exactly") {
    std::mt19937_64 rng(11);
    PolarizedSpace sp{6};
    std::uniform_int_distribution<Blade> blade(0, (Blade(1) << sp.slots()) - 1);
    for (int trial = 0; trial < 5; ++trial) {
        CliffordElement x(sp.m), y(sp.m);
        for (int i = 0; i < 40; ++i) {
            x.add_term(blade(rng), Rational(1 + static_cast<int>(rng() % 5), 3));
            y.add_term(blade(rng), Rational(1 + static_cast<int>(rng() % 5), 2));
        }
        CHECK(mul_serial(sp, x, y) == mul_parallel(sp, x, y));
    }
}

#ifdef EPCHAR_HAVE_OPENMP
TEST_CASE("results independent of the thread count") {
    VirtualCharacter a = random_character(2, 150, 42);
    VirtualCharacter b = random_character(2, 150, 43);
    VirtualCharacter want = tensor_serial(a, b);
    int saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 4}) {
        omp_set_num_threads(threads);
        CHECK(tensor_parallel(a, b) == want);
    }
    omp_set_num_threads(saved);
}
#endif
