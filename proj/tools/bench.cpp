// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical exact results.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "epchar/charlat.hpp"
#include "epchar/clifford.hpp"

using namespace epchar;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const std::string& name, std::size_t size, double serial, double parallel, bool equal) {
    std::printf("%-28s %10zu %12.1f %12.1f %8.2fx  %s\n", name.c_str(), size, serial, parallel,
                serial / parallel, equal ? "identical" : "MISMATCH");
}

VirtualCharacter random_character(int rank, std::size_t terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-40, 40);
    std::uniform_int_distribution<int> mult(1, 5);
    VirtualCharacter c(rank);
    while (c.support_size() < terms) {
        Weight w = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) w.coords[i] = coord(rng);
        c.add_term(w, mult(rng));
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t scale = argc > 1 ? std::stoul(argv[1]) : 1;

    std::printf("%-28s %10s %12s %12s %9s\n", "kernel", "size", "serial ms", "omp ms",
                "speedup");

    {
        std::size_t n = 700 * scale;
        VirtualCharacter a = random_character(2, n, 1);
        VirtualCharacter b = random_character(2, n, 2);
        auto t0 = std::chrono::steady_clock::now();
        VirtualCharacter rs = tensor_serial(a, b);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        VirtualCharacter rp = tensor_parallel(a, b);
        double parallel = ms_since(t0);
        row("tensor (convolution)", n * n, serial, parallel, rs == rp);
    }

    {
        // fourteen orthogonal compact root pairs: |W| = 16384
        int rank = 14;
        RawCartanDatum raw;
        raw.rank = rank;
        raw.name = "a1^14";
        raw.gram = RationalMatrix(rank, rank);
        for (int i = 0; i < rank; ++i) {
            raw.gram(i, i) = Rational(1, 8);
            Weight root = Weight::zero(rank);
            root.coords[i] = 4;
            raw.positive_roots.push_back(root);
            raw.root_class.push_back(RootClass::compact);
        }
        CartanDatum d = build_cartan_datum(raw);
        Weight lam = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) lam.coords[i] = i + 1;
        auto t0 = std::chrono::steady_clock::now();
        VirtualCharacter rs = alternating_orbit_sum_serial(d, lam);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        VirtualCharacter rp = alternating_orbit_sum_parallel(d, lam);
        double parallel = ms_since(t0);
        row("alternating orbit sum", d.weyl_order(), serial, parallel, rs == rp);
    }

    {
        int m = 18;
        std::vector<Weight> mu;
        for (int i = 0; i < m; ++i) mu.push_back(Weight({2 * (i % 5 + 1)}));
        auto t0 = std::chrono::steady_clock::now();
        auto rs = half_spin_characters_serial(mu, 1);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto rp = half_spin_characters_parallel(mu, 1);
        double parallel = ms_since(t0);
        row("half-spin enumeration", std::size_t(1) << m, serial, parallel,
            rs.first == rp.first && rs.second == rp.second);
    }

    {
        PolarizedSpace sp{10};
        std::mt19937_64 rng(3);
        auto random_element = [&](std::size_t terms) {
            CliffordElement x(sp.m);
            std::uniform_int_distribution<Blade> blade(0, (Blade(1) << sp.slots()) - 1);
            while (x.terms.size() < terms) x.add_term(blade(rng), Rational(1 + rng() % 7, 2));
            return x;
        };
        CliffordElement x = random_element(220);
        CliffordElement y = random_element(220);
        auto t0 = std::chrono::steady_clock::now();
        CliffordElement rs = mul_serial(sp, x, y);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        CliffordElement rp = mul_parallel(sp, x, y);
        double parallel = ms_since(t0);
        row("clifford product", x.terms.size() * y.terms.size(), serial, parallel, rs == rp);
    }

    return 0;
}
