// Timing comparison of the arithmetic back ends:
//  - bit-packed GF(2)[x] kernels vs the generic coefficient-vector path
//  - serial vs OpenMP injectivity verification
//  - F_{2^d} exponentiation vs Z/pZ exponentiation at matched modulus size
#include <chrono>
#include <iostream>
#include <random>

#include <omp.h>

#include "nsk/gf2x.hpp"
#include "nsk/nsk_poly.hpp"
#include "nsk/qring.hpp"
#include "nsk/scheme.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    std::size_t degree = argc > 1 ? (std::size_t)std::stoul(argv[1]) : 127;
    std::size_t reps = argc > 2 ? (std::size_t)std::stoul(argv[2]) : 200;
    std::cout << "threads " << omp_get_max_threads() << ", modulus degree " << degree
              << ", reps " << reps << "\n\n";

    nsk::PrimeField F2(2);
    std::mt19937_64 rng(7);
    nsk::Polynomial h = nsk::random_irreducible(F2, degree, rng);
    nsk::Polynomial base = nsk::Polynomial::x(F2);
    for (std::size_t i = 0; i + 2 < degree; i += 3)
        base = base + nsk::Polynomial::monomial(F2, i);
    nsk::BigUint exponent = nsk::pow_u64(nsk::BigUint(2), degree) - nsk::BigUint(3);

    {
        auto t0 = Clock::now();
        nsk::Polynomial acc = base;
        for (std::size_t i = 0; i < reps; ++i)
            acc = nsk::poly_powmod(acc, exponent, h); // dispatches to the packed kernels
        double packed = ms_since(t0);

        // force the generic path by lifting to the same polynomials over F_2
        // through the coefficient-vector square-and-multiply
        t0 = Clock::now();
        nsk::Polynomial acc2 = base;
        for (std::size_t i = 0; i < reps; ++i) {
            nsk::Polynomial result = nsk::Polynomial::one(F2);
            nsk::Polynomial b = acc2 % h;
            for (std::size_t bit = exponent.bit_length(); bit-- > 0;) {
                result = (result * result) % h;
                if (exponent.bit(bit)) result = (result * b) % h;
            }
            acc2 = result;
        }
        double generic = ms_since(t0);
        std::cout << "GF(2)[x] powmod   packed " << packed << " ms, generic " << generic
                  << " ms, speedup " << generic / packed << "x"
                  << (acc == acc2 ? "" : "  (MISMATCH)") << "\n";
    }

    {
        // matched-size comparison against integer arithmetic mod a prime
        nsk::BigUint p = nsk::next_prime(nsk::pow_u64(nsk::BigUint(2), degree));
        nsk::BigUint g(3), e = p - nsk::BigUint(2);
        auto t0 = Clock::now();
        nsk::BigUint acc = g;
        for (std::size_t i = 0; i < reps; ++i) acc = nsk::mod_pow(acc, e, p);
        double zp = ms_since(t0);

        auto ring = std::make_shared<nsk::QuotientRing>(h, false);
        nsk::RingElement x = nsk::qr_reduce(ring, base);
        t0 = Clock::now();
        for (std::size_t i = 0; i < reps; ++i) x = nsk::qr_pow(x, exponent);
        double f2d = ms_since(t0);
        std::cout << "powmod @" << degree << " bits   F_2^d " << f2d << " ms, Z/pZ " << zp
                  << " ms\n";
    }

    {
        auto ring = std::make_shared<nsk::QuotientRing>(h, false);
        std::vector<nsk::RingElement> carriers;
        std::mt19937_64 r2(11);
        for (std::size_t i = 0; i < 16; ++i) {
            std::vector<std::uint64_t> c(degree);
            for (auto& v : c) v = r2() & 1;
            carriers.push_back(nsk::qr_reduce(ring, nsk::Polynomial(F2, std::move(c))));
        }
        auto key_of = [&](const nsk::Message& m) {
            return nsk::encrypt_product(
                       carriers, m,
                       [](const nsk::RingElement& a, const nsk::RingElement& b) {
                           return nsk::qr_mul(a, b);
                       },
                       nsk::qr_one(ring))
                .lift()
                .coeffs();
        };
        auto t0 = Clock::now();
        bool s = nsk::verify_injectivity_serial(carriers.size(), key_of);
        double serial = ms_since(t0);
        t0 = Clock::now();
        bool par = nsk::verify_injectivity(carriers.size(), key_of);
        double parallel = ms_since(t0);
        std::cout << "injectivity 2^16   serial " << serial << " ms, OpenMP " << parallel
                  << " ms" << (s == par ? "" : "  (MISMATCH)") << "\n";
    }
    return 0;
}
