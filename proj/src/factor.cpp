#include <algorithm>
#include <map>
#include <random>

#include "nsk/errors.hpp"
#include "nsk/polynomial.hpp"

namespace nsk {

namespace {

Polynomial derivative(const Polynomial& f) {
    const PrimeField& F = f.field();
    if (f.degree() < 1) return Polynomial::zero(F);
    std::vector<std::uint64_t> c((std::size_t)f.degree());
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        c[i - 1] = F.mul(f.coeffs()[i], i % F.q());
    return Polynomial(F, std::move(c));
}

// f = g(x^p) with p = char; in a prime field the p-th root keeps coefficients.
Polynomial pth_root(const Polynomial& f) {
    const std::uint64_t p = f.field().q();
    std::vector<std::uint64_t> c(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        if (i % p != 0) throw Error("polynomial is not a p-th power");
        c[i / p] = f.coeffs()[i];
    }
    return Polynomial(f.field(), std::move(c));
}

Polynomial random_below(std::size_t degree_bound, PrimeField F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    std::vector<std::uint64_t> c(degree_bound);
    for (auto& v : c) v = dist(rng);
    return Polynomial(F, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus); g squarefree, all factors of degree d.
void edf(const Polynomial& g, std::size_t d, std::vector<Polynomial>& out,
         std::mt19937_64& rng) {
    if ((std::size_t)g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const PrimeField& F = g.field();
    const std::uint64_t q = F.q();
    for (;;) {
        Polynomial r = random_below((std::size_t)g.degree(), F, rng);
        if (r.degree() < 1) continue;
        Polynomial s = Polynomial::zero(F);
        if (q == 2) {
            // trace map: r + r^2 + ... + r^(2^(d-1))
            Polynomial t = r % g;
            for (std::size_t i = 0; i < d; ++i) {
                s = s + t;
                t = (t * t) % g;
            }
        } else {
            BigUint e = (pow_u64(BigUint(q), d) - BigUint(1)) / BigUint(2);
            s = poly_powmod(r, e, g) - Polynomial::one(F);
        }
        Polynomial split = poly_gcd(s, g);
        if (split.degree() > 0 && split.degree() < g.degree()) {
            edf(split, d, out, rng);
            edf(divrem(g, split).first, d, out, rng);
            return;
        }
    }
}

// Distinct-degree phase over a squarefree monic input.
void ddf(Polynomial w, std::vector<Polynomial>& out, std::mt19937_64& rng) {
    const PrimeField& F = w.field();
    Polynomial h = Polynomial::x(F) % w;
    std::size_t d = 0;
    while (w.degree() > 0 && 2 * (d + 1) <= (std::size_t)w.degree()) {
        ++d;
        h = poly_powmod(h, BigUint(F.q()), w);
        Polynomial g = poly_gcd(h - Polynomial::x(F) % w, w);
        if (g.degree() > 0) {
            edf(g, d, out, rng);
            w = divrem(w, g).first;
            h = h % w;
        }
    }
    if (w.degree() > 0) out.push_back(w.monic());
}

struct CanonicalLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long i = a.degree(); i >= 0; --i)
            if (a.coeff((std::size_t)i) != b.coeff((std::size_t)i))
                return a.coeff((std::size_t)i) < b.coeff((std::size_t)i);
        return false;
    }
};

void factor_rec(Polynomial f, unsigned mult, std::map<Polynomial, unsigned, CanonicalLess>& out,
                std::mt19937_64& rng) {
    if (f.degree() < 1) return;
    f = f.monic();
    Polynomial df = derivative(f);
    if (df.is_zero()) {
        factor_rec(pth_root(f), mult * (unsigned)f.field().q(), out, rng);
        return;
    }
    Polynomial w = divrem(f, poly_gcd(f, df)).first; // distinct factors, mult not divisible by p
    std::vector<Polynomial> distinct;
    ddf(w.monic(), distinct, rng);
    for (const auto& r : distinct) {
        unsigned e = 0;
        for (;;) {
            auto [quot, rem] = divrem(f, r);
            if (!rem.is_zero()) break;
            f = quot;
            ++e;
        }
        out[r] += mult * e;
    }
    factor_rec(f, mult, out, rng); // leftover is a p-th power
}

} // namespace

std::vector<std::pair<Polynomial, unsigned>> factor(const Polynomial& f, std::uint64_t seed) {
    if (f.degree() < 1) throw ConstantPolynomial();
    std::mt19937_64 rng(seed);
    std::map<Polynomial, unsigned, CanonicalLess> acc;
    factor_rec(f, 1, acc, rng);
    return {acc.begin(), acc.end()};
}

} // namespace nsk
