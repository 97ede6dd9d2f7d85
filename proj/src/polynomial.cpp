#include "nsk/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nsk/errors.hpp"
#include "nsk/gf2x.hpp"

namespace nsk {

Polynomial::Polynomial(PrimeField field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= field_.q();
    normalize();
}

Polynomial Polynomial::monomial(PrimeField f, std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[n] = 1;
    return Polynomial(f, std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    std::uint64_t inv = field_.inv(leading_coeff());
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& v : c) v = field_.mul(v, inv);
    return Polynomial(field_, std::move(c));
}

std::uint64_t Polynomial::eval(std::uint64_t at) const {
    std::uint64_t r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = field_.add(field_.mul(r, at), coeffs_[i]);
    return r;
}

std::string Polynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    return os.str();
}

Polynomial Polynomial::from_text(PrimeField field, const std::string& text) {
    std::vector<std::uint64_t> c;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ParseError("empty polynomial coefficient");
        std::uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw ParseError("bad polynomial coefficient: " + tok);
            v = v * 10 + (std::uint64_t)(ch - '0');
        }
        if (v >= field.q()) throw ParseError("polynomial coefficient out of range: " + tok);
        c.push_back(v);
    }
    if (c.empty()) throw ParseError("empty polynomial text");
    return Polynomial(field, std::move(c));
}

std::string Polynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i];
        } else {
            if (coeffs_[i] != 1) os << coeffs_[i] << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

static void check_same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw FieldMismatch();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.field().add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.field().sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
    const std::uint64_t q = a.field().q();
    std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    if (q < (1u << 21)) {
        // coefficient products fit well below 2^42; reduce lazily
        std::vector<unsigned __int128> acc(c.size(), 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            std::uint64_t ai = a.coeffs()[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                acc[i + j] += (unsigned __int128)ai * b.coeffs()[j];
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = (std::uint64_t)(acc[i] % q);
    } else {
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                c[i + j] = a.field().add(c[i + j], a.field().mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Polynomial(a.field(), std::move(c));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DivisionByZeroPoly();
    if (a.degree() < b.degree()) return {Polynomial::zero(a.field()), a};
    const PrimeField& F = a.field();
    std::vector<std::uint64_t> rem(a.coeffs());
    std::vector<std::uint64_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    const std::uint64_t lead_inv = F.inv(b.leading_coeff());
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        std::uint64_t factor = F.mul(rem[i], lead_inv);
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, b.coeff(j)));
    }
    return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return divrem(a, b).second;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    check_same_field(a, b);
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

Polynomial poly_powmod(const Polynomial& base, const BigUint& exp, const Polynomial& modulus) {
    if (modulus.degree() < 1) throw DivisionByZeroPoly("powmod modulus must have degree >= 1");
    if (base.field().q() == 2) {
        gf2x::Packed m = gf2x::pack(modulus);
        return gf2x::unpack(base.field(), gf2x::powmod(gf2x::pack(base % modulus), exp, m));
    }
    Polynomial result = Polynomial::one(base.field());
    Polynomial b = base % modulus;
    std::size_t nbits = exp.bit_length();
    for (std::size_t i = nbits; i-- > 0;) {
        result = (result * result) % modulus;
        if (exp.bit(i)) result = (result * b) % modulus;
    }
    return result;
}

namespace {

// x^(q^e) mod f via e successive q-power maps
Polynomial frobenius_power(const Polynomial& f, std::size_t e) {
    const PrimeField& F = f.field();
    Polynomial t = Polynomial::x(F) % f;
    for (std::size_t i = 0; i < e; ++i)
        t = poly_powmod(t, BigUint(F.q()), f);
    return t;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw ConstantPolynomial();
    if (f.field().q() == 2) return gf2x::is_irreducible(gf2x::pack(f));
    const std::size_t n = (std::size_t)f.degree();
    if (n == 1) return true;
    const Polynomial x = Polynomial::x(f.field());
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/p)) - x, f) = 1 for primes p | n
    for (std::uint64_t p : prime_divisors_u64(n)) {
        Polynomial t = frobenius_power(f, n / p);
        if (poly_gcd(t - x % f, f).degree() != 0) return false;
    }
    return frobenius_power(f, n) == x % f;
}

Polynomial random_irreducible(PrimeField field, std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.q() - 1);
    for (;;) {
        std::vector<std::uint64_t> c(d + 1);
        for (std::size_t i = 0; i < d; ++i) c[i] = dist(rng);
        c[d] = 1;
        Polynomial cand(field, std::move(c));
        if (is_irreducible(cand)) return cand;
    }
}

Polynomial random_irreducible(PrimeField field, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_irreducible(field, d, rng);
}

std::vector<Polynomial> enumerate_irreducibles(PrimeField field, std::size_t max_degree) {
    const std::uint64_t q = field.q();
    // guard q^max_degree <= 2^24
    double size = 1;
    for (std::size_t i = 0; i < max_degree; ++i) {
        size *= (double)q;
        if (size > (double)(1u << 24)) throw EnumerationTooLarge();
    }
    std::vector<Polynomial> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= q;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::vector<std::uint64_t> c(n + 1);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = t % q;
                t /= q;
            }
            c[n] = 1;
            Polynomial cand(field, std::move(c));
            if (is_irreducible(cand)) out.push_back(std::move(cand));
        }
    }
    return out;
}

int mobius(std::uint64_t n) {
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    if (n > 1) result = -result;
    return result;
}

BigUint count_irreducibles(std::uint64_t q, std::size_t n) {
    if (n == 0) throw Error("count_irreducibles needs n >= 1");
    mpz_class sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        int mu = mobius(n / k);
        if (mu == 0) continue;
        mpz_class qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), q, k);
        sum += mu * qk;
    }
    return BigUint(mpz_class(sum / (unsigned long)n));
}

} // namespace nsk
