#include "nsk/nsk_int.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <set>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

std::string read_field(std::istream& is, const std::string& tag) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("unexpected end of key file");
    if (line.size() < tag.size() + 2 || line.compare(0, tag.size(), tag) != 0 ||
        line[tag.size()] != ' ')
        throw ParseError("expected field '" + tag + "', got '" + line + "'");
    return line.substr(tag.size() + 1);
}

void expect_line(std::istream& is, const std::string& want) {
    std::string line;
    if (!std::getline(is, line) || line != want)
        throw ParseError("expected line '" + want + "'");
}

} // namespace

std::pair<IntPublicKey, IntSecretKey> keygen_int(std::size_t L, const BigUint& margin,
                                                 std::uint64_t seed) {
    if (L < 1) throw StrategyInfeasible("need at least one carrier");
    std::vector<BigUint> primes;
    BigUint p(1);
    while (primes.size() < L) {
        p = next_prime(p);
        primes.push_back(p);
    }
    return keygen_int_with_primes(std::move(primes), margin, seed);
}

std::pair<IntPublicKey, IntSecretKey> keygen_int_with_primes(std::vector<BigUint> primes,
                                                             const BigUint& margin,
                                                             std::uint64_t seed) {
    if (primes.empty()) throw StrategyInfeasible("need at least one carrier");
    {
        std::set<std::string> seen;
        for (const auto& q : primes) {
            if (!is_probable_prime(q)) throw StrategyInfeasible("carrier is not prime");
            if (!seen.insert(q.to_decimal()).second)
                throw StrategyInfeasible("carriers must be distinct");
        }
    }
    BigUint product(1);
    for (const auto& q : primes) product = product * q;
    BigUint p = next_prime(product + margin);
    BigUint order = p - BigUint(1);

    std::mt19937_64 rng(seed);
    BigUint v(1); // the only invertible exponent when p - 1 <= 2
    const std::size_t bits = order.bit_length();
    if (order > BigUint(2)) do {
            mpz_class raw = 0;
            for (std::size_t w = 0; w * 64 < bits; ++w) {
                raw <<= 64;
                raw += (unsigned long)rng();
            }
            v = BigUint(raw) % order;
        } while (v < BigUint(2) || gcd(v, order) != BigUint(1));
    BigUint u = mod_inv(v, order);

    std::vector<BigUint> carriers;
    carriers.reserve(primes.size());
    for (const auto& q : primes) carriers.push_back(mod_pow(q, v, p));

    IntPublicKey pk{p, std::move(carriers)};
    IntSecretKey sk{p, std::move(primes), std::move(v), std::move(u)};
    return {std::move(pk), std::move(sk)};
}

BigUint encrypt_int(const IntPublicKey& pk, const Message& m) {
    if (m.size() != pk.message_length()) throw LengthMismatch();
    return encrypt_product(
        pk.carriers, m,
        [&pk](const BigUint& a, const BigUint& b) { return (a * b) % pk.p; }, BigUint(1));
}

Message decrypt_int(const IntSecretKey& sk, const BigUint& c) {
    if (c.is_zero() || c >= sk.p) throw ZeroCiphertext("ciphertext must be in (0, p)");
    BigUint t = mod_pow(c, sk.u, sk.p);
    std::vector<std::uint8_t> bits(sk.primes.size(), 0);
    BigUint product(1);
    for (std::size_t i = 0; i < sk.primes.size(); ++i) {
        if ((t % sk.primes[i]).is_zero()) {
            bits[i] = 1;
            product = product * sk.primes[i];
        }
    }
    if (product != t) throw InvalidCiphertext("ciphertext is not an encryption of any message");
    return Message{std::move(bits)};
}

void write_int_public_key(std::ostream& os, const IntPublicKey& pk) {
    os << "NSKINT PUBLIC 1\n";
    os << "p " << pk.p.to_decimal() << "\n";
    os << "L " << pk.message_length() << "\n";
    for (std::size_t i = 0; i < pk.carriers.size(); ++i)
        os << "C" << (i + 1) << " " << pk.carriers[i].to_decimal() << "\n";
}

void write_int_secret_key(std::ostream& os, const IntSecretKey& sk) {
    os << "NSKINT SECRET 1\n";
    os << "p " << sk.p.to_decimal() << "\n";
    os << "L " << sk.primes.size() << "\n";
    for (std::size_t i = 0; i < sk.primes.size(); ++i)
        os << "P" << (i + 1) << " " << sk.primes[i].to_decimal() << "\n";
    os << "v " << sk.v.to_decimal() << "\n";
    os << "u " << sk.u.to_decimal() << "\n";
}

void write_int_ciphertext(std::ostream& os, const BigUint& c) {
    os << "NSKINT CT 1\n" << c.to_decimal() << "\n";
}

IntPublicKey read_int_public_key(std::istream& is) {
    expect_line(is, "NSKINT PUBLIC 1");
    BigUint p = BigUint::from_decimal(read_field(is, "p"));
    std::size_t L = (std::size_t)BigUint::from_decimal(read_field(is, "L")).to_u64();
    std::vector<BigUint> carriers;
    for (std::size_t i = 0; i < L; ++i)
        carriers.push_back(BigUint::from_decimal(read_field(is, "C" + std::to_string(i + 1))));
    return IntPublicKey{std::move(p), std::move(carriers)};
}

IntSecretKey read_int_secret_key(std::istream& is) {
    expect_line(is, "NSKINT SECRET 1");
    BigUint p = BigUint::from_decimal(read_field(is, "p"));
    std::size_t L = (std::size_t)BigUint::from_decimal(read_field(is, "L")).to_u64();
    std::vector<BigUint> primes;
    for (std::size_t i = 0; i < L; ++i)
        primes.push_back(BigUint::from_decimal(read_field(is, "P" + std::to_string(i + 1))));
    BigUint v = BigUint::from_decimal(read_field(is, "v"));
    BigUint u = BigUint::from_decimal(read_field(is, "u"));
    if ((v * u) % (p - BigUint(1)) != BigUint(1))
        throw ParseError("secret key exponents are inconsistent");
    return IntSecretKey{std::move(p), std::move(primes), std::move(v), std::move(u)};
}

BigUint read_int_ciphertext(std::istream& is) {
    expect_line(is, "NSKINT CT 1");
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing ciphertext value");
    return BigUint::from_decimal(line);
}

} // namespace nsk
