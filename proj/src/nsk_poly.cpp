#include "nsk/nsk_poly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nsk/analysis.hpp"
#include "nsk/errors.hpp"

namespace nsk {

std::vector<Polynomial> first_irreducibles_of_degree(PrimeField field, std::size_t degree,
                                                     std::size_t k) {
    std::vector<Polynomial> out;
    const std::uint64_t q = field.q();
    std::uint64_t v = 0;
    while (out.size() < k) {
        std::vector<std::uint64_t> c(degree + 1);
        std::uint64_t t = v;
        for (std::size_t i = 0; i < degree; ++i) {
            c[i] = t % q;
            t /= q;
        }
        if (t > 0) throw StrategyInfeasible("not enough irreducibles of requested degree");
        c[degree] = 1;
        Polynomial cand(field, std::move(c));
        if (is_irreducible(cand)) out.push_back(std::move(cand));
        ++v;
    }
    return out;
}

namespace {

BigUint random_biguint_below(const BigUint& bound, std::mt19937_64& rng) {
    const std::size_t bits = bound.bit_length();
    for (;;) {
        mpz_class raw = 0;
        for (std::size_t w = 0; w * 64 < bits; ++w) {
            raw <<= 64;
            raw += (unsigned long)rng();
        }
        raw >>= (64 - bits % 64) % 64;
        BigUint cand{raw};
        if (cand < bound) return cand;
    }
}

std::vector<Polynomial> select_carriers(PrimeField field, const KeygenStrategy& s) {
    if (s.fixed_carriers) return *s.fixed_carriers;
    std::vector<Polynomial> carriers = enumerate_irreducibles(field, s.max_degree);
    if (s.kind == KeygenStrategy::Kind::MaxRate && s.target_block_bits) {
        std::size_t sum = 0;
        for (const auto& p : carriers) sum += (std::size_t)p.degree();
        auto fill = plan_block_fill(field.q(), s.max_degree, *s.target_block_bits);
        // count per degree, then take the first ones in canonical order
        std::map<std::size_t, std::size_t> need;
        for (std::size_t d : fill) ++need[d];
        for (const auto& [deg, k] : need) {
            auto extra = first_irreducibles_of_degree(field, deg, k);
            carriers.insert(carriers.end(), extra.begin(), extra.end());
        }
    }
    return carriers;
}

// The subgroup-avoidance carrier condition. For q > 2 a carrier must not land
// in the index-(q-1) subgroup, i.e. C^r != 1. For q = 2, r IS the group order,
// so that power is always 1; with r prime every nontrivial element already
// generates, and the condition degenerates to C != 0, 1.
bool carriers_avoid_subgroups(const std::vector<Polynomial>& carriers,
                              const std::shared_ptr<const QuotientRing>& ring,
                              const BigUint& r) {
    const bool whole_group = r == ring->group_order();
    for (const auto& p : carriers) {
        RingElement e = qr_reduce(ring, p);
        if (e.is_zero() || e.is_one()) return false;
        if (!whole_group && qr_pow(e, r).is_one()) return false;
    }
    return true;
}

} // namespace

std::pair<PolyPublicKey, PolySecretKey> keygen(std::uint64_t q, const KeygenStrategy& s) {
    PrimeField field(q);
    std::mt19937_64 rng(s.seed);

    std::vector<Polynomial> carriers = select_carriers(field, s);
    if (carriers.empty()) throw StrategyInfeasible("no carriers selected");
    {
        std::set<std::string> seen;
        for (const auto& p : carriers) {
            if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
                throw StrategyInfeasible("carriers must be monic irreducible");
            if (!seen.insert(p.to_text()).second)
                throw StrategyInfeasible("carriers must be distinct");
        }
    }

    std::size_t degree_sum = 0;
    for (const auto& p : carriers) degree_sum += (std::size_t)p.degree();

    std::size_t d;
    std::optional<std::size_t> weight;
    std::shared_ptr<const QuotientRing> ring;

    auto make_ring = [&](std::size_t deg) {
        Polynomial h = s.fixed_h ? *s.fixed_h : random_irreducible(field, deg, rng);
        if ((std::size_t)h.degree() != deg)
            throw StrategyInfeasible("fixed h has the wrong degree");
        return std::make_shared<const QuotientRing>(h, true);
    };

    switch (s.kind) {
    case KeygenStrategy::Kind::MaxRate:
        d = s.target_block_bits ? *s.target_block_bits : degree_sum + 1;
        if (d <= degree_sum) throw StrategyInfeasible("block smaller than carrier degree sum");
        ring = make_ring(d);
        break;
    case KeygenStrategy::Kind::ConstantWeight: {
        if (s.weight == 0 || s.weight > carriers.size())
            throw StrategyInfeasible("constant weight out of range");
        std::size_t maxdeg = 0;
        for (const auto& p : carriers) maxdeg = std::max(maxdeg, (std::size_t)p.degree());
        d = s.weight * maxdeg + 1; // deg h > w*N
        weight = s.weight;
        ring = make_ring(d);
        break;
    }
    case KeygenStrategy::Kind::Safe: {
        const BigUint qb(q);
        bool found = false;
        std::size_t cand = degree_sum + 1;
        for (std::size_t tries = 0; tries < s.safe_degree_budget; ++tries, ++cand) {
            BigUint r = (pow_u64(qb, cand) - BigUint(1)) / (qb - BigUint(1));
            if (!is_probable_prime(r)) continue;
            // a few h's per admissible degree; carriers must pass the subgroup-avoidance check
            for (int attempt = 0; attempt < 8; ++attempt) {
                auto candidate = std::make_shared<const QuotientRing>(
                    random_irreducible(field, cand, rng), true);
                if (carriers_avoid_subgroups(carriers, candidate, r)) {
                    ring = candidate;
                    d = cand;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw SafeDegreeNotFound("no admissible degree within search budget");
        break;
    }
    }

    const BigUint& order = ring->group_order();
    BigUint v(0);
    if (s.fixed_v) {
        v = *s.fixed_v;
        if (v < BigUint(2) || gcd(v, order) != BigUint(1))
            throw StrategyInfeasible("fixed v not invertible mod group order");
    } else {
        do {
            v = random_biguint_below(order - BigUint(3), rng) + BigUint(2);
        } while (gcd(v, order) != BigUint(1));
    }
    BigUint u = mod_inv(v, order);

    std::vector<RingElement> published(carriers.size(), qr_one(ring));
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)carriers.size(); ++i)
        published[(std::size_t)i] = qr_pow(qr_reduce(ring, carriers[(std::size_t)i]), v);
    for (const auto& c : published)
        if (c.is_zero()) throw StrategyInfeasible("zero published carrier");

    PolyPublicKey pk{ring, std::move(published), weight};
    PolySecretKey sk{ring, std::move(carriers), v, u, weight};
    return {std::move(pk), std::move(sk)};
}

RingElement encrypt(const PolyPublicKey& pk, const Message& m) {
    if (m.size() != pk.message_length()) throw LengthMismatch();
    if (pk.weight && m.weight() != *pk.weight) throw WeightViolation();
    return encrypt_product(
        pk.carriers, m, [](const RingElement& a, const RingElement& b) { return qr_mul(a, b); },
        qr_one(pk.ring));
}

Message decrypt(const PolySecretKey& sk, const RingElement& c) {
    if (c.ring() != *sk.ring) throw RingMismatch();
    if (c.is_zero()) throw ZeroCiphertext();
    const Polynomial lifted = qr_pow(c, sk.u).lift();
    std::vector<std::uint8_t> bits(sk.carriers.size(), 0);
    Polynomial product = Polynomial::one(sk.ring->field());
    for (std::size_t i = 0; i < sk.carriers.size(); ++i) {
        if ((lifted % sk.carriers[i]).is_zero()) {
            bits[i] = 1;
            product = product * sk.carriers[i];
        }
    }
    if (product != lifted) throw InvalidCiphertext("ciphertext is not an encryption of any message");
    Message m{std::move(bits)};
    if (sk.weight && m.weight() != *sk.weight)
        throw InvalidCiphertext("ciphertext violates the constant-weight restriction");
    return m;
}

// ---- key files ----

namespace {

void expect_line(std::istream& is, const std::string& want) {
    std::string line;
    if (!std::getline(is, line) || line != want)
        throw ParseError("expected line '" + want + "'");
}

std::string read_field(std::istream& is, const std::string& tag) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("unexpected end of key file");
    if (line.size() < tag.size() + 2 || line.compare(0, tag.size(), tag) != 0 ||
        line[tag.size()] != ' ')
        throw ParseError("expected field '" + tag + "', got '" + line + "'");
    return line.substr(tag.size() + 1);
}

struct Header {
    PrimeField field;
    std::shared_ptr<const QuotientRing> ring;
    std::size_t L;
};

void write_header(std::ostream& os, const QuotientRing& ring, std::size_t L) {
    os << "q " << ring.field().q() << "\n";
    os << "d " << ring.degree() << "\n";
    os << "h " << ring.modulus().to_text() << "\n";
    os << "L " << L << "\n";
}

Header read_header(std::istream& is) {
    std::uint64_t q = BigUint::from_decimal(read_field(is, "q")).to_u64();
    PrimeField field(q);
    std::size_t d = (std::size_t)BigUint::from_decimal(read_field(is, "d")).to_u64();
    Polynomial h = Polynomial::from_text(field, read_field(is, "h"));
    if ((std::size_t)h.degree() != d) throw ParseError("declared degree does not match h");
    std::size_t L = (std::size_t)BigUint::from_decimal(read_field(is, "L")).to_u64();
    return Header{field, std::make_shared<const QuotientRing>(std::move(h), true), L};
}

} // namespace

void write_public_key(std::ostream& os, const PolyPublicKey& pk) {
    os << "NSKPOLY PUBLIC 1\n";
    write_header(os, *pk.ring, pk.message_length());
    for (std::size_t i = 0; i < pk.carriers.size(); ++i)
        os << "C" << (i + 1) << " " << pk.carriers[i].lift().to_text() << "\n";
    if (pk.weight) os << "w " << *pk.weight << "\n";
}

void write_secret_key(std::ostream& os, const PolySecretKey& sk) {
    os << "NSKPOLY SECRET 1\n";
    write_header(os, *sk.ring, sk.message_length());
    for (std::size_t i = 0; i < sk.carriers.size(); ++i)
        os << "P" << (i + 1) << " " << sk.carriers[i].to_text() << "\n";
    os << "v " << sk.v.to_decimal() << "\n";
    os << "u " << sk.u.to_decimal() << "\n";
    if (sk.weight) os << "w " << *sk.weight << "\n";
}

void write_ciphertext(std::ostream& os, const RingElement& c) {
    os << "NSKPOLY CT 1\n" << c.lift().to_text() << "\n";
}

PolyPublicKey read_public_key(std::istream& is) {
    expect_line(is, "NSKPOLY PUBLIC 1");
    Header h = read_header(is);
    std::vector<RingElement> carriers;
    carriers.reserve(h.L);
    for (std::size_t i = 0; i < h.L; ++i) {
        Polynomial p = Polynomial::from_text(h.field, read_field(is, "C" + std::to_string(i + 1)));
        carriers.emplace_back(h.ring, p);
    }
    std::optional<std::size_t> weight;
    std::string line;
    if (std::getline(is, line) && !line.empty()) {
        if (line.compare(0, 2, "w ") != 0) throw ParseError("unexpected trailing line: " + line);
        weight = (std::size_t)BigUint::from_decimal(line.substr(2)).to_u64();
    }
    return PolyPublicKey{h.ring, std::move(carriers), weight};
}

PolySecretKey read_secret_key(std::istream& is) {
    expect_line(is, "NSKPOLY SECRET 1");
    Header h = read_header(is);
    std::vector<Polynomial> carriers;
    carriers.reserve(h.L);
    for (std::size_t i = 0; i < h.L; ++i)
        carriers.push_back(
            Polynomial::from_text(h.field, read_field(is, "P" + std::to_string(i + 1))));
    BigUint v = BigUint::from_decimal(read_field(is, "v"));
    BigUint u = BigUint::from_decimal(read_field(is, "u"));
    std::optional<std::size_t> weight;
    std::string line;
    if (std::getline(is, line) && !line.empty()) {
        if (line.compare(0, 2, "w ") != 0) throw ParseError("unexpected trailing line: " + line);
        weight = (std::size_t)BigUint::from_decimal(line.substr(2)).to_u64();
    }
    if ((v * u) % h.ring->group_order() != BigUint(1))
        throw ParseError("secret key exponents are inconsistent");
    return PolySecretKey{h.ring, std::move(carriers), std::move(v), std::move(u), weight};
}

RingElement read_ciphertext(std::istream& is, std::shared_ptr<const QuotientRing> ring) {
    expect_line(is, "NSKPOLY CT 1");
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing ciphertext polynomial");
    Polynomial p = Polynomial::from_text(ring->field(), line);
    return RingElement(std::move(ring), p);
}

} // namespace nsk
