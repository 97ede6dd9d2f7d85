#include "nsk/nsk_crt.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "nsk/errors.hpp"

namespace nsk {

Polynomial lagrange_interpolate(PrimeField field, const std::vector<std::uint64_t>& points,
                                const std::vector<std::uint64_t>& values) {
    if (points.size() != values.size()) throw LengthMismatch();
    Polynomial result = Polynomial::zero(field);
    for (std::size_t i = 0; i < points.size(); ++i) {
        // basis_i(x) = prod_{j != i} (x - r_j) / (r_i - r_j)
        Polynomial basis = Polynomial::one(field);
        std::uint64_t denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial(field, {field.neg(points[j]), 1});
            denom = field.mul(denom, field.sub(points[i], points[j]));
        }
        std::uint64_t scale = field.mul(values[i], field.inv(denom));
        basis = basis * Polynomial::constant(field, scale);
        result = result + basis;
    }
    return result;
}

std::pair<CrtPublicKey, CrtSecretKey> keygen_crt(std::uint64_t q, std::size_t L,
                                                 std::uint64_t seed) {
    if (L < 1) throw StrategyInfeasible("need at least one carrier");
    PrimeField field(q);
    // L+1 evaluation points plus L alphas must all be distinct
    if (q < 2 * L + 1) throw FieldTooSmall("need q >= 2L + 1");

    std::mt19937_64 rng(seed);
    // 2L+1 distinct field elements: L+1 evaluation points + L alphas
    std::vector<std::uint64_t> pool(q);
    for (std::uint64_t i = 0; i < q; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::uint64_t> points(pool.begin(), pool.begin() + (long)(L + 1));
    std::vector<std::uint64_t> alphas(pool.begin() + (long)(L + 1), pool.begin() + (long)(2 * L + 1));

    std::uint64_t order = q - 1;
    std::uint64_t v = 1; // the only invertible exponent when order <= 2
    if (order > 2) {
        std::uniform_int_distribution<std::uint64_t> dist(2, order - 1);
        do {
            v = dist(rng);
        } while (gcd(BigUint(v), BigUint(order)) != BigUint(1));
    }
    std::uint64_t u = mod_inv(BigUint(v), BigUint(order)).to_u64();

    std::vector<std::vector<std::uint64_t>> carriers(L);
    for (std::size_t i = 0; i < L; ++i) {
        carriers[i].resize(L + 1);
        for (std::size_t j = 0; j <= L; ++j)
            carriers[i][j] = field.pow(field.sub(points[j], alphas[i]), v);
    }

    CrtPublicKey pk{field, points, std::move(carriers)};
    CrtSecretKey sk{field, std::move(points), std::move(alphas), v, u};
    return {std::move(pk), std::move(sk)};
}

std::vector<std::uint64_t> encrypt_crt(const CrtPublicKey& pk, const Message& m) {
    if (m.size() != pk.message_length()) throw LengthMismatch();
    std::vector<std::uint64_t> acc(pk.eval_points.size(), 1);
    for (std::size_t i = 0; i < pk.carriers.size(); ++i)
        if (m.bit(i))
            for (std::size_t j = 0; j < acc.size(); ++j)
                acc[j] = pk.field.mul(acc[j], pk.carriers[i][j]);
    return acc;
}

Message decrypt_crt(const CrtSecretKey& sk, const std::vector<std::uint64_t>& c) {
    if (c.size() != sk.eval_points.size()) throw LengthMismatch();
    for (auto x : c)
        if (x % sk.field.q() == 0) throw ZeroCiphertext("ciphertext entries must be nonzero");

    // undo the shuffle componentwise, then read off the interpolant's roots
    std::vector<std::uint64_t> values(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) values[j] = sk.field.pow(c[j], sk.u);
    Polynomial k = lagrange_interpolate(sk.field, sk.eval_points, values);

    std::vector<std::uint8_t> bits(sk.alphas.size(), 0);
    Polynomial product = Polynomial::one(sk.field);
    for (std::size_t i = 0; i < sk.alphas.size(); ++i) {
        if (k.eval(sk.alphas[i]) == 0) {
            bits[i] = 1;
            product = product * Polynomial(sk.field, {sk.field.neg(sk.alphas[i]), 1});
        }
    }
    // valid ciphertexts interpolate to the monic product of the selected (x - alpha_i)
    if (product != k) throw InvalidCiphertext("vector is not an encryption of any message");
    return Message{std::move(bits)};
}

namespace {

std::string read_field_line(std::istream& is, const std::string& tag) {
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

std::string join_vec(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::vector<std::uint64_t> parse_vec(const std::string& text, std::uint64_t q) {
    std::vector<std::uint64_t> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ParseError("empty vector entry");
        std::uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw ParseError("bad vector entry: " + tok);
            v = v * 10 + (std::uint64_t)(ch - '0');
        }
        if (v >= q) throw ParseError("vector entry out of range: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty vector");
    return out;
}

} // namespace

void write_crt_public_key(std::ostream& os, const CrtPublicKey& pk) {
    os << "NSKCRT PUBLIC 1\n";
    os << "q " << pk.field.q() << "\n";
    os << "L " << pk.message_length() << "\n";
    os << "R " << join_vec(pk.eval_points) << "\n";
    for (std::size_t i = 0; i < pk.carriers.size(); ++i)
        os << "C" << (i + 1) << " " << join_vec(pk.carriers[i]) << "\n";
}

void write_crt_secret_key(std::ostream& os, const CrtSecretKey& sk) {
    os << "NSKCRT SECRET 1\n";
    os << "q " << sk.field.q() << "\n";
    os << "L " << sk.alphas.size() << "\n";
    os << "R " << join_vec(sk.eval_points) << "\n";
    os << "A " << join_vec(sk.alphas) << "\n";
    os << "v " << sk.v << "\n";
    os << "u " << sk.u << "\n";
}

void write_crt_ciphertext(std::ostream& os, const std::vector<std::uint64_t>& c) {
    os << "NSKCRT CT 1\n" << join_vec(c) << "\n";
}

CrtPublicKey read_crt_public_key(std::istream& is) {
    expect_line(is, "NSKCRT PUBLIC 1");
    std::uint64_t q = BigUint::from_decimal(read_field_line(is, "q")).to_u64();
    PrimeField field(q);
    std::size_t L = (std::size_t)BigUint::from_decimal(read_field_line(is, "L")).to_u64();
    auto points = parse_vec(read_field_line(is, "R"), q);
    if (points.size() != L + 1) throw ParseError("expected L+1 evaluation points");
    std::vector<std::vector<std::uint64_t>> carriers;
    for (std::size_t i = 0; i < L; ++i) {
        carriers.push_back(parse_vec(read_field_line(is, "C" + std::to_string(i + 1)), q));
        if (carriers.back().size() != L + 1) throw ParseError("carrier vector has wrong length");
    }
    return CrtPublicKey{field, std::move(points), std::move(carriers)};
}

CrtSecretKey read_crt_secret_key(std::istream& is) {
    expect_line(is, "NSKCRT SECRET 1");
    std::uint64_t q = BigUint::from_decimal(read_field_line(is, "q")).to_u64();
    PrimeField field(q);
    std::size_t L = (std::size_t)BigUint::from_decimal(read_field_line(is, "L")).to_u64();
    auto points = parse_vec(read_field_line(is, "R"), q);
    auto alphas = parse_vec(read_field_line(is, "A"), q);
    if (points.size() != L + 1 || alphas.size() != L) throw ParseError("bad R/A lengths");
    std::uint64_t v = BigUint::from_decimal(read_field_line(is, "v")).to_u64();
    std::uint64_t u = BigUint::from_decimal(read_field_line(is, "u")).to_u64();
    if ((BigUint(v) * BigUint(u)) % BigUint(q - 1) != BigUint(1))
        throw ParseError("secret key exponents are inconsistent");
    return CrtSecretKey{field, std::move(points), std::move(alphas), v, u};
}

std::vector<std::uint64_t> read_crt_ciphertext(std::istream& is) {
    expect_line(is, "NSKCRT CT 1");
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing ciphertext vector");
    std::vector<std::uint64_t> out;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
        BigUint v = BigUint::from_decimal(tok);
        out.push_back(v.to_u64());
    }
    if (out.empty()) throw ParseError("empty ciphertext vector");
    return out;
}

} // namespace nsk
