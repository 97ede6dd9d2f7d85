#ifndef NSK_SCHEME_HPP
#define NSK_SCHEME_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nsk/errors.hpp"

namespace nsk {

// Bit vector of length L; bits[0] is m_1. Leftmost character of the text
// form is m_1 as well ("111000111").
class Message {
public:
    Message() = default;
    explicit Message(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw ParseError("message bits must be 0/1");
    }

    static Message from_string(const std::string& s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw ParseError("message must be a bitstring");
            bits.push_back(c == '1');
        }
        return Message(std::move(bits));
    }
    static Message from_index(std::uint64_t idx, std::size_t length) {
        std::vector<std::uint8_t> bits(length);
        for (std::size_t i = 0; i < length; ++i) bits[i] = (idx >> i) & 1;
        return Message(std::move(bits));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    std::size_t size() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_.at(i) != 0; }
    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    friend bool operator==(const Message& a, const Message& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Message& a, const Message& b) { return !(a == b); }

private:
    std::vector<std::uint8_t> bits_;
};

// Product of the published carriers selected by the message bits;
// the empty product is the group identity.
template <class Elem, class Mul>
Elem encrypt_product(const std::vector<Elem>& carriers, const Message& m, Mul mul,
                     Elem identity) {
    if (carriers.size() != m.size()) throw LengthMismatch();
    Elem acc = identity;
    for (std::size_t i = 0; i < carriers.size(); ++i)
        if (m.bit(i)) acc = mul(acc, carriers[i]);
    return acc;
}

// Brute-force check that all 2^L ciphertexts are pairwise distinct.
// Encrypt maps a Message to a comparable key (vector<uint64_t>).
// Serial reference; the OpenMP version below must agree with it.
template <class Encrypt>
bool verify_injectivity_serial(std::size_t L, Encrypt encrypt) {
    if (L >= 21) throw SpaceTooLarge("injectivity brute force limited to 2^20 messages");
    const std::uint64_t total = 1ull << L;
    std::vector<std::vector<std::uint64_t>> keys(total);
    for (std::uint64_t i = 0; i < total; ++i)
        keys[i] = encrypt(Message::from_index(i, L));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

template <class Encrypt>
bool verify_injectivity(std::size_t L, Encrypt encrypt) {
    if (L >= 21) throw SpaceTooLarge("injectivity brute force limited to 2^20 messages");
    const std::uint64_t total = 1ull << L;
    std::vector<std::vector<std::uint64_t>> keys(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < (long long)total; ++i)
        keys[(std::size_t)i] = encrypt(Message::from_index((std::uint64_t)i, L));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

} // namespace nsk

#endif
