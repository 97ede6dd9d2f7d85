#ifndef NSK_QRING_HPP
#define NSK_QRING_HPP

#include <memory>

#include "nsk/bigint.hpp"
#include "nsk/polynomial.hpp"

namespace nsk {

// F_q[x]/(h). Group order q^deg(h) - 1 when h is irreducible.
class QuotientRing {
public:
    // check_irreducible demands a certified field; keys always pass true.
    QuotientRing(Polynomial h, bool check_irreducible);

    const Polynomial& modulus() const { return h_; }
    const PrimeField& field() const { return h_.field(); }
    std::size_t degree() const { return (std::size_t)h_.degree(); }
    const BigUint& group_order() const { return group_order_; }
    bool irreducible_checked() const { return irreducible_checked_; }

    friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
        return a.h_ == b.h_;
    }

private:
    Polynomial h_;
    BigUint group_order_;
    bool irreducible_checked_;
};

// Residue class; rep is the canonical (fully reduced) representative,
// which is exactly the lift used by decryption.
class RingElement {
public:
    RingElement(std::shared_ptr<const QuotientRing> ring, const Polynomial& value);

    const QuotientRing& ring() const { return *ring_; }
    const std::shared_ptr<const QuotientRing>& ring_ptr() const { return ring_; }
    const Polynomial& lift() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return *a.ring_ == *b.ring_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

private:
    std::shared_ptr<const QuotientRing> ring_;
    Polynomial rep_;
};

RingElement qr_one(std::shared_ptr<const QuotientRing> ring);
RingElement qr_reduce(std::shared_ptr<const QuotientRing> ring, const Polynomial& p);
RingElement qr_mul(const RingElement& a, const RingElement& b);
RingElement qr_pow(const RingElement& a, const BigUint& e);

} // namespace nsk

#endif
