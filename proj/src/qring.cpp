#include "nsk/qring.hpp"

#include "nsk/errors.hpp"
#include "nsk/gf2x.hpp"

namespace nsk {

QuotientRing::QuotientRing(Polynomial h, bool check_irreducible)
    : h_(std::move(h)), group_order_(0), irreducible_checked_(check_irreducible) {
    if (h_.degree() < 1 || !h_.is_monic())
        throw Error("quotient modulus must be monic of degree >= 1");
    if (check_irreducible && !is_irreducible(h_))
        throw Error("quotient modulus is not irreducible");
    group_order_ = pow_u64(BigUint(field().q()), degree()) - BigUint(1);
}

RingElement::RingElement(std::shared_ptr<const QuotientRing> ring, const Polynomial& value)
    : ring_(std::move(ring)), rep_(value % ring_->modulus()) {}

RingElement qr_one(std::shared_ptr<const QuotientRing> ring) {
    PrimeField f = ring->field();
    return RingElement(std::move(ring), Polynomial::one(f));
}

RingElement qr_reduce(std::shared_ptr<const QuotientRing> ring, const Polynomial& p) {
    return RingElement(std::move(ring), p);
}

RingElement qr_mul(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) throw RingMismatch();
    if (a.ring().field().q() == 2) {
        gf2x::Packed m = gf2x::pack(a.ring().modulus());
        gf2x::Packed r = gf2x::mulmod(gf2x::pack(a.lift()), gf2x::pack(b.lift()), m);
        return RingElement(a.ring_ptr(), gf2x::unpack(a.ring().field(), r));
    }
    return RingElement(a.ring_ptr(), (a.lift() * b.lift()) % a.ring().modulus());
}

RingElement qr_pow(const RingElement& a, const BigUint& e) {
    return RingElement(a.ring_ptr(), poly_powmod(a.lift(), e, a.ring().modulus()));
}

} // namespace nsk
