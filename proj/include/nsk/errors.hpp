#ifndef NSK_ERRORS_HPP
#define NSK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NSK_DEFINE_ERROR(Name)                       \
    struct Name : Error {                            \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

NSK_DEFINE_ERROR(ZeroModulus);
NSK_DEFINE_ERROR(NotInvertible);
NSK_DEFINE_ERROR(Underflow);
NSK_DEFINE_ERROR(FieldMismatch);
NSK_DEFINE_ERROR(DivisionByZeroPoly);
NSK_DEFINE_ERROR(ConstantPolynomial);
NSK_DEFINE_ERROR(EnumerationTooLarge);
NSK_DEFINE_ERROR(RingMismatch);
NSK_DEFINE_ERROR(LengthMismatch);
NSK_DEFINE_ERROR(WeightViolation);
NSK_DEFINE_ERROR(ZeroCiphertext);
NSK_DEFINE_ERROR(InvalidCiphertext);
NSK_DEFINE_ERROR(SpaceTooLarge);
NSK_DEFINE_ERROR(StrategyInfeasible);
NSK_DEFINE_ERROR(SafeDegreeNotFound);
NSK_DEFINE_ERROR(FieldTooSmall);
NSK_DEFINE_ERROR(BlockInfeasible);
NSK_DEFINE_ERROR(SieveTooLarge);
NSK_DEFINE_ERROR(IncompleteFactorization);
NSK_DEFINE_ERROR(ParseError);

#undef NSK_DEFINE_ERROR

} // namespace nsk

#endif
