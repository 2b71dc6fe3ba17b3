#pragma once

#include <stdexcept>
#include <string>

namespace syntomic {

// Base of every error the engine raises. Subclasses name the failed contract.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SYNTOMIC_DEFINE_ERROR(Name)            \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

SYNTOMIC_DEFINE_ERROR(InvalidArgument);
SYNTOMIC_DEFINE_ERROR(WeightOverflow);
SYNTOMIC_DEFINE_ERROR(CompositionNonzero);
SYNTOMIC_DEFINE_ERROR(DegreeError);
SYNTOMIC_DEFINE_ERROR(NegativeScaling);
SYNTOMIC_DEFINE_ERROR(IntegralityViolation);
SYNTOMIC_DEFINE_ERROR(WindowTooSmall);
SYNTOMIC_DEFINE_ERROR(CertificateFailure);
SYNTOMIC_DEFINE_ERROR(NonTermination);
SYNTOMIC_DEFINE_ERROR(Unsupported);

#undef SYNTOMIC_DEFINE_ERROR

}  // namespace syntomic
