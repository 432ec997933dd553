//
// errors.hpp -- exception types shared across the library.
//
#pragma once

#include <stdexcept>
#include <string>

namespace gwcp1 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define GWCP1_DEFINE_ERROR(Name)                                               \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

// exact-core
GWCP1_DEFINE_ERROR(VariableMismatch);
GWCP1_DEFINE_ERROR(NonzeroConstantTerm);
GWCP1_DEFINE_ERROR(ConstantTermNotOne);
GWCP1_DEFINE_ERROR(EmptyForm);
GWCP1_DEFINE_ERROR(ExponentBeyondTruncation);
GWCP1_DEFINE_ERROR(UnknownVariable);
GWCP1_DEFINE_ERROR(NotDivisible);
GWCP1_DEFINE_ERROR(NotClosed);

// special-series
GWCP1_DEFINE_ERROR(InvalidIndex);

// degree-zero
GWCP1_DEFINE_ERROR(TooFewVariables);
GWCP1_DEFINE_ERROR(UnstableModuli);

// combinatorics
GWCP1_DEFINE_ERROR(BoundExceeded);
GWCP1_DEFINE_ERROR(IdentityViolated);

// toda-recursion / cache
GWCP1_DEFINE_ERROR(IoFailure);
GWCP1_DEFINE_ERROR(VersionMismatch);
GWCP1_DEFINE_ERROR(CorruptCache);

// cli
GWCP1_DEFINE_ERROR(ResourceLimit);

#undef GWCP1_DEFINE_ERROR

} // namespace gwcp1
