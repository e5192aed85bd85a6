#pragma once

#include <stdexcept>

namespace mext {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MEXT_ERROR_TYPE(NAME)        \
    struct NAME : Error {            \
        using Error::Error;          \
        NAME() : Error(#NAME) {}     \
    }

// field / polynomial
MEXT_ERROR_TYPE(NotPrime);
MEXT_ERROR_TYPE(FieldMismatch);
MEXT_ERROR_TYPE(DivisionByZero);
MEXT_ERROR_TYPE(ModulusZero);
MEXT_ERROR_TYPE(NotIrreducible);
MEXT_ERROR_TYPE(ZeroConstantTerm);
MEXT_ERROR_TYPE(NotMonic);
MEXT_ERROR_TYPE(DegreeZero);
MEXT_ERROR_TYPE(ParseError);

// linear algebra
MEXT_ERROR_TYPE(ShapeMismatch);
MEXT_ERROR_TYPE(Singular);
MEXT_ERROR_TYPE(NoSolution);

// multisequences
MEXT_ERROR_TYPE(NotPrimitive);
MEXT_ERROR_TYPE(ZeroState);
MEXT_ERROR_TYPE(OrbitTooLarge);

// R-road
MEXT_ERROR_TYPE(AtOnes);
MEXT_ERROR_TYPE(NotOnRoad);
MEXT_ERROR_TYPE(AlreadyAtR);

// synthesis
MEXT_ERROR_TYPE(ZeroRow);
MEXT_ERROR_TYPE(RowNotUnit);
MEXT_ERROR_TYPE(BadDegree);
MEXT_ERROR_TYPE(BadLadder);
MEXT_ERROR_TYPE(BadInitialState);
MEXT_ERROR_TYPE(BadChoiceScript);

// word LFSRs
MEXT_ERROR_TYPE(ExtensionDeficient);
MEXT_ERROR_TYPE(NotMCompanion);

// Hankel / counting
MEXT_ERROR_TYPE(EvenLength);
MEXT_ERROR_TYPE(BadRange);
MEXT_ERROR_TYPE(TooLarge);
MEXT_ERROR_TYPE(NonIntegralOrbitQuotient);

#undef MEXT_ERROR_TYPE

}  // namespace mext
