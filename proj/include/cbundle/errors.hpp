#pragma once

#include <stdexcept>
#include <string>

namespace cbundle {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CBUNDLE_DEFINE_ERROR(Name)            \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

// simplicial-core
CBUNDLE_DEFINE_ERROR(InvalidSimplex);
CBUNDLE_DEFINE_ERROR(InvalidDeltaComplex);
CBUNDLE_DEFINE_ERROR(MapDomainError);
CBUNDLE_DEFINE_ERROR(UnknownSimplex);

// necklace-words
CBUNDLE_DEFINE_ERROR(InvalidNecklace);
CBUNDLE_DEFINE_ERROR(NotSurjective);
CBUNDLE_DEFINE_ERROR(EmptyWord);

// bundle-geometry
CBUNDLE_DEFINE_ERROR(WrongDimension);
CBUNDLE_DEFINE_ERROR(InvalidSeed);
CBUNDLE_DEFINE_ERROR(NonOrientableBundleStructure);

// chern-global
CBUNDLE_DEFINE_ERROR(NonOrientable);
CBUNDLE_DEFINE_ERROR(NotClosedSurface);
CBUNDLE_DEFINE_ERROR(IntegralityViolation);

// constructions
CBUNDLE_DEFINE_ERROR(FiberTooSmall);
CBUNDLE_DEFINE_ERROR(RealizationAmbiguity);

// cli-io
CBUNDLE_DEFINE_ERROR(FormatError);

#undef CBUNDLE_DEFINE_ERROR

} // namespace cbundle
