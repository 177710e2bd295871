#pragma once

#include <stdexcept>
#include <string>

namespace infoclust {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GroundTooLarge : public Error {
public:
    using Error::Error;
};

class GroundMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class EmptySet : public Error {
public:
    using Error::Error;
};

class EmptyBlock : public Error {
public:
    using Error::Error;
};

class OverlappingFamily : public Error {
public:
    using Error::Error;
};

// Arithmetic between an exact-rational value and a float value is forbidden.
class MixedArithmetic : public Error {
public:
    using Error::Error;
};

// Raised on the float backend when an equality test falls inside the
// tolerance band and the result would depend on the choice made.
class FloatEqualityAmbiguous : public Error {
public:
    using Error::Error;
};

// Float backend could not identify a unique finest optimal partition.
class NoUniqueFinest : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class SubsetTooSmall : public Error {
public:
    using Error::Error;
};

class BadSize : public Error {
public:
    using Error::Error;
};

// Model document could not be parsed into a source model.
class ModelParseError : public Error {
public:
    using Error::Error;
};

} // namespace infoclust
