#pragma once

#include <stdexcept>
#include <string>

namespace dq {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};
struct NotASquare : Error {
    using Error::Error;
};
struct MixedFields : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct PointNotOnCurve : Error {
    using Error::Error;
};
struct NonAffineImage : Error {
    using Error::Error;
};
struct PoleOfG : Error {
    using Error::Error;
};
struct DegenerateTriple : Error {
    using Error::Error;
};
struct SquareConditionFails : Error {
    using Error::Error;
};
struct ProductMismatch : Error {
    using Error::Error;
};
struct MapUndefined : Error {
    using Error::Error;
};
struct NoBasePoint : Error {
    using Error::Error;
};

}  // namespace dq
