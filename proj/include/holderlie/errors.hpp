#pragma once

#include <stdexcept>
#include <string>

namespace holderlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiameterExceeded : Error {
    using Error::Error;
};
struct EmptyDomain : Error {
    using Error::Error;
};
struct DegeneratePlan : Error {
    using Error::Error;
};
struct OrderExceeded : Error {
    using Error::Error;
};
struct BoundaryPoint : Error {
    using Error::Error;
};
struct SegmentLeavesDomain : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct DuplicateNodes : Error {
    using Error::Error;
};
struct NodeOutOfRange : Error {
    using Error::Error;
};
struct LogDomain : Error {
    using Error::Error;
};
struct OutsideConvergenceDomain : Error {
    using Error::Error;
};
struct ConfigInvalid : Error {
    using Error::Error;
};

}  // namespace holderlie
