#pragma once

#include <stdexcept>
#include <string>

namespace dzv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHomogeneousError : Error {
    using Error::Error;
};

struct UnsupportedDepthError : Error {
    using Error::Error;
};

struct BoundaryMismatchError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct ParityMismatchError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NotAdmissibleError : Error {
    using Error::Error;
};

}  // namespace dzv
