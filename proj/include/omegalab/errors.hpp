#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace omegalab {

// Base class for recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A frontier, enumeration size, bit request or candidate space exceeds a
// configured cap.
struct CapExceededError : Error {
    using Error::Error;
    CapExceededError(const std::string& what_, std::uint64_t value, std::uint64_t cap)
        : Error(what_ + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap)) {}
};

// A bit source cannot supply the requested number of bits.
struct InsufficientBitsError : Error {
    std::uint64_t have;
    std::uint64_t need;
    InsufficientBitsError(std::uint64_t have_, std::uint64_t need_)
        : Error("insufficient bits: have " + std::to_string(have_) + ", need " +
                std::to_string(need_)),
          have(have_),
          need(need_) {}
};

struct MalformedBitsFileError : Error {
    std::uint64_t offset;
    MalformedBitsFileError(const std::string& path, std::uint64_t offset_, char c)
        : Error("malformed bit file " + path + ": unexpected character '" +
                std::string(1, c) + "' at byte offset " + std::to_string(offset_)),
          offset(offset_) {}
};

struct EmptyBitsFileError : Error {
    explicit EmptyBitsFileError(const std::string& path)
        : Error("bit file " + path + " contains no bits") {}
};

// Every chunk of the consumed bit window decoded to zero, so the weight
// normalization would divide by zero.
struct AllZeroCoefficientsError : Error {
    AllZeroCoefficientsError()
        : Error("all chunk values are zero; coefficients are undefined") {}
};

struct SchemaError : Error {
    std::string field;
    SchemaError(const std::string& field_, const std::string& message)
        : Error("schema violation in field '" + field_ + "': " + message), field(field_) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct PolicyUnsupportedError : Error {
    using Error::Error;
};

struct InvalidSubsystemError : Error {
    using Error::Error;
};

struct InvalidPartitionError : Error {
    using Error::Error;
};

}  // namespace omegalab
