#pragma once

#include <stdexcept>
#include <string>

namespace stego {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation failures (bad shapes, bad ranges, impossible requests).
struct DimensionMismatch : Error {
    using Error::Error;
};
struct RangeError : Error {
    using Error::Error;
};
struct OddDimension : Error {
    using Error::Error;
};
struct EmptyCover : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct CapacityExceeded : Error {
    using Error::Error;
};
struct PayloadTooLarge : Error {
    using Error::Error;
};
struct RoundTripUnstable : Error {
    using Error::Error;
};

// Failures while decoding an embedded payload back into a key. A wrong
// passphrase, wrong channel pair or a non-stego input surfaces as one of
// these.
struct DecodeError : Error {
    using Error::Error;
};
struct BadMagic : DecodeError {
    using DecodeError::DecodeError;
};
struct BadVersion : DecodeError {
    using DecodeError::DecodeError;
};
struct TruncatedBody : DecodeError {
    using DecodeError::DecodeError;
};
struct IndexOutOfRange : DecodeError {
    using DecodeError::DecodeError;
};
struct BadLengthPrefix : DecodeError {
    using DecodeError::DecodeError;
};
struct KeyCoverMismatch : DecodeError {
    using DecodeError::DecodeError;
};

// File I/O problems (missing files, malformed images, short writes).
struct IoError : Error {
    using Error::Error;
};
// Refusing to write a format that would destroy the payload (jpeg etc.).
struct UnsupportedFormat : Error {
    using Error::Error;
};

} // namespace stego
