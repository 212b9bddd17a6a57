#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace darkdetect {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problems with input data (bad files, bad schemas, impossible requests).
/// The CLI maps these to exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

/// Byte stream could not be decoded under the resolved character encoding.
class DecodeError : public DataError {
public:
    DecodeError(std::size_t offset, const std::string& what)
        : DataError(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A delimited file is missing its header or a required column.
class SchemaError : public DataError {
public:
    using DataError::DataError;
};

/// Fewer candidates available than the requested sample size.
class InsufficientCandidatesError : public DataError {
public:
    InsufficientCandidatesError(std::size_t requested, std::size_t available)
        : DataError("requested " + std::to_string(requested) +
                    " samples but only " + std::to_string(available) +
                    " candidates are available"),
          requested_(requested),
          available_(available) {}

    std::size_t requested() const { return requested_; }
    std::size_t available() const { return available_; }

private:
    std::size_t requested_;
    std::size_t available_;
};

/// A dataset side (dark or non-dark) is empty where both are required.
class EmptyClassError : public DataError {
public:
    using DataError::DataError;
};

/// Training inputs contain only one label.
class SingleClassError : public DataError {
public:
    using DataError::DataError;
};

/// Training produced a non-finite objective.
class DivergenceError : public Error {
public:
    DivergenceError(std::uint32_t epoch)
        : Error("training diverged (non-finite objective) at epoch " +
                std::to_string(epoch)),
          epoch_(epoch) {}

    std::uint32_t epoch() const { return epoch_; }

private:
    std::uint32_t epoch_;
};

}  // namespace darkdetect
