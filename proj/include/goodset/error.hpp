#pragma once

#include <stdexcept>
#include <string>

namespace goodset {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
public:
    dimension_mismatch(std::size_t expected, std::size_t got)
        : error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

/// A caller-side precondition was not met (alpha outside E, gamma below min, ...).
class precondition_error : public error {
public:
    using error::error;
};

/// The operation would enumerate 2^r subsets with r above the configured cap.
class rank_cap_exceeded : public error {
public:
    using error::error;
};

/// A check that requires a symmetric semigroup was handed a non-symmetric one.
class not_gorenstein : public error {
public:
    using error::error;
};

}  // namespace goodset
