#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace laumon {

// All failures are hard errors: exact arithmetic never degrades silently.

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Parameters hit a resonance or degenerate weight; carries the offending data.
struct NonGenericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResonanceError : NonGenericError {
    explicit ResonanceError(const std::string& msg, std::vector<int> deg)
        : NonGenericError(msg), degree(std::move(deg)) {}
    std::vector<int> degree;
};

struct DegreeBoundError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace laumon
