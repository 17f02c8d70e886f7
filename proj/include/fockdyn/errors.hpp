#pragma once

#include <stdexcept>
#include <string>

namespace fockdyn {

/// Invalid model or physical parameter (negative width, empty band, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mismatched sizes between objects that must share a layout.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical contract (Hermiticity, normalization, residual bound, stability) was violated.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A resource cap (basis size, sweep grid size) was exceeded.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace fockdyn
