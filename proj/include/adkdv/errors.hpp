#pragma once

#include <stdexcept>
#include <string>

namespace adkdv {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A word that was required to be reduced is not.
struct NotReducedError : Error {
  explicit NotReducedError(const std::string& what) : Error(what) {}
};

// An element that was required to be a glide is not.
struct NotGlideError : Error {
  explicit NotGlideError(const std::string& what) : Error(what) {}
};

// A weight or crossing parameter that must be positive is not.
struct PositivityError : Error {
  explicit PositivityError(const std::string& what) : Error(what) {}
};

// solve_partner: the only partner in the component is b itself.
struct NoPartnerError : Error {
  explicit NoPartnerError(const std::string& what) : Error(what) {}
};

// solve_partner: b outside the interval spanned by the wire weights.
struct OutOfRangeError : Error {
  explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

// A chamber label exponent exceeds the evaluation bound.
struct LabelRangeError : Error {
  explicit LabelRangeError(const std::string& what) : Error(what) {}
};

// A tau value required to be positive is zero or negative.
struct NonPositiveTauError : Error {
  explicit NonPositiveTauError(const std::string& what) : Error(what) {}
};

// Malformed input data (bad letters, mismatched sizes, bad descriptors...).
struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

}  // namespace adkdv
