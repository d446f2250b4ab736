#pragma once

#include <stdexcept>
#include <string>

namespace choicekit {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in coordinate spaces of different dimension.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed textual or JSON input.
struct FormatError : Error {
  using Error::Error;
};

// Generators admit a nontrivial nonnegative combination of zero, so they do
// not span a proper set of options.
struct NotBluntError : Error {
  using Error::Error;
};

// A choice query was issued over an empty option set.
struct EmptyOptionSetError : Error {
  using Error::Error;
};

// A choice query was issued over an empty set of orders.
struct EmptyOrderSetError : Error {
  using Error::Error;
};

// Monotonification is defined only for rules with at least one premise.
struct PremiseFreeError : Error {
  using Error::Error;
};

struct UnknownSchemeError : Error {
  using Error::Error;
};

// A probe option lies outside the domain of the scheme being instantiated.
struct InvalidProbeError : Error {
  using Error::Error;
};

// The assessment basis admits no proper selection cone, so its natural
// extension is not a proper set of option sets.
struct InconsistentAssessmentError : Error {
  using Error::Error;
};

// Selection enumeration would exceed the configured bound.
struct CombinatorialLimitError : Error {
  using Error::Error;
};

// Fourier-Motzkin elimination would exceed the configured variable bound.
struct VariableLimitError : Error {
  using Error::Error;
};

}  // namespace choicekit
