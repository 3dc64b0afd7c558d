#pragma once

#include <stdexcept>
#include <string>

#include "lehmer5/integers.hpp"

namespace lehmer5 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certified-impossible state: indicates an implementation bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

struct UnsplittablePrime : Error {
  using Error::Error;
};

/// The factoring budget ran out; `cofactor` is the unfactored part.
struct FactorizationIncomplete : Error {
  Int cofactor;
  explicit FactorizationIncomplete(Int c)
      : Error("factorization incomplete, unfactored cofactor " + c.get_str() +
              " (supply --factor-hint)"),
        cofactor(std::move(c)) {}
};

/// 5 | n: the field is wildly ramified and has no normal integral basis.
struct WildRamification : Error {
  using Error::Error;
};

struct CertificationFailed : InternalError {
  using InternalError::InternalError;
};

struct NonIntegralM : InternalError {
  using InternalError::InternalError;
};

struct NoDividingConjugate : InternalError {
  using InternalError::InternalError;
};

struct NotSquarefree : Error {
  using Error::Error;
};

}  // namespace lehmer5
