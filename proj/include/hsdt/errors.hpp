#pragma once

#include <stdexcept>
#include <string>

namespace hsdt {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidAmplitude : Error { using Error::Error; };
struct NormalizationError : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct HermiticityError : Error { using Error::Error; };
struct EmptyActionSet : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OrthogonalMindError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Malformed scenario text; carries the 1-based line/column of the failure.
struct ParseError : Error {
  ParseError(const std::string& what_arg, int line_arg, int column_arg)
      : Error(what_arg), line(line_arg), column(column_arg) {}
  int line = 0;
  int column = 0;
};

}  // namespace hsdt
