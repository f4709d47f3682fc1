#pragma once

#include <stdexcept>

namespace prolific {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input parsing / construction.
struct MalformedInput : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

// Pattern algebra.
struct DeletesEverything : Error { using Error::Error; };
struct SizeOne : Error { using Error::Error; };

// Prolificity certification.
struct KOutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotDisjoint : Error { using Error::Error; };
struct InvalidWitness : Error { using Error::Error; };

// Constructions.
struct TooSmall : Error { using Error::Error; };

// Packings.
struct ExtensionParity : Error { using Error::Error; };
struct DegenerateBox : Error { using Error::Error; };

// Search budgets.
struct BudgetExceeded : Error { using Error::Error; };

/// Raised when a consistency assertion fails inside the library itself.
struct InternalError : Error { using Error::Error; };

}  // namespace prolific
