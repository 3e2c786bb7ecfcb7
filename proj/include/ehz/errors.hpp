#pragma once

#include <stdexcept>
#include <string>

namespace ehz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error { using Error::Error; };
struct NotExpandable : Error { using Error::Error; };
struct PoleAtPoint : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct ContainmentError : Error { using Error::Error; };
struct NotHorizontalStrip : Error { using Error::Error; };
struct DimensionLimit : Error { using Error::Error; };
struct UnboundedInput : Error { using Error::Error; };
struct InterpolationInconsistent : Error { using Error::Error; };
struct ZeroCoefficient : Error { using Error::Error; };
struct NotImplementedForParameters : Error { using Error::Error; };
struct NonMultipleExponent : Error { using Error::Error; };

// internal consistency failure; signals a bug rather than bad input
struct AssertionFailure : Error { using Error::Error; };

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw AssertionFailure(what);
}

}  // namespace ehz
