#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input gap set does not describe an algebraic (L-space) knot: the expanded
// Alexander polynomial is not an alternating sum of monomials, or the gap set
// is not symmetric.
struct AlternationFailure : Error {
  using Error::Error;
};

// A closed-form V computation was asked for a product with more than one
// non-basic staircase factor where only single-staircase results hold.
struct MultiStaircaseUnsupported : Error {
  using Error::Error;
};

// A model without the split-towers property was passed to the split-tower
// V-calculus.
struct NotSplitTowers : Error {
  using Error::Error;
};

// A composite V^T/V^B request hit a negative-delta case with more than one
// cusp; no closed formula exists for that regime.
struct UnsupportedMixedCase : Error {
  using Error::Error;
};

// Curve configuration violates a precondition of the requested check
// (genus formula, link signs, cusp count).
struct ConfigMismatch : Error {
  using Error::Error;
};

// The bound-equivalence sweep parameter m = (d-1)(d-2)/2 - eta - g must be
// positive.
struct NonpositiveM : Error {
  using Error::Error;
};

// A generator has non-integral Alexander level; shift the complex first.
struct HalfIntegerLevel : Error {
  using Error::Error;
};

// Homology carries no free summand at the requested level.
struct NoTower : Error {
  using Error::Error;
};

// A supplied action fails to commute with the differential.
struct ActionNotChainMap : Error {
  using Error::Error;
};

// Complex exceeds the generator cap (override with CUSPCHECK_GENERATOR_CAP).
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace cusp
