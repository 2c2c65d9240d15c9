#pragma once

// Dense matrix functions for exponential integrators: e^A by scaling and
// squaring with a degree-13 Pade approximant, and the phi functions
//   phi1(z) = (e^z - 1)/z
//   phi2(z) = (e^z - 1 - z)/z^2
//   phi3(z) = (e^z - 1 - z - z^2/2)/z^3
// evaluated without ever inverting A, so exactly singular arguments are fine.

#include "stiffbench/linalg.hpp"

namespace stiffbench {

/// e^A, phi1(A), phi2(A), phi3(A) for one square argument.
///
/// Satisfies the recurrence phi_k(A) = (1/k!) I + A phi_{k+1}(A) with
/// phi_0 = e^A, which is the invariant tests pin down.
struct PhiBundle {
  Mat exp;
  Mat phi1;
  Mat phi2;
  Mat phi3;
};

/// Matrix exponential. Scaling parameter s = max(0, ceil(log2(|A|_1 / 5.4)))
/// followed by the (13,13) Pade approximant and s squarings. Throws
/// ExpmOverflow if the result is not finite.
Mat expm(const Mat& a);

/// All four functions from one exponential of the 4n x 4n block matrix
///   [ A I 0 0 ]
///   [ 0 0 I 0 ]
///   [ 0 0 0 I ]
///   [ 0 0 0 0 ]
/// whose top block row of e^M is [ e^A | phi1(A) | phi2(A) | phi3(A) ].
PhiBundle phi_bundle(const Mat& a);

}  // namespace stiffbench
