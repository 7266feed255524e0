#pragma once

#include "spinnet/exact.hpp"
#include "spinnet/halfint.hpp"

namespace spinnet {

// Condon-Shortley Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>.
SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                  HalfInt J, HalfInt M);

// Racah-Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, arguments in row-major
// order. Computed by the Racah single-sum formula over exact rationals.
SignedSqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                             HalfInt j4, HalfInt j5, HalfInt j6);

// Independent evaluation of the same symbol by contracting four
// Clebsch-Gordan coefficients over magnetic quantum numbers. Slow;
// used for cross-validation and golden-value generation only.
SignedSqrtRational wigner_6j_oracle(HalfInt j1, HalfInt j2, HalfInt j3,
                                    HalfInt j4, HalfInt j5, HalfInt j6);

// 9j symbol as the single sum over x of three 6j symbols with weight
// (-1)^{2x} (2x+1).
SignedSqrtRational wigner_9j(HalfInt j1, HalfInt j2, HalfInt j3,
                             HalfInt j4, HalfInt j5, HalfInt j6,
                             HalfInt j7, HalfInt j8, HalfInt j9);

// |LHS - RHS| of the three defining 6j relations, evaluated in binary64
// from exact 6j values.
double residual_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                   HalfInt e, HalfInt f, HalfInt p, HalfInt q,
                                   HalfInt r);
double residual_racah(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                      HalfInt p, HalfInt q);
double residual_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                              HalfInt p, HalfInt q);

}  // namespace spinnet
