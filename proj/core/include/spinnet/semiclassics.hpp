#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>

#include <gmpxx.h>

#include "spinnet/halfint.hpp"

namespace spinnet {

// raised when the six lengths admit no Euclidean tetrahedron; carries the
// Cayley-Menger squared volume
struct NonEuclidean : std::runtime_error {
    double v_squared;
    explicit NonEuclidean(double v2)
        : std::runtime_error("non-Euclidean tetrahedron (V^2 = " + std::to_string(v2) + ")"),
          v_squared(v2) {}
};

// Tetrahedron on vertices 0..3 with the edge order matching the 6j
// argument order {j1 j2 j3; j4 j5 j6}:
//   lengths[0] = |01|, [1] = |02|, [2] = |12|, [3] = |23|, [4] = |13|, [5] = |03|
// so the four faces carry the symbol's four triads and opposite pairs are
// (j1,j4), (j2,j5), (j3,j6).
struct TetGeometry {
    std::array<double, 6> lengths;
    double v_squared;                 // from the Cayley-Menger determinant
    double volume;                    // sqrt(v_squared)
    std::array<double, 6> theta;      // dihedral data per edge, same order:
                                      // angle between outer normals of the
                                      // two faces sharing the edge
    std::array<std::array<double, 3>, 4> vertices;  // the embedding used
};

// Deterministic embedding: v0 at the origin, v1 on the +x axis, v2 in the
// xy-plane (y > 0), v3 in the upper half-space. Throws NonEuclidean when
// V^2 <= 0 (or a face is degenerate).
TetGeometry tet_geometry(const std::array<double, 6>& lengths);

// {6j}^2 / (1 / (24 pi V)), the squared symbol against its oscillation-
// averaged limiting value; tetrahedron built from the unshifted quantum
// numbers (a,b,c,d,e,f) = {a b c; d e f}
double wigner_limit_ratio(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);

// P(e) = (2e+1)(2d+1) / (12 pi V) for the symbol {a b d; c f e}, V from
// the unshifted arguments
double prob_recoupling_e(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);

// P(M) = C(2J, J-M) cos^{2(J+M)}(beta/2) sin^{2(J-M)}(beta/2)
double prob_M(HalfInt J, HalfInt M, double beta);
// same, exactly, at a rational value t = cos^2(beta/2)
mpq_class prob_M_exact(HalfInt J, HalfInt M, const mpq_class& cos2_half_beta);

// Gaussian estimate P(M0) exp{-(1/J)((M-M0)/sin beta)^2}, M0 = J cos beta,
// anchored at the continuous (gamma-function) extension of P at M0
double gaussian_limit(HalfInt J, HalfInt M, double beta);

// (12 pi V)^{-1/2} cos(sum_r l_r theta_r + pi/4) with l_r = j_r + 1/2
// and the tetrahedron built from the shifted lengths l_r
double ponzano_regge_estimate(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                              HalfInt f);

// Sweep over k for the family k*base (base given as two_j), writing CSV
// lines "k, exact, estimate, envelope, normalized_error" (exact 6j, PR
// estimate, (12 pi V)^{-1/2} at the shifted lengths, |estimate - exact|
// / envelope).
void pr_sweep_csv(const std::array<int, 6>& base_two_j, int k_min, int k_max,
                  std::ostream& os);

}  // namespace spinnet
