#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

#include "spinnet/graph.hpp"
#include "spinnet/halfint.hpp"
#include "spinnet/tree.hpp"

namespace spinnet {

using Complex = std::complex<double>;

// Sparse amplitude vector over (intermediate-spin assignment, M) for one
// plane coupling tree with fixed leaf spins and total J.
struct SimState {
    CouplingTree tree;
    std::vector<HalfInt> leaf_spins;  // indexed by leaf label - 1
    HalfInt J;
    // key: (two_j of internal nodes in post-order, two_M)
    std::map<std::pair<std::vector<int>, int>, Complex> amps;

    static SimState basis_state(const CouplingTree& t, const std::vector<HalfInt>& spins,
                                HalfInt J, const std::vector<HalfInt>& ks, HalfInt M);
    double norm() const;
};

// Racah transform at node d in the local pattern ((a b)_d c)_f; the node
// must be an internal left child. Tree becomes (a (b c)_e)_f and the
// amplitudes mix over the new intermediate e with the exact matrix
//   U_{ed} = (-1)^{a+b+c+f} sqrt((2d+1)(2e+1)) {a b d; c f e}.
SimState apply_racah(const SimState& s, int node);

// Phase transform: swap the children of a non-leaf node and multiply each
// amplitude by (-1)^{a+b-c} of the local triad.
SimState apply_phase(const SimState& s, int node);

// Twist the tree into its canonical non-plane representative through
// phase gates.
SimState canonicalize_state(const SimState& s);

// Lift one rotation-graph edge (from the canonical vertex s.tree) to
// elementary gates: orienting twists, one Racah transform, canonicalizing
// twists.
SimState apply_graph_edge(const SimState& s, const MoveEdge& e);

struct RotationSpec {
    bool axis_angle = false;
    double alpha = 0, beta = 0, gamma = 0;  // Euler angles
    double omega = 0, theta = 0, phi = 0;   // rotation angle and axis direction

    static RotationSpec euler(double a, double b, double g) { return {false, a, b, g}; }
    static RotationSpec axis(double w, double th, double ph) {
        RotationSpec r;
        r.axis_angle = true;
        r.omega = w;
        r.theta = th;
        r.phi = ph;
        return r;
    }
};

// Reduced rotation matrix d^J(beta), built by the spin-1/2 product
// construction: d^J_{MM'} = Delta(J,M,M') * S_{MM'} where S accumulates
// the 2J-fold products of d^{1/2} entries and
// Delta = sqrt((J+M)!(J-M)!(J+M')!(J-M')!)/(2J)!.
// Rows index M and columns M', both from +J down to -J.
Eigen::MatrixXd wigner_d(HalfInt J, double beta);

// Full rotation matrix. Euler form: D_{MM'} = e^{-iM alpha} d_{MM'}(beta)
// e^{-iM' gamma}. Axis-angle form: conjugation of the z-axis phase
// matrix by D(phi, theta, -phi).
Eigen::MatrixXcd wigner_D(HalfInt J, const RotationSpec& rot);

// Euler angles of the product rotation, extracted from the 2x2 spin-1/2
// matrix product. beta in [0, pi]; gamma in [0, 2pi), zeroed at the
// gimbal degeneracy; alpha in [0, 4pi) so the SU(2) sheet is preserved
// and the group property holds for half-integer J as well.
RotationSpec compose_rotations(const RotationSpec& r1, const RotationSpec& r2);

// M-gate: a'_{M'} = sum_M conj(D^J_{M M'}) a_M; tree and intermediate
// spins untouched.
SimState apply_rotation(const SimState& s, const RotationSpec& rot);

// Unitary change of coupling scheme between two trees over the same
// spins and J, computed along the shortest rotation-graph path (rows:
// k_assignments of b_to, columns: k_assignments of b_from, both in
// lexicographic post-order; twists to and from the canonical
// representatives are included as phase gates).
Eigen::MatrixXcd recoupling_matrix(const CouplingTree& b_from, const CouplingTree& b_to,
                                   const std::vector<HalfInt>& leaf_spins, HalfInt J);

// Same, but along an explicit rotation-graph vertex path (each
// consecutive pair adjacent).
Eigen::MatrixXcd recoupling_matrix_along(const std::vector<CouplingTree>& vertex_path,
                                         const CouplingTree& b_from, const CouplingTree& b_to,
                                         const std::vector<HalfInt>& leaf_spins, HalfInt J);

// Rows: k_assignments(tree, spins, J); columns: product-basis tuples
// (m_1..m_{n+1}) with sum M, lexicographic with each m descending from
// +j. Entries are products of Clebsch-Gordan coefficients along the tree.
Eigen::MatrixXd product_to_coupled(const std::vector<HalfInt>& leaf_spins,
                                   const CouplingTree& tree, HalfInt J, HalfInt M);
// the product-basis tuple order used for the columns above
std::vector<std::vector<int>> product_basis(const std::vector<HalfInt>& leaf_spins, HalfInt M);

// Rebuild the D^{kappa_N} block of the N-fold product of single-spin
// rotations through the sequential coupling chain kappa (kappa[i] is the
// total after coupling spins 1..i+1; kappa[0] omitted, implied j_1).
Eigen::MatrixXcd compose_D_from_spins(const std::vector<HalfInt>& leaf_spins,
                                      const std::vector<HalfInt>& chain,
                                      const RotationSpec& rot);

}  // namespace spinnet
