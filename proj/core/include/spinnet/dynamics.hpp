#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinnet/simulate.hpp"

namespace spinnet {

enum class GateKind { racah, phase, rotation };

struct Gate {
    GateKind kind;
    int node = -1;        // racah/phase target
    RotationSpec rot{};   // rotation payload
};

// ordered gate sequence; file format one descriptor per line:
//   R <node>
//   P <node>
//   W <alpha> <beta> <gamma>
// blank lines and "#" comments skipped
struct Program {
    std::vector<Gate> steps;
    int length() const { return (int)steps.size(); }
};

Program parse_program(std::istream& in);
Program parse_program_text(const std::string& text);

enum class ProgramClass { m_class, j_class, alternating, altered };
ProgramClass program_class(const Program& p);
std::string program_class_name(ProgramClass c);

// U_L o ... o U_1 applied to s_in; an inapplicable step k raises
// invalid_argument naming k and the descriptor
SimState run_program(const SimState& s_in, const Program& p);

// <s_out | U_p | s_in>; s_out must live in the final basis of p
Complex amplitude(const SimState& s_in, const Program& p, const SimState& s_out);

// Hermitian H with exp(i H tau) = u, eigenphases on the principal
// branch (-pi, pi]
Eigen::MatrixXcd virtual_hamiltonian(const Eigen::MatrixXcd& u, double tau);

enum class PathWeighting { uniform, inverse_length, custom };

struct PathSumResult {
    Eigen::MatrixXcd matrix;
    long path_count = 0;
};

// Sum over simple directed paths from b_in to b_out in g of length
// <= l_max, each contributing W(len) times its lifted recoupling matrix.
// b_in and b_out must be (canonical representatives of) vertices of a
// rotation graph.
PathSumResult path_sum(const MoveGraph& g, const CouplingTree& b_in, const CouplingTree& b_out,
                       const std::vector<HalfInt>& leaf_spins, HalfInt J, PathWeighting w,
                       int l_max, const std::function<double(int)>& custom = {});

}  // namespace spinnet
