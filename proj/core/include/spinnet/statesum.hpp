#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <map>
#include <vector>

#include "spinnet/graph.hpp"  // ResourceError
#include "spinnet/halfint.hpp"

namespace spinnet {

// Labeled 3-dimensional triangulation. Each tetrahedron lists 6 edge ids
// in the 6j slot order {e1 e2 e3; e4 e5 e6}: opposite pairs are (e1,e4),
// (e2,e5), (e3,e6), so its four faces are (e1,e2,e3), (e1,e5,e6),
// (e4,e2,e6), (e4,e5,e3).
struct Triangulation3 {
    int n0 = 0;
    struct Edge {
        int id;
        bool boundary;
    };
    std::vector<Edge> edges;
    std::vector<std::array<int, 6>> tets;

    int n1() const { return (int)edges.size(); }
    int n3() const { return (int)tets.size(); }
    std::vector<int> interior_edges() const;
};

// File format (line-oriented, "#" comments):
//   PR3 v1
//   V <N0>
//   E <id> [boundary]
//   T <e1> <e2> <e3> <e4> <e5> <e6>
Triangulation3 parse_triangulation(std::istream& in);

// edge id -> spin
using SpinColoring = std::map<int, HalfInt>;

// "J <edge-id> <two_j>" lines
SpinColoring parse_coloring(std::istream& in);

// Z[T(j); L] = Lambda(L)^{-N0} prod_A (-1)^{2j_A}(2j_A+1) prod_B phi_B {6j}_B
// with Lambda(L) = 4L^3/(3C) and phi_B = e^{i pi sum_p j_p} (complex phase;
// the printed value is real for all shipped complexes). Exactly 0 when any
// triad fails. unnormalized drops the Lambda^{-N0} factor.
std::complex<double> state_functional(const Triangulation3& t, const SpinColoring& c,
                                      HalfInt L, double C, bool unnormalized = false);

// Sum of state_functional over all interior colorings with j <= L, the
// boundary edges held at fixed_boundary. Fixed lexicographic enumeration
// order with Kahan-compensated accumulation (bit-stable). Throws
// ResourceError when (2L+1)^{#interior} exceeds budget.
std::complex<double> partition_sum(const Triangulation3& t, HalfInt L, double C,
                                   const SpinColoring& fixed_boundary = {},
                                   long budget = 100000000, bool unnormalized = false);

// 2 <-> 3 bistellar move residual: |3-tet side - 2-tet side| for the
// configuration with boundary spins (a,b,c,d,e,f,p,q,r), interior edge x
// weighted (-1)^{2x}(2x+1). Throws std::invalid_argument when L truncates
// the admissible x-range.
double bistellar_23_check(const std::array<HalfInt, 9>& boundary, HalfInt L);

}  // namespace spinnet
