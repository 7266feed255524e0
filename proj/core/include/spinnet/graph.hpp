#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinnet/tree.hpp"

namespace spinnet {

enum class GraphKind { rotation, twist_rotation };

// Edge annotations; the tie-break ordering for deterministic paths is
// (type, node) with this enum order.
enum class MoveType { rotation_left, rotation_right, twist };

struct MoveEdge {
    int to;
    MoveType type;
    int node;  // node id in the source vertex's tree
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rotation graph (vertices: canonical non-plane labeled trees, edges: the
// two re-associations at each internal node, computed modulo twists) or
// Twist-Rotation graph (vertices: plane labeled trees; edges: Tamari
// rotations plus twists chosen so every vertex has degree 3; see
// build_graph notes in graph.cpp).
struct MoveGraph {
    GraphKind kind;
    int n;
    std::vector<std::string> vertices;  // bracket strings, lexicographic
    std::vector<std::vector<MoveEdge>> adj;

    long edge_count() const;
    // index of a tree (canonicalized first for kind=rotation); throws
    // std::invalid_argument if the tree does not belong to the graph.
    int vertex_index(const CouplingTree& t) const;
};

// Default limits: rotation n <= 7; twist_rotation n <= 3 (the cubic edge
// set does not extend past n = 3 with single elementary moves).
MoveGraph build_graph(int n, GraphKind kind, int rotation_limit = 7,
                      int twist_rotation_limit = 3);

// Apply one annotated edge move to a vertex tree, returning the target
// vertex tree. For kind=twist_rotation this is a single elementary move;
// for kind=rotation it is the re-association realized by elementary
// moves followed by canonicalization.
CouplingTree apply_edge(const CouplingTree& t, const MoveEdge& e, GraphKind kind);

int distance(const MoveGraph& g, const CouplingTree& t1, const CouplingTree& t2);

struct Diameter {
    int value;
    bool estimate;  // true when sampled (|V| above the all-pairs budget)
};
Diameter diameter(const MoveGraph& g, long all_pairs_budget = 100000);

// Upper bound for the rotation graph diameter: n lg n + n - 2 lg n + 1.
double rotation_diameter_bound(int n);

// Shortest path t1 -> t2 as annotated moves; deterministic under the
// smallest-(type, node) tie-break.
std::vector<MoveEdge> find_path(const MoveGraph& g, const CouplingTree& t1,
                                const CouplingTree& t2);

// "n kind |V| |E|" header then one "u v move_node move_type" line per
// undirected edge (u < v, annotation from u's side).
void export_graph(const MoveGraph& g, std::ostream& os);

enum class CountSequence { catalan, double_factorial, quadruple_factorial };

// exact count / asymptotic estimate
double asymptotic_count_ratio(int n, CountSequence seq);

}  // namespace spinnet
