#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinnet/halfint.hpp"

namespace spinnet {

// Rooted plane binary tree with n+1 distinctly labeled leaves. Nodes are
// indexed in post-order (left subtree, right subtree, node), so node ids
// are stable for a given structure: the root is always the last id.
class CouplingTree {
public:
    struct Node {
        int left = -1;   // node id, -1 for leaves
        int right = -1;
        int label = 0;   // leaf label 1..n+1, 0 for non-leaves
        bool operator==(const Node&) const = default;
    };

    static CouplingTree leaf(int label);
    static CouplingTree join(const CouplingTree& l, const CouplingTree& r);

    int node_count() const { return (int)nodes_.size(); }
    int leaf_count() const { return ((int)nodes_.size() + 1) / 2; }
    int n() const { return leaf_count() - 1; }
    int root() const { return (int)nodes_.size() - 1; }
    const Node& node(int id) const { return nodes_.at(id); }
    bool is_leaf(int id) const { return nodes_.at(id).left < 0; }

    // ids of non-leaf, non-root nodes in post-order (the canonical order
    // for intermediate-spin assignments)
    std::vector<int> internal_nodes() const;
    // leaf labels in left-to-right order
    std::vector<int> leaf_sequence() const;
    // smallest leaf label in the subtree under id
    int min_leaf(int id) const;
    int parent(int id) const;  // -1 for root

    bool operator==(const CouplingTree& o) const { return nodes_ == o.nodes_; }
    bool operator!=(const CouplingTree& o) const { return !(*this == o); }

private:
    std::vector<Node> nodes_;
    int build(const CouplingTree& src, int src_id);
    friend CouplingTree twist_move(const CouplingTree&, int);
    friend class TreeBuilder;
};

enum class TreeCategory { plane_unlabeled, nonplane_unlabeled, plane_labeled, nonplane_labeled };
enum class RotateDir { left, right };

// Tamari rotation. direction=right requires node to be the left child of
// its parent: ((A B)_x C) -> (A (B C)); direction=left is the inverse and
// requires node to be the right child: (A (B C)_x) -> ((A B) C).
CouplingTree rotation_move(const CouplingTree& t, int node, RotateDir dir);

// Swap the two children of a non-leaf node.
CouplingTree twist_move(const CouplingTree& t, int node);

// Deterministic representative of the twist-equivalence class: children
// ordered recursively by minimum leaf label.
CouplingTree canonical_nonplane(const CouplingTree& t);

// All trees of the category for n couplings (n+1 leaves). Unlabeled
// categories use the leaf labeling 1..n+1 in left-to-right order as the
// shape carrier. Intended for the small n the graphs are built from;
// counts for large n come from count_trees.
std::vector<CouplingTree> enumerate_trees(int n, TreeCategory cat);
mpz_class count_trees(int n, TreeCategory cat);

// Unlabeled non-plane shape -> number of labeled decorations; keys are
// shape bracket strings with leaves rendered as "*". Values sum to
// (2n-1)!! over B_{n+1} shapes.
std::map<std::string, mpz_class> count_by_shape(int n);

// Admissible intermediate-spin assignments (post-order over internal
// nodes) for the given leaf spins and total J, in lexicographic order.
// leaf_spins[i] is the spin of the leaf labeled i+1.
std::vector<std::vector<HalfInt>> k_assignments(const CouplingTree& t,
                                                const std::vector<HalfInt>& leaf_spins,
                                                HalfInt J);

// Multiplicity of J in the iterated Clebsch-Gordan decomposition of the
// tensor product of the spins; tree-shape independent oracle for the
// k_assignments count.
long multiplicity_oracle(const std::vector<HalfInt>& leaf_spins, HalfInt J);

struct ParsedTree {
    CouplingTree tree;
    std::optional<std::vector<HalfInt>> leaf_spins;  // by leaf label, if "=two_j" present
};

// Grammar: tree := leaf | "(" tree "," tree ")"; leaf := integer ["=" integer]
// where the optional suffix carries two_j. Throws std::invalid_argument
// with a character position on malformed input.
ParsedTree parse_bracket(const std::string& s);
std::string format_bracket(const CouplingTree& t);

}  // namespace spinnet
