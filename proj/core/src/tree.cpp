#include "spinnet/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinnet {

CouplingTree CouplingTree::leaf(int label) {
    CouplingTree t;
    t.nodes_.push_back({-1, -1, label});
    return t;
}

int CouplingTree::build(const CouplingTree& src, int src_id) {
    const Node& nd = src.nodes_[src_id];
    if (nd.left < 0) {
        nodes_.push_back({-1, -1, nd.label});
    } else {
        int l = build(src, nd.left);
        int r = build(src, nd.right);
        nodes_.push_back({l, r, 0});
    }
    return (int)nodes_.size() - 1;
}

CouplingTree CouplingTree::join(const CouplingTree& l, const CouplingTree& r) {
    CouplingTree t;
    int li = t.build(l, l.root());
    int ri = t.build(r, r.root());
    t.nodes_.push_back({li, ri, 0});
    return t;
}

std::vector<int> CouplingTree::internal_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < (int)nodes_.size() - 1; ++i)
        if (nodes_[i].left >= 0) out.push_back(i);
    return out;
}

std::vector<int> CouplingTree::leaf_sequence() const {
    std::vector<int> out;
    std::function<void(int)> rec = [&](int id) {
        if (is_leaf(id)) {
            out.push_back(nodes_[id].label);
        } else {
            rec(nodes_[id].left);
            rec(nodes_[id].right);
        }
    };
    rec(root());
    return out;
}

int CouplingTree::min_leaf(int id) const {
    const Node& nd = nodes_[id];
    if (nd.left < 0) return nd.label;
    return std::min(min_leaf(nd.left), min_leaf(nd.right));
}

int CouplingTree::parent(int id) const {
    for (int i = 0; i < (int)nodes_.size(); ++i)
        if (nodes_[i].left == id || nodes_[i].right == id) return i;
    return -1;
}

namespace {

CouplingTree subtree(const CouplingTree& t, int id) {
    const auto& nd = t.node(id);
    if (nd.left < 0) return CouplingTree::leaf(nd.label);
    return CouplingTree::join(subtree(t, nd.left), subtree(t, nd.right));
}

CouplingTree replace(const CouplingTree& t, int id, const CouplingTree& sub) {
    std::function<CouplingTree(int)> rec = [&](int cur) -> CouplingTree {
        if (cur == id) return sub;
        const auto& nd = t.node(cur);
        if (nd.left < 0) return CouplingTree::leaf(nd.label);
        return CouplingTree::join(rec(nd.left), rec(nd.right));
    };
    return rec(t.root());
}

}  // namespace

CouplingTree rotation_move(const CouplingTree& t, int node, RotateDir dir) {
    if (node < 0 || node >= t.node_count() || t.is_leaf(node))
        throw std::invalid_argument("rotation at a leaf or invalid node");
    int p = t.parent(node);
    if (p < 0) throw std::invalid_argument("rotation at the root");
    const auto& pn = t.node(p);
    if (dir == RotateDir::right) {
        if (pn.left != node)
            throw std::invalid_argument("right rotation requires a left child");
        CouplingTree A = subtree(t, t.node(node).left);
        CouplingTree B = subtree(t, t.node(node).right);
        CouplingTree C = subtree(t, pn.right);
        return replace(t, p, CouplingTree::join(A, CouplingTree::join(B, C)));
    }
    if (pn.right != node)
        throw std::invalid_argument("left rotation requires a right child");
    CouplingTree A = subtree(t, pn.left);
    CouplingTree B = subtree(t, t.node(node).left);
    CouplingTree C = subtree(t, t.node(node).right);
    return replace(t, p, CouplingTree::join(CouplingTree::join(A, B), C));
}

CouplingTree twist_move(const CouplingTree& t, int node) {
    if (node < 0 || node >= t.node_count() || t.is_leaf(node))
        throw std::invalid_argument("twist at a leaf or invalid node");
    CouplingTree l = subtree(t, t.node(node).left);
    CouplingTree r = subtree(t, t.node(node).right);
    return replace(t, node, CouplingTree::join(r, l));
}

CouplingTree canonical_nonplane(const CouplingTree& t) {
    std::function<CouplingTree(int)> rec = [&](int id) -> CouplingTree {
        const auto& nd = t.node(id);
        if (nd.left < 0) return CouplingTree::leaf(nd.label);
        CouplingTree l = rec(nd.left);
        CouplingTree r = rec(nd.right);
        if (t.min_leaf(nd.left) <= t.min_leaf(nd.right))
            return CouplingTree::join(l, r);
        return CouplingTree::join(r, l);
    };
    return rec(t.root());
}

namespace {

// all plane shapes over an ordered sequence of leaf trees
std::vector<CouplingTree> shapes_over(const std::vector<CouplingTree>& leaves, int lo, int hi) {
    if (hi - lo == 1) return {leaves[lo]};
    std::vector<CouplingTree> out;
    for (int mid = lo + 1; mid < hi; ++mid)
        for (const auto& l : shapes_over(leaves, lo, mid))
            for (const auto& r : shapes_over(leaves, mid, hi))
                out.push_back(CouplingTree::join(l, r));
    return out;
}

// canonical non-plane trees over a label set (left child holds the
// smallest label; all splits with the smallest label on the left)
std::vector<CouplingTree> nonplane_over(const std::vector<int>& labels) {
    if (labels.size() == 1) return {CouplingTree::leaf(labels[0])};
    std::vector<CouplingTree> out;
    int m = (int)labels.size();
    // labels is sorted; labels[0] always goes left
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> left{labels[0]}, right;
        for (int i = 1; i < m; ++i)
            (mask & (1u << (i - 1)) ? left : right).push_back(labels[i]);
        if (right.empty()) continue;
        for (const auto& l : nonplane_over(left))
            for (const auto& r : nonplane_over(right)) out.push_back(CouplingTree::join(l, r));
    }
    return out;
}

std::string shape_key(const CouplingTree& t, int id) {
    if (t.is_leaf(id)) return "*";
    std::string l = shape_key(t, t.node(id).left);
    std::string r = shape_key(t, t.node(id).right);
    if (l.size() > r.size() || (l.size() == r.size() && l > r)) std::swap(l, r);
    return "(" + l + "," + r + ")";
}

}  // namespace

std::vector<CouplingTree> enumerate_trees(int n, TreeCategory cat) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> labels(n + 1);
    std::iota(labels.begin(), labels.end(), 1);
    switch (cat) {
        case TreeCategory::plane_unlabeled: {
            std::vector<CouplingTree> leaves;
            for (int l : labels) leaves.push_back(CouplingTree::leaf(l));
            return shapes_over(leaves, 0, n + 1);
        }
        case TreeCategory::plane_labeled: {
            std::vector<CouplingTree> out;
            std::vector<int> perm = labels;
            do {
                std::vector<CouplingTree> leaves;
                for (int l : perm) leaves.push_back(CouplingTree::leaf(l));
                auto shapes = shapes_over(leaves, 0, n + 1);
                out.insert(out.end(), shapes.begin(), shapes.end());
            } while (std::next_permutation(perm.begin(), perm.end()));
            return out;
        }
        case TreeCategory::nonplane_labeled:
            return nonplane_over(labels);
        case TreeCategory::nonplane_unlabeled: {
            // one representative per Wedderburn-Etherington shape
            auto all = nonplane_over(labels);
            std::map<std::string, CouplingTree> reps;
            for (const auto& t : all) reps.emplace(shape_key(t, t.root()), t);
            std::vector<CouplingTree> out;
            for (auto& [k, t] : reps) out.push_back(t);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

mpz_class count_trees(int n, TreeCategory cat) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    switch (cat) {
        case TreeCategory::plane_unlabeled: {  // Catalan C_n
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
            return c / (n + 1);
        }
        case TreeCategory::nonplane_labeled: {  // (2n-1)!!
            mpz_class d = 1;
            for (int k = 3; k <= 2 * n - 1; k += 2) d *= k;
            return d;
        }
        case TreeCategory::plane_labeled:  // (2n)!/n! = 2^n (2n-1)!!
            return count_trees(n, TreeCategory::nonplane_labeled) << n;
        case TreeCategory::nonplane_unlabeled: {  // Wedderburn-Etherington B_{n+1}
            int N = n + 1;  // leaves
            std::vector<mpz_class> b(N + 1, 0);
            b[1] = 1;
            for (int m = 2; m <= N; ++m) {
                for (int i = 1; i < m - i; ++i) b[m] += b[i] * b[m - i];
                if (m % 2 == 0) b[m] += b[m / 2] * (b[m / 2] + 1) / 2;
            }
            return b[N];
        }
    }
    throw std::logic_error("unreachable");
}

std::map<std::string, mpz_class> count_by_shape(int n) {
    std::map<std::string, mpz_class> out;
    for (const auto& t : enumerate_trees(n, TreeCategory::nonplane_labeled))
        out[shape_key(t, t.root())] += 1;
    return out;
}

namespace {

struct KOption {
    HalfInt value;
    std::vector<HalfInt> assignment;  // post-order over the subtree's internal nodes
};

void k_options(const CouplingTree& t, int id, const std::vector<HalfInt>& leaf_spins,
               bool is_root, std::vector<KOption>& out) {
    if (t.is_leaf(id)) {
        int lab = t.node(id).label;
        out.push_back({leaf_spins.at(lab - 1), {}});
        return;
    }
    std::vector<KOption> ls, rs;
    k_options(t, t.node(id).left, leaf_spins, false, ls);
    k_options(t, t.node(id).right, leaf_spins, false, rs);
    for (const auto& lo : ls) {
        for (const auto& ro : rs) {
            int two_lo = std::abs(lo.value.two_j - ro.value.two_j);
            int two_hi = lo.value.two_j + ro.value.two_j;
            for (int two_k = two_lo; two_k <= two_hi; two_k += 2) {
                KOption opt{HalfInt(two_k), lo.assignment};
                opt.assignment.insert(opt.assignment.end(), ro.assignment.begin(),
                                      ro.assignment.end());
                if (!is_root) opt.assignment.push_back(HalfInt(two_k));
                out.push_back(opt);
            }
        }
    }
}

}  // namespace

std::vector<std::vector<HalfInt>> k_assignments(const CouplingTree& t,
                                                const std::vector<HalfInt>& leaf_spins,
                                                HalfInt J) {
    if ((int)leaf_spins.size() != t.leaf_count())
        throw std::invalid_argument("leaf spin count mismatch");
    std::vector<KOption> opts;
    k_options(t, t.root(), leaf_spins, true, opts);
    std::vector<std::vector<HalfInt>> out;
    for (auto& o : opts)
        if (o.value == J) out.push_back(std::move(o.assignment));
    std::sort(out.begin(), out.end(),
              [](const std::vector<HalfInt>& a, const std::vector<HalfInt>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    return out;
}

long multiplicity_oracle(const std::vector<HalfInt>& leaf_spins, HalfInt J) {
    if (leaf_spins.empty()) throw std::invalid_argument("no spins");
    std::map<int, long> mult{{leaf_spins[0].two_j, 1}};
    for (size_t i = 1; i < leaf_spins.size(); ++i) {
        std::map<int, long> next;
        for (const auto& [two_a, m] : mult) {
            int two_b = leaf_spins[i].two_j;
            for (int two_c = std::abs(two_a - two_b); two_c <= two_a + two_b; two_c += 2)
                next[two_c] += m;
        }
        mult = std::move(next);
    }
    auto it = mult.find(J.two_j);
    return it == mult.end() ? 0 : it->second;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::map<int, HalfInt> spins;
    bool any_spin = false, all_spin = true;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer");
        return std::atoi(s.substr(start, pos - start).c_str());
    }
    CouplingTree tree(std::vector<int>& seen) {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            CouplingTree l = tree(seen);
            skip_ws();
            if (pos >= s.size() || s[pos] != ',') fail("expected ',' (nodes are binary)");
            ++pos;
            CouplingTree r = tree(seen);
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')' (nodes are binary)");
            ++pos;
            return CouplingTree::join(l, r);
        }
        int lab = integer();
        if (lab <= 0) fail("leaf labels are positive integers");
        for (int sl : seen)
            if (sl == lab) fail("duplicate leaf label " + std::to_string(lab));
        seen.push_back(lab);
        skip_ws();
        if (pos < s.size() && s[pos] == '=') {
            ++pos;
            int two_j = integer();
            if (two_j < 0) fail("negative spin");
            spins.emplace(lab, HalfInt(two_j));
            any_spin = true;
        } else {
            all_spin = false;
        }
        return CouplingTree::leaf(lab);
    }
};

}  // namespace

ParsedTree parse_bracket(const std::string& s) {
    Parser p{s};
    std::vector<int> seen;
    CouplingTree t = p.tree(seen);
    p.skip_ws();
    if (p.pos != s.size()) p.fail("trailing input");
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != (int)i + 1) {
            p.pos = 0;
            p.fail("leaf labels must form 1..n+1");
        }
    ParsedTree out{t, std::nullopt};
    if (p.any_spin) {
        if (!p.all_spin) {
            p.pos = 0;
            p.fail("either all leaves carry =two_j or none");
        }
        std::vector<HalfInt> spins;
        for (size_t i = 1; i <= seen.size(); ++i) spins.push_back(p.spins.at((int)i));
        out.leaf_spins = spins;
    }
    return out;
}

std::string format_bracket(const CouplingTree& t) {
    std::function<std::string(int)> rec = [&](int id) -> std::string {
        const auto& nd = t.node(id);
        if (nd.left < 0) return std::to_string(nd.label);
        return "(" + rec(nd.left) + "," + rec(nd.right) + ")";
    };
    return rec(t.root());
}

}  // namespace spinnet
