#include "spinnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>

namespace spinnet {

namespace {

const char* move_type_name(MoveType t) {
    switch (t) {
        case MoveType::rotation_left: return "rot_l";
        case MoveType::rotation_right: return "rot_r";
        case MoveType::twist: return "twist";
    }
    return "?";
}

// All Tamari flips of a plane tree, annotated with (node, direction).
std::vector<std::pair<CouplingTree, MoveEdge>> tamari_flips(const CouplingTree& t) {
    std::vector<std::pair<CouplingTree, MoveEdge>> out;
    for (int x = 0; x < t.node_count(); ++x) {
        if (t.is_leaf(x)) continue;
        int p = t.parent(x);
        if (p < 0) continue;
        if (t.node(p).left == x)
            out.push_back({rotation_move(t, x, RotateDir::right),
                           MoveEdge{-1, MoveType::rotation_right, x}});
        else
            out.push_back({rotation_move(t, x, RotateDir::left),
                           MoveEdge{-1, MoveType::rotation_left, x}});
    }
    return out;
}

CouplingTree copy_subtree(const CouplingTree& t, int id) {
    const auto& nd = t.node(id);
    if (nd.left < 0) return CouplingTree::leaf(nd.label);
    return CouplingTree::join(copy_subtree(t, nd.left), copy_subtree(t, nd.right));
}

CouplingTree graft(const CouplingTree& t, int id, const CouplingTree& sub) {
    std::function<CouplingTree(int)> rec = [&](int cur) -> CouplingTree {
        if (cur == id) return sub;
        const auto& nd = t.node(cur);
        if (nd.left < 0) return CouplingTree::leaf(nd.label);
        return CouplingTree::join(rec(nd.left), rec(nd.right));
    };
    return rec(t.root());
}

// The two re-associations at internal node x of a canonical non-plane
// tree, modulo twists. With children (A, B) of x and sibling C:
//   rotation_left  -> pairing (A, C), canonical form of ((A C) B)
//   rotation_right -> pairing (B, C), canonical form of ((B C) A)
// Both are reachable from t by elementary moves (a twist at x or p, one
// Tamari rotation, then canonicalizing twists); the simulator lifts them
// that way, here only the resulting vertex matters.
CouplingTree reassociate(const CouplingTree& t, int x, MoveType which) {
    int p = t.parent(x);
    if (p < 0 || t.is_leaf(x)) throw std::invalid_argument("bad re-association node");
    CouplingTree A = copy_subtree(t, t.node(x).left);
    CouplingTree B = copy_subtree(t, t.node(x).right);
    int sib = (t.node(p).left == x) ? t.node(p).right : t.node(p).left;
    CouplingTree C = copy_subtree(t, sib);
    CouplingTree local = (which == MoveType::rotation_left)
                             ? CouplingTree::join(CouplingTree::join(A, C), B)
                             : CouplingTree::join(CouplingTree::join(B, C), A);
    return canonical_nonplane(graft(t, p, local));
}

}  // namespace

long MoveGraph::edge_count() const {
    long deg = 0;
    for (const auto& a : adj) deg += (long)a.size();
    return deg / 2;
}

int MoveGraph::vertex_index(const CouplingTree& t) const {
    CouplingTree v = (kind == GraphKind::rotation) ? canonical_nonplane(t) : t;
    std::string key = format_bracket(v);
    auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
    if (it == vertices.end() || *it != key)
        throw std::invalid_argument("tree is not a vertex of this graph: " + key);
    return (int)(it - vertices.begin());
}

MoveGraph build_graph(int n, GraphKind kind, int rotation_limit, int twist_rotation_limit) {
    if (n < 2) throw std::invalid_argument("graphs are defined for n >= 2");
    int limit = (kind == GraphKind::rotation) ? rotation_limit : twist_rotation_limit;
    if (n > limit)
        throw ResourceError("n=" + std::to_string(n) + " exceeds configured limit " +
                            std::to_string(limit));

    MoveGraph g;
    g.kind = kind;
    g.n = n;

    TreeCategory cat = (kind == GraphKind::rotation) ? TreeCategory::nonplane_labeled
                                                     : TreeCategory::plane_labeled;
    std::vector<CouplingTree> trees = enumerate_trees(n, cat);
    std::vector<std::string> keys;
    keys.reserve(trees.size());
    for (const auto& t : trees) keys.push_back(format_bracket(t));
    std::vector<size_t> order(trees.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    std::vector<CouplingTree> verts;
    for (size_t i : order) {
        g.vertices.push_back(keys[i]);
        verts.push_back(trees[i]);
    }
    g.adj.assign(verts.size(), {});
    auto index_of = [&](const CouplingTree& t) {
        std::string key = format_bracket(t);
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), key);
        return (int)(it - g.vertices.begin());
    };

    if (kind == GraphKind::rotation) {
        for (size_t u = 0; u < verts.size(); ++u) {
            const CouplingTree& t = verts[u];
            for (int x : t.internal_nodes()) {
                for (MoveType which : {MoveType::rotation_left, MoveType::rotation_right}) {
                    CouplingTree nb = reassociate(t, x, which);
                    g.adj[u].push_back({index_of(nb), which, x});
                }
            }
        }
        return g;
    }

    // twist_rotation: Tamari rotation edges at every internal node, plus
    // twists. For n=2 the full twist set already gives a cubic connected
    // graph; for n=3 the rotation edges form the disjoint pentagon
    // 5-cycles, and a deterministic connectivity-first perfect matching
    // of twist edges supplies the third edge at each vertex.
    for (size_t u = 0; u < verts.size(); ++u)
        for (const auto& [nb, ann] : tamari_flips(verts[u]))
            g.adj[u].push_back({index_of(nb), ann.type, ann.node});

    auto twist_targets = [&](const CouplingTree& t) {
        std::vector<std::pair<int, int>> out;  // (vertex index, twist node)
        for (int z = 0; z < t.node_count(); ++z) {
            if (t.is_leaf(z)) continue;
            out.push_back({index_of(twist_move(t, z)), z});
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    if (n == 2) {
        for (size_t u = 0; u < verts.size(); ++u)
            for (const auto& [v, z] : twist_targets(verts[u]))
                g.adj[u].push_back({v, MoveType::twist, z});
        return g;
    }

    // union-find over rotation components
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t u = 0; u < verts.size(); ++u)
        for (const auto& e : g.adj[u]) parent[find((int)u)] = find(e.to);

    std::vector<std::vector<std::pair<int, int>>> tw(verts.size());
    for (size_t u = 0; u < verts.size(); ++u) tw[u] = twist_targets(verts[u]);

    std::vector<int> matched(verts.size(), -1), matched_node(verts.size(), -1);
    // pass 1: prefer component-merging partners, in vertex order
    for (size_t u = 0; u < verts.size(); ++u) {
        if (matched[u] >= 0) continue;
        for (const auto& [v, z] : tw[u]) {
            if (matched[v] < 0 && find((int)u) != find(v)) {
                matched[u] = v;
                matched_node[u] = z;
                matched[v] = (int)u;
                parent[find((int)u)] = find(v);
                break;
            }
        }
    }
    // pass 2: any unmatched twist partner
    for (size_t u = 0; u < verts.size(); ++u) {
        if (matched[u] >= 0) continue;
        for (const auto& [v, z] : tw[u]) {
            if (matched[v] < 0 && v != (int)u) {
                matched[u] = v;
                matched_node[u] = z;
                matched[v] = (int)u;
                break;
            }
        }
    }
    for (size_t u = 0; u < verts.size(); ++u) {
        if (matched[u] < 0) throw std::logic_error("twist matching failed");
        if (matched_node[u] < 0) {
            // annotation from u's side: find the twist node mapping to the partner
            for (const auto& [v, z] : tw[u])
                if (v == matched[u]) {
                    matched_node[u] = z;
                    break;
                }
        }
        g.adj[u].push_back({matched[u], MoveType::twist, matched_node[u]});
    }
    return g;
}

CouplingTree apply_edge(const CouplingTree& t, const MoveEdge& e, GraphKind kind) {
    if (kind == GraphKind::twist_rotation) {
        switch (e.type) {
            case MoveType::twist: return twist_move(t, e.node);
            case MoveType::rotation_left: return rotation_move(t, e.node, RotateDir::left);
            case MoveType::rotation_right: return rotation_move(t, e.node, RotateDir::right);
        }
    }
    return reassociate(canonical_nonplane(t), e.node, e.type);
}

namespace {

std::vector<int> bfs_distances(const MoveGraph& g, int src) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const auto& e : g.adj[u])
            if (dist[e.to] < 0) {
                dist[e.to] = dist[u] + 1;
                q.push_back(e.to);
            }
    }
    return dist;
}

}  // namespace

int distance(const MoveGraph& g, const CouplingTree& t1, const CouplingTree& t2) {
    int a = g.vertex_index(t1), b = g.vertex_index(t2);
    auto dist = bfs_distances(g, a);
    if (dist[b] < 0) throw std::logic_error("graph is disconnected");
    return dist[b];
}

Diameter diameter(const MoveGraph& g, long all_pairs_budget) {
    bool exact = (long)g.vertices.size() <= all_pairs_budget;
    size_t count = exact ? g.vertices.size() : (size_t)std::max<long>(1, all_pairs_budget / 100);
    int best = 0;
    for (size_t s = 0; s < count; ++s) {
        auto dist = bfs_distances(g, (int)s);
        for (int d : dist) best = std::max(best, d);
    }
    return {best, !exact};
}

double rotation_diameter_bound(int n) {
    double lg = std::log2((double)n);
    return n * lg + n - 2 * lg + 1;
}

std::vector<MoveEdge> find_path(const MoveGraph& g, const CouplingTree& t1,
                                const CouplingTree& t2) {
    int a = g.vertex_index(t1), b = g.vertex_index(t2);
    auto dist = bfs_distances(g, b);  // distances to the target
    if (dist[a] < 0) throw std::logic_error("graph is disconnected");
    std::vector<MoveEdge> path;
    int cur = a;
    while (cur != b) {
        const MoveEdge* best = nullptr;
        for (const auto& e : g.adj[cur]) {
            if (dist[e.to] != dist[cur] - 1) continue;
            if (!best || std::pair(e.type, e.node) < std::pair(best->type, best->node))
                best = &e;
        }
        path.push_back(*best);
        cur = best->to;
    }
    return path;
}

void export_graph(const MoveGraph& g, std::ostream& os) {
    os << g.n << " " << (g.kind == GraphKind::rotation ? "rotation" : "twist_rotation") << " "
       << g.vertices.size() << " " << g.edge_count() << "\n";
    for (size_t u = 0; u < g.vertices.size(); ++u)
        for (const auto& e : g.adj[u])
            if ((int)u < e.to)
                os << u << " " << e.to << " " << e.node << " " << move_type_name(e.type)
                   << "\n";
}

double asymptotic_count_ratio(int n, CountSequence seq) {
    if (n < 4) throw std::invalid_argument("asymptotic ratio needs n >= 4");
    switch (seq) {
        case CountSequence::catalan: {
            double exact = count_trees(n, TreeCategory::plane_unlabeled).get_d();
            double est = std::exp(n * std::log(4.0)) /
                         std::sqrt(M_PI * n * (double)(n + 1) * (n + 1));
            est *= 1.0 - 1.0 / (8.0 * n) + 1.0 / (128.0 * n * n);
            return exact / est;
        }
        case CountSequence::double_factorial: {
            double exact = count_trees(n, TreeCategory::nonplane_labeled).get_d();
            double est = std::exp(n * std::log((double)n) + n * std::log(2.0) - n);
            return exact / est;
        }
        case CountSequence::quadruple_factorial: {
            double exact = count_trees(n, TreeCategory::plane_labeled).get_d();
            double est = std::exp(n * std::log((double)n) + 2 * n * std::log(2.0) - n);
            return exact / est;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace spinnet
