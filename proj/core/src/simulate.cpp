#include "spinnet/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "spinnet/wigner.hpp"

namespace spinnet {

namespace {

// leaf-label bitmask of each node's subtree
std::vector<uint64_t> leaf_masks(const CouplingTree& t) {
    std::vector<uint64_t> m(t.node_count(), 0);
    for (int i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(i);
        m[i] = nd.left < 0 ? (1ull << nd.label) : (m[nd.left] | m[nd.right]);
    }
    return m;
}

// two_j value at every node for one amplitude key (leaves from spins,
// internal nodes from the post-order assignment, root = J)
std::vector<int> node_values(const CouplingTree& t, const std::vector<HalfInt>& spins,
                             HalfInt J, const std::vector<int>& ks) {
    std::vector<int> v(t.node_count());
    int ki = 0;
    for (int i = 0; i < t.node_count(); ++i) {
        if (t.is_leaf(i))
            v[i] = spins.at(t.node(i).label - 1).two_j;
        else if (i == t.root())
            v[i] = J.two_j;
        else
            v[i] = ks.at(ki++);
    }
    return v;
}

// assignment key for a tree whose internal-node values are given by
// subtree leaf mask
std::vector<int> key_from_masks(const CouplingTree& t, const std::vector<uint64_t>& masks,
                                const std::map<uint64_t, int>& value_of) {
    std::vector<int> key;
    for (int i = 0; i < t.node_count() - 1; ++i)
        if (!t.is_leaf(i)) key.push_back(value_of.at(masks[i]));
    return key;
}

// binary64 6j memo for the gate hot path; exact values are recomputed on miss
double sixj_cached(int a, int b, int d, int c, int f, int e) {
    static std::map<std::array<int, 6>, double> memo;
    static std::shared_mutex mtx;
    std::array<int, 6> key{a, b, d, c, f, e};
    {
        std::shared_lock lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    double v = wigner_6j(HalfInt(a), HalfInt(b), HalfInt(d), HalfInt(c), HalfInt(f),
                         HalfInt(e))
                   .to_double();
    std::unique_lock lk(mtx);
    memo.emplace(key, v);
    return v;
}

int node_with_mask(const CouplingTree& t, const std::vector<uint64_t>& masks, uint64_t want) {
    for (int i = 0; i < t.node_count(); ++i)
        if (masks[i] == want && !t.is_leaf(i)) return i;
    throw std::logic_error("no node with requested leaf set");
}

}  // namespace

SimState SimState::basis_state(const CouplingTree& t, const std::vector<HalfInt>& spins,
                               HalfInt J, const std::vector<HalfInt>& ks, HalfInt M) {
    require_jm(J, M);
    SimState s{t, spins, J, {}};
    std::vector<int> key;
    for (auto k : ks) key.push_back(k.two_j);
    // validate every triad
    auto vals = node_values(t, spins, J, key);
    for (int i = 0; i < t.node_count(); ++i) {
        if (t.is_leaf(i)) continue;
        if (!triangle_ok(HalfInt(vals[t.node(i).left]), HalfInt(vals[t.node(i).right]),
                         HalfInt(vals[i])))
            throw std::invalid_argument("inadmissible intermediate assignment");
    }
    s.amps[{key, M.two_j}] = 1.0;
    return s;
}

double SimState::norm() const {
    double n2 = 0;
    for (const auto& [k, a] : amps) n2 += std::norm(a);
    return std::sqrt(n2);
}

SimState apply_racah(const SimState& s, int node) {
    const CouplingTree& t = s.tree;
    if (node < 0 || node >= t.node_count() || t.is_leaf(node))
        throw std::invalid_argument("racah gate needs an internal node");
    int p = t.parent(node);
    if (p < 0 || t.node(p).left != node)
        throw std::invalid_argument("racah gate needs the ((a b) c) pattern (left child)");
    int sib = t.node(p).right;

    CouplingTree u = rotation_move(t, node, RotateDir::right);
    auto masks_t = leaf_masks(t);
    auto masks_u = leaf_masks(u);
    uint64_t e_mask = masks_t[t.node(node).right] | masks_t[sib];

    SimState out{u, s.leaf_spins, s.J, {}};
    for (const auto& [key, amp] : s.amps) {
        auto vals = node_values(t, s.leaf_spins, s.J, key.first);
        int a = vals[t.node(node).left], b = vals[t.node(node).right];
        int d = vals[node], c = vals[sib], f = vals[p];
        std::map<uint64_t, int> value_of;
        for (int i = 0; i < t.node_count(); ++i)
            if (!t.is_leaf(i)) value_of[masks_t[i]] = vals[i];
        int ph = phase_sign(a + b + c + f);
        int lo = std::max(std::abs(b - c), std::abs(a - f));
        int hi = std::min(b + c, a + f);
        for (int e = lo; e <= hi; e += 2) {
            double sj = sixj_cached(a, b, d, c, f, e);
            if (sj == 0.0) continue;
            double coeff = ph * std::sqrt((double)(d + 1) * (e + 1)) * sj;
            value_of[e_mask] = e;
            auto new_key = key_from_masks(u, masks_u, value_of);
            out.amps[{new_key, key.second}] += coeff * amp;
        }
    }
    return out;
}

SimState apply_phase(const SimState& s, int node) {
    const CouplingTree& t = s.tree;
    if (node < 0 || node >= t.node_count() || t.is_leaf(node))
        throw std::invalid_argument("phase gate needs a non-leaf node");
    CouplingTree u = twist_move(t, node);
    auto masks_t = leaf_masks(t);
    auto masks_u = leaf_masks(u);
    SimState out{u, s.leaf_spins, s.J, {}};
    for (const auto& [key, amp] : s.amps) {
        auto vals = node_values(t, s.leaf_spins, s.J, key.first);
        int a = vals[t.node(node).left], b = vals[t.node(node).right], c = vals[node];
        std::map<uint64_t, int> value_of;
        for (int i = 0; i < t.node_count(); ++i)
            if (!t.is_leaf(i)) value_of[masks_t[i]] = vals[i];
        auto new_key = key_from_masks(u, masks_u, value_of);
        out.amps[{new_key, key.second}] += double(phase_sign(a + b - c)) * amp;
    }
    return out;
}

SimState canonicalize_state(const SimState& s) {
    SimState cur = s;
    for (;;) {
        int fix = -1;
        for (int i = 0; i < cur.tree.node_count(); ++i) {
            if (cur.tree.is_leaf(i)) continue;
            if (cur.tree.min_leaf(cur.tree.node(i).left) >
                cur.tree.min_leaf(cur.tree.node(i).right)) {
                fix = i;
                break;
            }
        }
        if (fix < 0) return cur;
        cur = apply_phase(cur, fix);
    }
}

namespace {

// twist the state from the canonical representative onto a specific plane
// representative of the same class
SimState uncanonicalize_state(const SimState& s, const CouplingTree& target) {
    SimState cur = s;
    auto masks_target = leaf_masks(target);
    for (;;) {
        if (cur.tree == target) return cur;
        auto masks = leaf_masks(cur.tree);
        int fix = -1;
        for (int i = 0; i < cur.tree.node_count(); ++i) {
            if (cur.tree.is_leaf(i)) continue;
            int tgt = node_with_mask(target, masks_target, masks[i]);
            uint64_t left_here = masks[cur.tree.node(i).left];
            uint64_t left_there = masks_target[target.node(tgt).left];
            if (left_here != left_there) {
                fix = i;
                break;
            }
        }
        if (fix < 0) throw std::logic_error("trees are not twist-equivalent");
        cur = apply_phase(cur, fix);
    }
}

}  // namespace

SimState apply_graph_edge(const SimState& s, const MoveEdge& e) {
    SimState cur = s;
    int x = e.node;
    auto masks = leaf_masks(cur.tree);
    uint64_t x_mask = masks[x];
    int p = cur.tree.parent(x);
    if (p < 0 || cur.tree.is_leaf(x)) throw std::invalid_argument("bad edge node");
    if (cur.tree.node(p).right == x) {
        cur = apply_phase(cur, p);
        x = node_with_mask(cur.tree, leaf_masks(cur.tree), x_mask);
    }
    if (e.type == MoveType::rotation_left) {
        cur = apply_phase(cur, x);  // x keeps its id: its subtree size is unchanged
        cur = apply_racah(cur, x);
    } else {
        cur = apply_racah(cur, x);
    }
    return canonicalize_state(cur);
}

Eigen::MatrixXd wigner_d(HalfInt J, double beta) {
    int tj = J.two_j;
    int dim = tj + 1;
    double c = std::cos(beta / 2), sn = std::sin(beta / 2);
    // DP over the 2J spin-1/2 factors: f[p][q] after step k sums products
    // of d^{1/2} entries with p pluses in the row word, q in the column word
    std::vector<std::vector<double>> f(tj + 1, std::vector<double>(tj + 1, 0.0));
    f[0][0] = 1.0;
    for (int step = 0; step < tj; ++step) {
        std::vector<std::vector<double>> g(tj + 1, std::vector<double>(tj + 1, 0.0));
        for (int p = 0; p <= step; ++p)
            for (int q = 0; q <= step; ++q) {
                double v = f[p][q];
                if (v == 0) continue;
                g[p + 1][q + 1] += v * c;    // (+|+)
                g[p + 1][q] += v * (-sn);    // (+|-)
                g[p][q + 1] += v * sn;       // (-|+)
                g[p][q] += v * c;            // (-|-)
            }
        f = std::move(g);
    }
    Eigen::MatrixXd d(dim, dim);
    for (int i = 0; i < dim; ++i) {
        int two_M = tj - 2 * i;
        for (int j = 0; j < dim; ++j) {
            int two_Mp = tj - 2 * j;
            mpq_class delta_sq(factorial((tj + two_M) / 2) * factorial((tj - two_M) / 2) *
                                   factorial((tj + two_Mp) / 2) * factorial((tj - two_Mp) / 2),
                               factorial(tj) * factorial(tj));
            delta_sq.canonicalize();
            d(i, j) = std::sqrt(delta_sq.get_d()) * f[(tj + two_M) / 2][(tj + two_Mp) / 2];
        }
    }
    return d;
}

Eigen::MatrixXcd wigner_D(HalfInt J, const RotationSpec& rot) {
    int dim = J.two_j + 1;
    if (!rot.axis_angle) {
        Eigen::MatrixXd d = wigner_d(J, rot.beta);
        Eigen::MatrixXcd D(dim, dim);
        for (int i = 0; i < dim; ++i) {
            double M = 0.5 * (J.two_j - 2 * i);
            for (int j = 0; j < dim; ++j) {
                double Mp = 0.5 * (J.two_j - 2 * j);
                D(i, j) = std::exp(Complex(0, -M * rot.alpha)) * d(i, j) *
                          std::exp(Complex(0, -Mp * rot.gamma));
            }
        }
        return D;
    }
    // U(omega; Theta, Phi) = A diag(e^{-i M omega}) A^dagger with
    // A = D(Phi, Theta, -Phi); this is exp(-i omega n.J)
    Eigen::MatrixXcd A = wigner_D(J, RotationSpec::euler(rot.phi, rot.theta, -rot.phi));
    Eigen::VectorXcd z(dim);
    for (int i = 0; i < dim; ++i) {
        double M = 0.5 * (J.two_j - 2 * i);
        z(i) = std::exp(Complex(0, -M * rot.omega));
    }
    return A * z.asDiagonal() * A.adjoint();
}

RotationSpec compose_rotations(const RotationSpec& r1, const RotationSpec& r2) {
    Eigen::MatrixXcd U = wigner_D(HalfInt(1), r1) * wigner_D(HalfInt(1), r2);
    // U = [[e^{-i(a+g)/2} cos(b/2), -e^{-i(a-g)/2} sin(b/2)],
    //      [e^{ i(a-g)/2} sin(b/2),  e^{ i(a+g)/2} cos(b/2)]]
    double cb = std::abs(U(0, 0)), sb = std::abs(U(1, 0));
    double beta = 2.0 * std::atan2(sb, cb);
    double alpha, gamma;
    const double eps = 1e-13;
    if (sb < eps) {
        gamma = 0.0;
        alpha = -2.0 * std::arg(U(0, 0));
    } else if (cb < eps) {
        gamma = 0.0;
        alpha = 2.0 * std::arg(U(1, 0));
    } else {
        double a0 = std::arg(U(0, 0));  // -(alpha+gamma)/2
        double b0 = std::arg(U(1, 0));  // (alpha-gamma)/2
        alpha = b0 - a0;
        gamma = -a0 - b0;
    }
    auto wrap = [](double x, double period) {
        x = std::fmod(x, period);
        return x < 0 ? x + period : x;
    };
    alpha = wrap(alpha, 4 * M_PI);
    gamma = wrap(gamma, 2 * M_PI);
    RotationSpec r = RotationSpec::euler(alpha, beta, gamma);
    // keep the SU(2) sheet: flip alpha by 2pi if the half-integer rep
    // reproduces -U
    Eigen::MatrixXcd cand = wigner_D(HalfInt(1), r);
    if ((cand + U).norm() < (cand - U).norm()) {
        r.alpha = wrap(r.alpha + 2 * M_PI, 4 * M_PI);
    }
    return r;
}

SimState apply_rotation(const SimState& s, const RotationSpec& rot) {
    Eigen::MatrixXcd D = wigner_D(s.J, rot);
    int tj = s.J.two_j;
    SimState out{s.tree, s.leaf_spins, s.J, {}};
    // group amplitudes by assignment
    std::map<std::vector<int>, std::map<int, Complex>> by_key;
    for (const auto& [key, amp] : s.amps) by_key[key.first][key.second] = amp;
    for (const auto& [ks, mamp] : by_key) {
        for (int jp = 0; jp <= tj; ++jp) {
            int two_Mp = tj - 2 * jp;
            Complex acc = 0;
            for (const auto& [two_M, amp] : mamp) {
                int i = (tj - two_M) / 2;
                acc += std::conj(D(i, jp)) * amp;
            }
            if (acc != Complex(0)) out.amps[{ks, two_Mp}] += acc;
        }
    }
    return out;
}

namespace {

Eigen::MatrixXcd recoupling_via_edges(const MoveGraph& g, const std::vector<MoveEdge>& edges,
                                      const CouplingTree& b_from, const CouplingTree& b_to,
                                      const std::vector<HalfInt>& spins, HalfInt J) {
    auto cols = k_assignments(b_from, spins, J);
    auto rows = k_assignments(b_to, spins, J);
    Eigen::MatrixXcd out((int)rows.size(), (int)cols.size());
    std::map<std::vector<int>, int> row_index;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<int> key;
        for (auto k : rows[r]) key.push_back(k.two_j);
        row_index[key] = (int)r;
    }
    HalfInt M = J;  // gates act identically on every M; track one column
    for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
        SimState s = SimState::basis_state(b_from, spins, J, cols[cidx], M);
        s = canonicalize_state(s);
        for (const auto& e : edges) s = apply_graph_edge(s, e);
        s = uncanonicalize_state(s, b_to);
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero((int)rows.size());
        for (const auto& [key, amp] : s.amps) {
            if (key.second != M.two_j) throw std::logic_error("M changed under j-gates");
            col(row_index.at(key.first)) += amp;
        }
        out.col((int)cidx) = col;
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd recoupling_matrix(const CouplingTree& b_from, const CouplingTree& b_to,
                                   const std::vector<HalfInt>& leaf_spins, HalfInt J) {
    if (b_from.leaf_count() != b_to.leaf_count() ||
        (int)leaf_spins.size() != b_from.leaf_count())
        throw std::invalid_argument("incompatible trees or spin list");
    MoveGraph g = build_graph(b_from.n(), GraphKind::rotation);
    auto edges = find_path(g, b_from, b_to);
    return recoupling_via_edges(g, edges, b_from, b_to, leaf_spins, J);
}

Eigen::MatrixXcd recoupling_matrix_along(const std::vector<CouplingTree>& vertex_path,
                                         const CouplingTree& b_from, const CouplingTree& b_to,
                                         const std::vector<HalfInt>& leaf_spins, HalfInt J) {
    if (vertex_path.empty()) throw std::invalid_argument("empty vertex path");
    MoveGraph g = build_graph(b_from.n(), GraphKind::rotation);
    std::vector<MoveEdge> edges;
    for (size_t i = 0; i + 1 < vertex_path.size(); ++i) {
        int u = g.vertex_index(vertex_path[i]);
        int v = g.vertex_index(vertex_path[i + 1]);
        const MoveEdge* found = nullptr;
        for (const auto& e : g.adj[u])
            if (e.to == v &&
                (!found || std::pair(e.type, e.node) < std::pair(found->type, found->node)))
                found = &e;
        if (!found) throw std::invalid_argument("vertex path is not a path in the graph");
        edges.push_back(*found);
    }
    return recoupling_via_edges(g, edges, b_from, b_to, leaf_spins, J);
}

std::vector<std::vector<int>> product_basis(const std::vector<HalfInt>& leaf_spins,
                                            HalfInt M) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int acc) {
        if (i == leaf_spins.size()) {
            if (acc == M.two_j) out.push_back(cur);
            return;
        }
        // prune: remaining spins bound the reachable total
        int rest = 0;
        for (size_t k = i; k < leaf_spins.size(); ++k) rest += leaf_spins[k].two_j;
        if (std::abs(M.two_j - acc) > rest) return;
        for (int m = leaf_spins[i].two_j; m >= -leaf_spins[i].two_j; m -= 2) {
            cur.push_back(m);
            rec(i + 1, acc + m);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Eigen::MatrixXd product_to_coupled(const std::vector<HalfInt>& leaf_spins,
                                   const CouplingTree& tree, HalfInt J, HalfInt M) {
    auto rows = k_assignments(tree, leaf_spins, J);
    auto cols = product_basis(leaf_spins, M);
    std::map<std::vector<int>, int> col_index;
    for (size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = (int)c;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero((int)rows.size(), (int)cols.size());
    int n_leaves = tree.leaf_count();
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<int> key;
        for (auto k : rows[r]) key.push_back(k.two_j);
        auto vals = node_values(tree, leaf_spins, J, key);
        // expand <tree; k J M | m_1 .. m_{n+1}> top-down
        std::function<std::map<std::vector<int>, double>(int, int)> rec =
            [&](int node, int two_m) -> std::map<std::vector<int>, double> {
            std::map<std::vector<int>, double> res;
            if (tree.is_leaf(node)) {
                std::vector<int> assign(n_leaves, INT32_MIN);
                assign[tree.node(node).label - 1] = two_m;
                res[assign] = 1.0;
                return res;
            }
            int l = tree.node(node).left, rgt = tree.node(node).right;
            for (int two_ml = -vals[l]; two_ml <= vals[l]; two_ml += 2) {
                int two_mr = two_m - two_ml;
                if (std::abs(two_mr) > vals[rgt]) continue;
                SignedSqrtRational cg =
                    clebsch_gordan(HalfInt(vals[l]), HalfInt(two_ml), HalfInt(vals[rgt]),
                                   HalfInt(two_mr), HalfInt(vals[node]), HalfInt(two_m));
                if (cg.is_zero()) continue;
                double cgd = cg.to_double();
                auto lm = rec(l, two_ml);
                auto rm = rec(rgt, two_mr);
                for (const auto& [la, lc] : lm)
                    for (const auto& [ra, rc] : rm) {
                        std::vector<int> merged = la;
                        for (int i = 0; i < n_leaves; ++i)
                            if (ra[i] != INT32_MIN) merged[i] = ra[i];
                        res[merged] += cgd * lc * rc;
                    }
            }
            return res;
        };
        for (const auto& [assign, coeff] : rec(tree.root(), M.two_j))
            out((int)r, col_index.at(assign)) = coeff;
    }
    return out;
}

Eigen::MatrixXcd compose_D_from_spins(const std::vector<HalfInt>& leaf_spins,
                                      const std::vector<HalfInt>& chain,
                                      const RotationSpec& rot) {
    size_t N = leaf_spins.size();
    if (N < 2 || chain.size() != N - 1)
        throw std::invalid_argument("chain must list the N-1 sequential totals");
    HalfInt J = chain.back();
    // left-comb tree 1..N
    CouplingTree t = CouplingTree::leaf(1);
    for (size_t i = 2; i <= N; ++i) t = CouplingTree::join(t, CouplingTree::leaf((int)i));
    std::vector<HalfInt> ks(chain.begin(), chain.end() - 1);
    std::vector<Eigen::MatrixXcd> Ds;
    for (auto j : leaf_spins) Ds.push_back(wigner_D(j, rot));

    int dim = J.two_j + 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<Eigen::MatrixXd> coeff(dim);  // rows of product_to_coupled per M
    std::vector<std::vector<std::vector<int>>> bases(dim);
    std::vector<std::vector<int>> key{{}};
    for (int i = 0; i < dim; ++i) {
        HalfInt M(J.two_j - 2 * i);
        auto all_rows = k_assignments(t, leaf_spins, J);
        // locate the chain's row
        int row = -1;
        for (size_t r = 0; r < all_rows.size(); ++r)
            if (all_rows[r] == ks) row = (int)r;
        if (row < 0) throw std::invalid_argument("chain is not admissible for these spins");
        Eigen::MatrixXd full = product_to_coupled(leaf_spins, t, J, M);
        coeff[i] = full.row(row);
        bases[i] = product_basis(leaf_spins, M);
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex acc = 0;
            for (size_t a = 0; a < bases[i].size(); ++a) {
                if (coeff[i](0, (int)a) == 0) continue;
                for (size_t b = 0; b < bases[j].size(); ++b) {
                    if (coeff[j](0, (int)b) == 0) continue;
                    Complex prod = coeff[i](0, (int)a) * coeff[j](0, (int)b);
                    for (size_t sidx = 0; sidx < N; ++sidx) {
                        int ri = (leaf_spins[sidx].two_j - bases[i][a][sidx]) / 2;
                        int ci = (leaf_spins[sidx].two_j - bases[j][b][sidx]) / 2;
                        prod *= Ds[sidx](ri, ci);
                    }
                    acc += prod;
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace spinnet
