#include "spinnet/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace spinnet {

Program parse_program(std::istream& in) {
    Program p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        Gate g;
        if (tag == "R" || tag == "P") {
            g.kind = tag == "R" ? GateKind::racah : GateKind::phase;
            if (!(ls >> g.node))
                throw std::invalid_argument("program line " + std::to_string(lineno) +
                                            ": expected \"" + tag + " <node>\"");
        } else if (tag == "W") {
            g.kind = GateKind::rotation;
            double a, b, c;
            if (!(ls >> a >> b >> c))
                throw std::invalid_argument("program line " + std::to_string(lineno) +
                                            ": expected \"W <alpha> <beta> <gamma>\"");
            g.rot = RotationSpec::euler(a, b, c);
        } else {
            throw std::invalid_argument("program line " + std::to_string(lineno) +
                                        ": unknown descriptor \"" + tag + "\"");
        }
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("program line " + std::to_string(lineno) +
                                        ": trailing input \"" + extra + "\"");
        p.steps.push_back(g);
    }
    return p;
}

Program parse_program_text(const std::string& text) {
    std::istringstream in(text);
    return parse_program(in);
}

ProgramClass program_class(const Program& p) {
    bool any_m = false, any_j = false;
    for (const auto& g : p.steps)
        (g.kind == GateKind::rotation ? any_m : any_j) = true;
    if (!any_j) return ProgramClass::m_class;  // includes the empty program
    if (!any_m) return ProgramClass::j_class;
    // strict j/M alternation of even length
    if (p.length() % 2 == 0) {
        bool alt = true;
        for (int i = 0; i + 1 < p.length() && alt; i += 2) {
            bool m0 = p.steps[i].kind == GateKind::rotation;
            bool m1 = p.steps[i + 1].kind == GateKind::rotation;
            if (m0 == m1) alt = false;
            if (i > 0 && (p.steps[i].kind == GateKind::rotation) !=
                             (p.steps[0].kind == GateKind::rotation))
                alt = false;
        }
        if (alt) return ProgramClass::alternating;
    }
    return ProgramClass::altered;
}

std::string program_class_name(ProgramClass c) {
    switch (c) {
        case ProgramClass::m_class: return "M";
        case ProgramClass::j_class: return "j";
        case ProgramClass::alternating: return "alternating";
        case ProgramClass::altered: return "altered";
    }
    return "?";
}

SimState run_program(const SimState& s_in, const Program& p) {
    SimState s = s_in;
    for (int k = 0; k < p.length(); ++k) {
        const Gate& g = p.steps[k];
        try {
            switch (g.kind) {
                case GateKind::racah: s = apply_racah(s, g.node); break;
                case GateKind::phase: s = apply_phase(s, g.node); break;
                case GateKind::rotation: s = apply_rotation(s, g.rot); break;
            }
        } catch (const std::invalid_argument& e) {
            std::string what = "program step " + std::to_string(k + 1) + " (";
            what += g.kind == GateKind::racah ? "R " + std::to_string(g.node)
                    : g.kind == GateKind::phase ? "P " + std::to_string(g.node)
                                                : std::string("W");
            throw std::invalid_argument(what + "): " + e.what());
        }
    }
    return s;
}

Complex amplitude(const SimState& s_in, const Program& p, const SimState& s_out) {
    SimState fin = run_program(s_in, p);
    if (!(s_out.tree == fin.tree))
        throw std::invalid_argument("s_out is not in the final basis of the program");
    Complex acc = 0;
    for (const auto& [key, a] : s_out.amps) {
        auto it = fin.amps.find(key);
        if (it != fin.amps.end()) acc += std::conj(a) * it->second;
    }
    return acc;
}

Eigen::MatrixXcd virtual_hamiltonian(const Eigen::MatrixXcd& u, double tau) {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    int n = (int)u.rows();
    double dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm();
    if (dev > 1e-10)
        throw std::invalid_argument("input is not unitary (deviation " + std::to_string(dev) +
                                    ")");
    // unitary => normal, so the Schur form is diagonal; reassembling from
    // real eigenphases gives an exactly Hermitian H with exp(iH tau) = u
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    Eigen::VectorXd phase(n);
    for (int i = 0; i < n; ++i) {
        double ph = std::arg(schur.matrixT()(i, i));
        if (ph <= -M_PI) ph += 2 * M_PI;  // principal branch (-pi, pi]
        phase(i) = ph / tau;
    }
    const auto& Q = schur.matrixU();
    Eigen::MatrixXcd H = Q * phase.asDiagonal() * Q.adjoint();
    return (H + H.adjoint()) / 2.0;
}

PathSumResult path_sum(const MoveGraph& g, const CouplingTree& b_in, const CouplingTree& b_out,
                       const std::vector<HalfInt>& leaf_spins, HalfInt J, PathWeighting w,
                       int l_max, const std::function<double(int)>& custom) {
    if (g.kind != GraphKind::rotation)
        throw std::invalid_argument("path_sum runs on the rotation graph");
    if (w == PathWeighting::custom && !custom)
        throw std::invalid_argument("custom weighting needs a weight function");
    int src = g.vertex_index(b_in), dst = g.vertex_index(b_out);
    if (l_max < distance(g, b_in, b_out))
        throw std::invalid_argument("l_max is below the graph distance: empty path sum");

    auto weight = [&](int len) -> double {
        switch (w) {
            case PathWeighting::uniform: return 1.0;
            case PathWeighting::inverse_length: return len == 0 ? 1.0 : 1.0 / len;
            case PathWeighting::custom: return custom(len);
        }
        return 1.0;
    };

    // DFS over simple paths; accumulate each completed path's lifted matrix
    PathSumResult res;
    std::vector<char> used((size_t)g.vertices.size(), 0);
    std::vector<CouplingTree> path{parse_bracket(g.vertices[src]).tree};
    CouplingTree target = parse_bracket(g.vertices[dst]).tree;
    std::function<void(int)> dfs = [&](int v) {
        if (v == dst) {
            int len = (int)path.size() - 1;
            Eigen::MatrixXcd m =
                recoupling_matrix_along(path, path.front(), target, leaf_spins, J);
            if (res.path_count == 0)
                res.matrix = weight(len) * m;
            else
                res.matrix += weight(len) * m;
            ++res.path_count;
            return;  // simple paths: do not continue through the target
        }
        if ((int)path.size() - 1 >= l_max) return;
        used[v] = 1;
        for (const auto& e : g.adj[v]) {
            if (used[e.to]) continue;
            path.push_back(parse_bracket(g.vertices[e.to]).tree);
            dfs(e.to);
            path.pop_back();
        }
        used[v] = 0;
    };
    dfs(src);
    if (res.path_count == 0) throw std::invalid_argument("no paths within l_max");
    return res;
}

}  // namespace spinnet
