// spinnet: batch CLI over the recoupling engine.
// Exit codes: 0 success, 1 computation failure, 2 usage/parse, 3 resource budget.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spinnet/dynamics.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/semiclassics.hpp"
#include "spinnet/simulate.hpp"
#include "spinnet/statesum.hpp"
#include "spinnet/tree.hpp"
#include "spinnet/wigner.hpp"

using namespace spinnet;

namespace {

// round-trip decimal; plain integers get a trailing ".0"
std::string fd(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

std::string exact_line(const SignedSqrtRational& v) {
    return v.str() + " " + fd(v.to_double());
}

std::vector<HalfInt> to_half(const std::vector<int>& two_j) {
    std::vector<HalfInt> out;
    for (int t : two_j) out.push_back(HalfInt(t));
    return out;
}

// integer-sum (parity) requirement per triad; violation is a usage error,
// unlike an ordinary triangle failure which just yields a zero symbol
void require_triad_parity(const std::vector<HalfInt>& s, std::initializer_list<int> idx) {
    int sum = 0;
    for (int i : idx) sum += s[i].two_j;
    if (sum % 2 != 0) {
        std::string what = "parity violation: triad (";
        bool first = true;
        for (int i : idx) {
            if (!first) what += ", ";
            what += s[i].str();
            first = false;
        }
        throw std::invalid_argument(what + ") has non-integer sum");
    }
}

GraphKind parse_kind(const std::string& s) {
    if (s == "rotation") return GraphKind::rotation;
    if (s == "twist-rotation" || s == "twist_rotation") return GraphKind::twist_rotation;
    throw CLI::ValidationError("kind must be rotation or twist-rotation");
}

const char* move_name(MoveType t) {
    switch (t) {
        case MoveType::rotation_left: return "rot_l";
        case MoveType::rotation_right: return "rot_r";
        case MoveType::twist: return "twist";
    }
    return "?";
}

void print_state(const SimState& s) {
    std::cout << "tree " << format_bracket(s.tree) << "\n";
    for (const auto& [key, amp] : s.amps) {
        std::cout << "ks";
        for (int k : key.first) std::cout << " " << k;
        std::cout << " M " << key.second << " " << fd(amp.real()) << " " << fd(amp.imag())
                  << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact SU(2) recoupling engine and spin-network circuit simulator"};
    app.require_subcommand(1);
    unsigned long seed = 0;
    app.add_option("--seed", seed, "rng seed for randomized commands (default 0)");

    // ---- sixj / cg / ninej ----
    std::vector<int> spin_args;
    bool verify = false;

    auto* sixj = app.add_subcommand("sixj", "6j symbol {j1 j2 j3; j4 j5 j6}, spins as two_j");
    sixj->add_option("two_j", spin_args, "six two_j integers")->expected(6);
    sixj->add_flag("--verify", verify, "cross-check against the CG-contraction oracle");
    sixj->callback([&] {
        auto s = to_half(spin_args);
        for (auto triad : {std::array{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}})
            require_triad_parity(s, {triad[0], triad[1], triad[2]});
        auto v = wigner_6j(s[0], s[1], s[2], s[3], s[4], s[5]);
        if (verify) {
            auto o = wigner_6j_oracle(s[0], s[1], s[2], s[3], s[4], s[5]);
            if (!(v == o))
                throw std::runtime_error("oracle mismatch: " + v.str() + " vs " + o.str());
        }
        std::cout << exact_line(v) << "\n";
    });

    auto* cg = app.add_subcommand("cg", "Clebsch-Gordan <j1 m1 j2 m2 | J M>, all as two_j");
    cg->add_option("two_jm", spin_args, "two_j1 two_m1 two_j2 two_m2 two_J two_M")
        ->expected(6);
    cg->callback([&] {
        auto s = to_half(spin_args);
        require_jm(s[0], s[1]);
        require_jm(s[2], s[3]);
        require_jm(s[4], s[5]);
        require_triad_parity(s, {0, 2, 4});
        std::cout << exact_line(clebsch_gordan(s[0], s[1], s[2], s[3], s[4], s[5])) << "\n";
    });

    auto* ninej = app.add_subcommand("ninej", "9j symbol, row-major, spins as two_j");
    ninej->add_option("two_j", spin_args, "nine two_j integers")->expected(9);
    ninej->add_flag("--verify", verify,
                    "cross-check against the transposed evaluation (exact symmetry)");
    ninej->callback([&] {
        auto s = to_half(spin_args);
        for (auto triad : {std::array{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7},
                           {2, 5, 8}})
            require_triad_parity(s, {triad[0], triad[1], triad[2]});
        auto v = wigner_9j(s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
        if (verify) {
            auto o = wigner_9j(s[0], s[3], s[6], s[1], s[4], s[7], s[2], s[5], s[8]);
            if (!(v == o))
                throw std::runtime_error("transpose mismatch: " + v.str() + " vs " + o.str());
        }
        std::cout << exact_line(v) << "\n";
    });

    // ---- graph ----
    int gn = 2;
    std::string gkind = "rotation", gsub = "stats", gt1, gt2;
    auto* graph = app.add_subcommand("graph", "rotation / twist-rotation move graphs");
    graph->add_option("n", gn, "number of couplings (n+1 leaves)")->required();
    graph->add_option("kind", gkind, "rotation | twist-rotation")->required();
    graph->add_option("action", gsub, "stats | diameter | path | export")->required();
    graph->add_option("t1", gt1, "source bracket (action=path)");
    graph->add_option("t2", gt2, "target bracket (action=path)");
    graph->callback([&] {
        MoveGraph g = build_graph(gn, parse_kind(gkind));
        if (gsub == "stats") {
            bool regular = true;
            size_t deg = g.adj.empty() ? 0 : g.adj[0].size();
            for (const auto& a : g.adj) regular = regular && a.size() == deg;
            // connectivity by BFS from vertex 0
            std::vector<char> seen(g.vertices.size(), 0);
            std::vector<int> q{0};
            seen[0] = 1;
            for (size_t i = 0; i < q.size(); ++i)
                for (const auto& e : g.adj[q[i]])
                    if (!seen[e.to]) seen[e.to] = 1, q.push_back(e.to);
            bool conn = q.size() == g.vertices.size();
            std::cout << "|V|=" << g.vertices.size() << " degree=";
            if (regular)
                std::cout << deg;
            else
                std::cout << "irregular";
            std::cout << " connected=" << (conn ? "yes" : "no") << "\n";
        } else if (gsub == "diameter") {
            Diameter d = diameter(g);
            std::cout << "diameter=" << d.value << (d.estimate ? " (sampled)" : "")
                      << " bound=" << fd(rotation_diameter_bound(gn)) << "\n";
        } else if (gsub == "path") {
            if (gt1.empty() || gt2.empty())
                throw CLI::ValidationError("path needs two bracket strings");
            CouplingTree a = parse_bracket(gt1).tree, b = parse_bracket(gt2).tree;
            auto edges = find_path(g, a, b);
            CouplingTree cur = g.kind == GraphKind::rotation ? canonical_nonplane(a) : a;
            std::cout << format_bracket(cur) << "\n";
            for (const auto& e : edges) {
                cur = apply_edge(cur, e, g.kind);
                std::cout << move_name(e.type) << " at " << e.node << " -> "
                          << format_bracket(cur) << "\n";
            }
        } else if (gsub == "export") {
            export_graph(g, std::cout);
        } else {
            throw CLI::ValidationError("action must be stats, diameter, path or export");
        }
    });

    // ---- simulate ----
    std::string prog_path, state_spec;
    std::vector<int> spins_two_j, ks_two_j;
    int J_two = 0, M_two = INT32_MIN;
    auto* sim = app.add_subcommand("simulate", "run a gate program on a coupled basis state");
    sim->add_option("program", prog_path, "program file (R/P/W lines)")->required();
    sim->add_option("--state", state_spec, "coupling tree bracket, e.g. ((1,2),3)")
        ->required();
    sim->add_option("--spins", spins_two_j, "leaf spins as two_j, by label")->required();
    sim->add_option("--J", J_two, "total two_J")->required();
    sim->add_option("--ks", ks_two_j, "intermediate two_j, post-order (default: smallest)");
    sim->add_option("--M", M_two, "two_M (default J)");
    sim->callback([&] {
        std::ifstream in(prog_path);
        if (!in) throw CLI::ValidationError("cannot open " + prog_path);
        Program p = parse_program(in);
        CouplingTree t = parse_bracket(state_spec).tree;
        auto spins = to_half(spins_two_j);
        HalfInt J(J_two), M(M_two == INT32_MIN ? J_two : M_two);
        std::vector<HalfInt> ks;
        if (!ks_two_j.empty()) {
            ks = to_half(ks_two_j);
        } else {
            auto all = k_assignments(t, spins, J);
            if (all.empty()) throw std::runtime_error("no admissible intermediate spins");
            ks = all.front();
        }
        SimState s = SimState::basis_state(t, spins, J, ks, M);
        SimState out = run_program(s, p);
        std::cout << "class " << program_class_name(program_class(p)) << "\n";
        std::cout << "norm " << fd(out.norm()) << "\n";
        print_state(out);
    });

    // ---- pathsum ----
    std::string ps_from, ps_to, ps_weighting = "uniform";
    int ps_lmax = -1;
    auto* ps = app.add_subcommand("pathsum", "sum of lifted matrices over simple paths");
    ps->add_option("b_in", ps_from, "source bracket")->required();
    ps->add_option("b_out", ps_to, "target bracket")->required();
    ps->add_option("--spins", spins_two_j, "leaf spins as two_j")->required();
    ps->add_option("--J", J_two, "total two_J")->required();
    ps->add_option("--weighting", ps_weighting, "uniform | inverse-length");
    ps->add_option("--l-max", ps_lmax, "path length cap (default: graph diameter)");
    ps->callback([&] {
        CouplingTree a = parse_bracket(ps_from).tree, b = parse_bracket(ps_to).tree;
        MoveGraph g = build_graph(a.n(), GraphKind::rotation);
        if (ps_lmax < 0) ps_lmax = diameter(g).value;
        PathWeighting w;
        if (ps_weighting == "uniform")
            w = PathWeighting::uniform;
        else if (ps_weighting == "inverse-length")
            w = PathWeighting::inverse_length;
        else
            throw CLI::ValidationError("weighting must be uniform or inverse-length");
        auto res = path_sum(g, a, b, to_half(spins_two_j), HalfInt(J_two), w, ps_lmax);
        std::cout << "paths " << res.path_count << "\n";
        for (int r = 0; r < res.matrix.rows(); ++r) {
            for (int c = 0; c < res.matrix.cols(); ++c) {
                if (c) std::cout << "  ";
                std::cout << fd(res.matrix(r, c).real()) << " " << fd(res.matrix(r, c).imag());
            }
            std::cout << "\n";
        }
    });

    // ---- prsum ----
    std::string tri_path, col_path;
    int L_two = 0;
    double C_const = 1.0;
    long budget = 100000000;
    bool unnorm = false;
    auto* pr = app.add_subcommand("prsum", "finite-cutoff Ponzano-Regge partition sum");
    pr->add_option("triangulation", tri_path, "PR3 v1 file")->required();
    pr->add_option("--L", L_two, "cutoff as two_j")->required();
    pr->add_option("--C", C_const, "Lambda constant C (default 1)");
    pr->add_option("--coloring", col_path, "fixed boundary coloring file (J lines)");
    pr->add_option("--budget", budget, "max colorings (default 1e8)");
    pr->add_flag("--unnormalized", unnorm, "drop the Lambda^{-N0} factor");
    pr->callback([&] {
        std::ifstream in(tri_path);
        if (!in) throw CLI::ValidationError("cannot open " + tri_path);
        Triangulation3 t = parse_triangulation(in);
        SpinColoring fixed;
        if (!col_path.empty()) {
            std::ifstream cin2(col_path);
            if (!cin2) throw CLI::ValidationError("cannot open " + col_path);
            fixed = parse_coloring(cin2);
        }
        auto z = partition_sum(t, HalfInt(L_two), C_const, fixed, budget, unnorm);
        std::cout << fd(z.real()) << " " << fd(z.imag()) << "\n";
    });

    // ---- asympt ----
    std::string asub, krange = "10:60", nrange = "4:7", seq = "catalan";
    std::vector<int> base{1, 1, 1, 1, 1, 1};
    auto* as = app.add_subcommand("asympt", "semiclassical and counting asymptotics");
    as->add_option("what", asub, "pr-sweep | counts")->required();
    as->add_option("--base", base, "six two_j scaled by k (pr-sweep)")->expected(6);
    as->add_option("--k", krange, "k range min:max (pr-sweep)");
    as->add_option("--n", nrange, "n range min:max (counts)");
    as->add_option("--seq", seq, "catalan | double-factorial | quadruple-factorial (counts)");
    as->callback([&] {
        auto parse_range = [](const std::string& s) {
            int lo, hi;
            char colon;
            std::istringstream rs(s);
            if (!(rs >> lo >> colon >> hi) || colon != ':' || lo > hi)
                throw CLI::ValidationError("range must be min:max");
            return std::pair(lo, hi);
        };
        if (asub == "pr-sweep") {
            auto [lo, hi] = parse_range(krange);
            std::array<int, 6> b{};
            std::copy_n(base.begin(), 6, b.begin());
            std::ostringstream os;
            pr_sweep_csv(b, lo, hi, os);
            std::cout << os.str();
        } else if (asub == "counts") {
            auto [lo, hi] = parse_range(nrange);
            CountSequence cs;
            if (seq == "catalan")
                cs = CountSequence::catalan;
            else if (seq == "double-factorial")
                cs = CountSequence::double_factorial;
            else if (seq == "quadruple-factorial")
                cs = CountSequence::quadruple_factorial;
            else
                throw CLI::ValidationError("unknown sequence");
            std::cout << "n, exact_over_estimate\n";
            for (int n = lo; n <= hi; ++n)
                std::cout << n << ", " << fd(asymptotic_count_ratio(n, cs)) << "\n";
        } else {
            throw CLI::ValidationError("what must be pr-sweep or counts");
        }
    });

    (void)seed;  // reserved; all commands are deterministic without it
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonEuclidean& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
