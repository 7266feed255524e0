#include "spinnet/statesum.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spinnet/exact.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet {

namespace {

// the four faces of a tetrahedron in 6j slot order
constexpr int FACES[4][3] = {{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}};

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw std::invalid_argument("triangulation line " + std::to_string(lineno) + ": " + msg);
}

// i^k as an exact complex unit
std::complex<double> quarter_phase(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

struct Kahan {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

std::vector<int> Triangulation3::interior_edges() const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (!e.boundary) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation3 parse_triangulation(std::istream& in) {
    Triangulation3 t;
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_v = false;
    std::set<int> ids;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (!saw_header) {
            std::string ver;
            if (tag != "PR3" || !(ls >> ver) || ver != "v1")
                parse_fail(lineno, "expected header \"PR3 v1\"");
            saw_header = true;
            continue;
        }
        if (tag == "V") {
            if (saw_v) parse_fail(lineno, "duplicate V line");
            if (!(ls >> t.n0) || t.n0 < 0) parse_fail(lineno, "expected \"V <N0>\"");
            saw_v = true;
        } else if (tag == "E") {
            int id;
            if (!(ls >> id)) parse_fail(lineno, "expected \"E <id> [boundary]\"");
            if (!ids.insert(id).second)
                parse_fail(lineno, "duplicate edge id " + std::to_string(id));
            std::string mark;
            bool boundary = false;
            if (ls >> mark) {
                if (mark != "boundary") parse_fail(lineno, "unknown mark \"" + mark + "\"");
                boundary = true;
            }
            t.edges.push_back({id, boundary});
        } else if (tag == "T") {
            std::array<int, 6> e{};
            for (int i = 0; i < 6; ++i)
                if (!(ls >> e[i])) parse_fail(lineno, "tetrahedron needs 6 edge ids");
            int extra;
            if (ls >> extra) parse_fail(lineno, "tetrahedron needs exactly 6 edge ids");
            std::set<int> distinct(e.begin(), e.end());
            if (distinct.size() != 6) parse_fail(lineno, "tetrahedron edges not distinct");
            for (int id : e)
                if (!ids.count(id))
                    parse_fail(lineno, "dangling edge reference " + std::to_string(id));
            t.tets.push_back(e);
        } else {
            parse_fail(lineno, "unknown record \"" + tag + "\"");
        }
    }
    if (!saw_header) throw std::invalid_argument("triangulation: missing \"PR3 v1\" header");
    if (!saw_v) throw std::invalid_argument("triangulation: missing V line");
    return t;
}

SpinColoring parse_coloring(std::istream& in) {
    SpinColoring c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        int id, two_j;
        if (tag != "J" || !(ls >> id >> two_j) || two_j < 0)
            throw std::invalid_argument("coloring line " + std::to_string(lineno) +
                                        ": expected \"J <edge-id> <two_j>\"");
        if (!c.emplace(id, HalfInt(two_j)).second)
            throw std::invalid_argument("coloring line " + std::to_string(lineno) +
                                        ": duplicate edge " + std::to_string(id));
    }
    return c;
}

std::complex<double> state_functional(const Triangulation3& t, const SpinColoring& c,
                                      HalfInt L, double C, bool unnormalized) {
    if (C <= 0) throw std::invalid_argument("C must be positive");
    for (const auto& e : t.edges) {
        auto it = c.find(e.id);
        if (it == c.end())
            throw std::invalid_argument("edge " + std::to_string(e.id) + " is uncolored");
        if (it->second.two_j > L.two_j)
            throw std::invalid_argument("edge " + std::to_string(e.id) +
                                        " exceeds the cutoff");
    }
    double lam = 1.0;
    if (!unnormalized) {
        if (L.two_j == 0)
            throw std::invalid_argument("Lambda(0) = 0: use unnormalized at L = 0");
        double Lv = L.two_j / 2.0;
        lam = std::pow(4.0 * Lv * Lv * Lv / (3.0 * C), -t.n0);
    }
    // exact zero on any failed triad, before any float assembly
    for (const auto& tet : t.tets)
        for (const auto& face : FACES)
            if (!triangle_ok(c.at(tet[face[0]]), c.at(tet[face[1]]), c.at(tet[face[2]])))
                return {0.0, 0.0};
    double edge_part = 1.0;
    for (const auto& e : t.edges) {
        int tj = c.at(e.id).two_j;
        edge_part *= phase_sign(2 * tj) * (tj + 1);
    }
    std::complex<double> tet_part = 1.0;
    for (const auto& tet : t.tets) {
        long two_sum = 0;
        for (int s = 0; s < 6; ++s) two_sum += c.at(tet[s]).two_j;
        tet_part *= quarter_phase(two_sum);  // e^{i pi sum j_p}
        tet_part *= wigner_6j(c.at(tet[0]), c.at(tet[1]), c.at(tet[2]), c.at(tet[3]),
                              c.at(tet[4]), c.at(tet[5]))
                        .to_double();
    }
    return lam * edge_part * tet_part;
}

std::complex<double> partition_sum(const Triangulation3& t, HalfInt L, double C,
                                   const SpinColoring& fixed_boundary, long budget,
                                   bool unnormalized) {
    std::vector<int> free_edges;
    for (const auto& e : t.edges) {
        if (fixed_boundary.count(e.id)) continue;
        if (e.boundary)
            throw std::invalid_argument("boundary edge " + std::to_string(e.id) +
                                        " has no fixed spin");
        free_edges.push_back(e.id);
    }
    std::sort(free_edges.begin(), free_edges.end());
    double count = std::pow((double)L.two_j + 1, (double)free_edges.size());
    if (count > (double)budget)
        throw ResourceError("partition sum needs " + std::to_string(count) +
                            " colorings, budget " + std::to_string(budget));

    SpinColoring c = fixed_boundary;
    Kahan re, im;
    std::vector<int> two_j(free_edges.size(), 0);
    for (;;) {
        for (size_t i = 0; i < free_edges.size(); ++i) c[free_edges[i]] = HalfInt(two_j[i]);
        auto z = state_functional(t, c, L, C, unnormalized);
        re.add(z.real());
        im.add(z.imag());
        // lexicographic odometer over the sorted free edges
        size_t i = free_edges.size();
        while (i > 0) {
            if (two_j[i - 1] < L.two_j) {
                ++two_j[i - 1];
                std::fill(two_j.begin() + i, two_j.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
    return {re.sum, im.sum};
}

double bistellar_23_check(const std::array<HalfInt, 9>& bd, HalfInt L) {
    HalfInt a = bd[0], b = bd[1], c = bd[2], d = bd[3], e = bd[4], f = bd[5];
    HalfInt p = bd[6], q = bd[7], r = bd[8];
    auto tet_phase = [](HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                        HalfInt j6) {
        return quarter_phase((long)j1.two_j + j2.two_j + j3.two_j + j4.two_j + j5.two_j +
                             j6.two_j);
    };
    int lo = std::max({std::abs(a.two_j - b.two_j), std::abs(c.two_j - d.two_j),
                       std::abs(e.two_j - f.two_j)});
    int hi = std::min({a.two_j + b.two_j, c.two_j + d.two_j, e.two_j + f.two_j});
    if (hi > L.two_j)
        throw std::invalid_argument("cutoff L truncates the interior x-range (needs two_j " +
                                    std::to_string(hi) + ")");
    std::complex<double> lhs = 0;
    for (int tx = lo; tx <= hi; tx += 2) {
        HalfInt x(tx);
        std::complex<double> term = (double)phase_sign(2 * tx) * (tx + 1);
        term *= tet_phase(a, b, x, c, d, p) * wigner_6j(a, b, x, c, d, p).to_double();
        term *= tet_phase(c, d, x, e, f, q) * wigner_6j(c, d, x, e, f, q).to_double();
        term *= tet_phase(e, f, x, b, a, r) * wigner_6j(e, f, x, b, a, r).to_double();
        lhs += term;
    }
    std::complex<double> rhs = tet_phase(p, q, r, e, a, d) *
                               wigner_6j(p, q, r, e, a, d).to_double() *
                               tet_phase(p, q, r, f, b, c) *
                               wigner_6j(p, q, r, f, b, c).to_double();
    return std::abs(lhs - rhs);
}

}  // namespace spinnet
