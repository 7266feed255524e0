#include "spinnet/semiclassics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <ostream>

#include "spinnet/exact.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet {

namespace {

constexpr int EDGE_V[6][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}};

double cayley_menger_v2(const std::array<double, 6>& L) {
    double d2[4][4] = {};
    for (int r = 0; r < 6; ++r)
        d2[EDGE_V[r][0]][EDGE_V[r][1]] = d2[EDGE_V[r][1]][EDGE_V[r][0]] = L[r] * L[r];
    Eigen::Matrix<double, 5, 5> m;
    m(0, 0) = 0;
    for (int i = 1; i < 5; ++i) m(0, i) = m(i, 0) = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i + 1, j + 1) = d2[i][j];
    return m.determinant() / 288.0;
}

}  // namespace

TetGeometry tet_geometry(const std::array<double, 6>& lengths) {
    for (double l : lengths)
        if (!(l > 0)) throw NonEuclidean(0.0);
    double v2 = cayley_menger_v2(lengths);
    if (!(v2 > 0)) throw NonEuclidean(v2);

    const double a = lengths[0], b = lengths[1], p = lengths[2];
    const double q = lengths[3], r = lengths[4], c = lengths[5];
    // v0 origin, v1 on +x, v2 in the xy-plane, v3 above it
    TetGeometry g;
    g.lengths = lengths;
    g.v_squared = v2;
    g.volume = std::sqrt(v2);
    double x2 = (a * a + b * b - p * p) / (2 * a);
    double y2sq = b * b - x2 * x2;
    if (!(y2sq > 0)) throw NonEuclidean(v2);
    double y2 = std::sqrt(y2sq);
    double x3 = (a * a + c * c - r * r) / (2 * a);
    double y3 = (b * b + c * c - q * q - 2 * x2 * x3) / (2 * y2);
    double z3sq = c * c - x3 * x3 - y3 * y3;
    if (!(z3sq > 0)) throw NonEuclidean(v2);
    g.vertices = {{{0, 0, 0}, {a, 0, 0}, {x2, y2, 0}, {x3, y3, std::sqrt(z3sq)}}};

    auto vtx = [&](int i) { return Eigen::Vector3d(g.vertices[i].data()); };
    for (int e = 0; e < 6; ++e) {
        int i = EDGE_V[e][0], j = EDGE_V[e][1];
        int k = -1, l = -1;
        for (int v = 0; v < 4; ++v)
            if (v != i && v != j) (k < 0 ? k : l) = v;
        // outer normal of face (i,j,k): away from the opposite vertex l
        auto outer = [&](int apex, int opp) {
            Eigen::Vector3d n =
                (vtx(j) - vtx(i)).cross(vtx(apex) - vtx(i)).normalized();
            if (n.dot(vtx(opp) - vtx(i)) > 0) n = -n;
            return n;
        };
        double cosang = outer(k, l).dot(outer(l, k));
        g.theta[e] = std::acos(std::clamp(cosang, -1.0, 1.0));
    }
    return g;
}

double wigner_limit_ratio(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
    std::array<double, 6> L;
    HalfInt js[6] = {a, b, c, d, e, f};
    for (int i = 0; i < 6; ++i) L[i] = js[i].two_j / 2.0;
    TetGeometry g = tet_geometry(L);
    double sj = wigner_6j(a, b, c, d, e, f).to_double();
    // the limiting value of the squared symbol, once the cos^2 oscillation
    // of the one-term asymptotic cos(S + pi/4)/sqrt(12 pi V) is averaged,
    // is 1/(24 pi V); dividing by that puts the window mean at 1
    return sj * sj * 24.0 * M_PI * g.volume;
}

double prob_recoupling_e(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
    // symbol {a b d; c f e}, tetrahedron from its unshifted arguments
    std::array<double, 6> L = {a.two_j / 2.0, b.two_j / 2.0, d.two_j / 2.0,
                               c.two_j / 2.0, f.two_j / 2.0, e.two_j / 2.0};
    TetGeometry g = tet_geometry(L);
    return (e.two_j + 1) * (d.two_j + 1) / (12.0 * M_PI * g.volume);
}

double prob_M(HalfInt J, HalfInt M, double beta) {
    require_jm(J, M);
    int jp = (J.two_j + M.two_j) / 2, jm = (J.two_j - M.two_j) / 2;
    double lchoose = std::lgamma(J.two_j + 1.0) - std::lgamma(jp + 1.0) -
                     std::lgamma(jm + 1.0);
    double c2 = std::cos(beta / 2), s2 = std::sin(beta / 2);
    return std::exp(lchoose) * std::pow(c2 * c2, jp) * std::pow(s2 * s2, jm);
}

mpq_class prob_M_exact(HalfInt J, HalfInt M, const mpq_class& t) {
    require_jm(J, M);
    int jp = (J.two_j + M.two_j) / 2, jm = (J.two_j - M.two_j) / 2;
    mpq_class choose(factorial(J.two_j), factorial(jp) * factorial(jm));
    choose.canonicalize();
    mpq_class tp = 1, sp = 1;
    for (int i = 0; i < jp; ++i) tp *= t;
    mpq_class omt = 1 - t;
    for (int i = 0; i < jm; ++i) sp *= omt;
    return choose * tp * sp;
}

double gaussian_limit(HalfInt J, HalfInt M, double beta) {
    double sb = std::sin(beta);
    if (std::abs(sb) < 1e-12)
        throw std::invalid_argument("gaussian_limit: sin(beta) = 0, dispersion degenerates");
    double Jv = J.two_j / 2.0, Mv = M.two_j / 2.0;
    double M0 = Jv * std::cos(beta);
    // continuous extension of prob_M at M0
    double lchoose = std::lgamma(2 * Jv + 1.0) - std::lgamma(Jv + M0 + 1.0) -
                     std::lgamma(Jv - M0 + 1.0);
    double c2 = std::cos(beta / 2), s2 = std::sin(beta / 2);
    double lp0 = lchoose + 2 * (Jv + M0) * std::log(c2) + 2 * (Jv - M0) * std::log(s2);
    double dev = (Mv - M0) / sb;
    return std::exp(lp0) * std::exp(-dev * dev / Jv);
}

double ponzano_regge_estimate(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                              HalfInt f) {
    std::array<double, 6> L;
    HalfInt js[6] = {a, b, c, d, e, f};
    for (int i = 0; i < 6; ++i) L[i] = js[i].two_j / 2.0 + 0.5;  // l_r = j_r + 1/2
    TetGeometry g = tet_geometry(L);
    double phase = M_PI / 4;
    for (int i = 0; i < 6; ++i) phase += L[i] * g.theta[i];
    return std::cos(phase) / std::sqrt(12.0 * M_PI * g.volume);
}

void pr_sweep_csv(const std::array<int, 6>& base_two_j, int k_min, int k_max,
                  std::ostream& os) {
    os.precision(17);
    os << "k, exact, estimate, envelope, normalized_error\n";
    for (int k = k_min; k <= k_max; ++k) {
        HalfInt j[6];
        std::array<double, 6> L;
        for (int i = 0; i < 6; ++i) {
            j[i] = HalfInt(k * base_two_j[i]);
            L[i] = j[i].two_j / 2.0 + 0.5;
        }
        double exact = wigner_6j(j[0], j[1], j[2], j[3], j[4], j[5]).to_double();
        double estimate = ponzano_regge_estimate(j[0], j[1], j[2], j[3], j[4], j[5]);
        double envelope = 1.0 / std::sqrt(12.0 * M_PI * tet_geometry(L).volume);
        os << k << ", " << exact << ", " << estimate << ", " << envelope << ", "
           << std::abs(estimate - exact) / envelope << "\n";
    }
}

}  // namespace spinnet
