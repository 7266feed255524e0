#include <doctest.h>

#include <cmath>

#include "spinnet/simulate.hpp"
#include "spinnet/wigner.hpp"

using namespace spinnet;

namespace {
CouplingTree parse(const std::string& s) { return parse_bracket(s).tree; }
const std::vector<HalfInt> HALF3{HalfInt(1), HalfInt(1), HalfInt(1)};
}

TEST_CASE("d^{1/2} and d^1 match their closed forms") {
    double b = 0.7;
    auto d12 = wigner_d(HalfInt(1), b);
    double c = std::cos(b / 2), s = std::sin(b / 2);
    CHECK(d12(0, 0) == doctest::Approx(c).epsilon(1e-15));
    CHECK(d12(0, 1) == doctest::Approx(-s).epsilon(1e-15));
    CHECK(d12(1, 0) == doctest::Approx(s).epsilon(1e-15));
    CHECK(d12(1, 1) == doctest::Approx(c).epsilon(1e-15));

    auto d1 = wigner_d(HalfInt(2), b);
    double expect[3][3] = {
        {(1 + std::cos(b)) / 2, -std::sin(b) / M_SQRT2, (1 - std::cos(b)) / 2},
        {std::sin(b) / M_SQRT2, std::cos(b), -std::sin(b) / M_SQRT2},
        {(1 - std::cos(b)) / 2, std::sin(b) / M_SQRT2, (1 + std::cos(b)) / 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(d1(i, j) == doctest::Approx(expect[i][j]).epsilon(1e-14));

    // J=2 at beta=0 is the identity
    auto d2 = wigner_d(HalfInt(4), 0.0);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(d2(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("D unitarity and the group property") {
    auto ra = RotationSpec::euler(0.3, 1.1, 2.4);
    auto rb = RotationSpec::euler(5.1, 0.6, 1.9);
    for (int tj : {1, 2, 3, 4, 7}) {
        auto Da = wigner_D(HalfInt(tj), ra), Db = wigner_D(HalfInt(tj), rb);
        auto Dc = wigner_D(HalfInt(tj), compose_rotations(ra, rb));
        int dim = tj + 1;
        CHECK((Da.adjoint() * Da - Eigen::MatrixXcd::Identity(dim, dim)).norm() <= 1e-12);
        CHECK((Da * Db - Dc).norm() <= 1e-10);
    }
}

TEST_CASE("axis-angle special cases") {
    double w = 1.3;
    auto dw = wigner_d(HalfInt(2), w);
    // x-axis: phase (-i)^{M'-M} times d, consistent with exp(-i omega Jx)
    auto Ux = wigner_D(HalfInt(2), RotationSpec::axis(w, M_PI / 2, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex ph = std::pow(Complex(0, -1), (1 - j) - (1 - i));
            CHECK(std::abs(Ux(i, j) - ph * dw(i, j)) <= 1e-14);
        }
    // y-axis: d itself
    auto Uy = wigner_D(HalfInt(2), RotationSpec::axis(w, M_PI / 2, M_PI / 2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(Uy(i, j) - dw(i, j)) <= 1e-14);
    // z-axis: diagonal phases e^{-iMw}
    auto Uz = wigner_D(HalfInt(2), RotationSpec::axis(w, 0, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex expect = i == j ? std::exp(Complex(0, -(1.0 - i) * w)) : Complex(0);
            CHECK(std::abs(Uz(i, j) - expect) <= 1e-14);
        }
}

TEST_CASE("racah gate: unitary, involutive through the graph") {
    auto t = parse("((1,2),3)");
    auto u = parse("(1,(2,3))");
    auto R = recoupling_matrix(t, u, HALF3, HalfInt(1));
    CHECK((R.adjoint() * R - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-12);
    auto Rb = recoupling_matrix(u, t, HALF3, HalfInt(1));
    CHECK((Rb * R - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-12);
    // the 2x2 is the classic (-1)^{...} sqrt-weighted 6j block
    CHECK(std::abs(std::abs(R(0, 0)) - 0.5) <= 1e-12);
    CHECK(std::abs(std::abs(R(1, 0)) - std::sqrt(3.0) / 2) <= 1e-12);
}

TEST_CASE("recoupling element reproduces the 9j") {
    auto p12_34 = parse("((1,2),(3,4))");
    auto p13_24 = parse("((1,3),(2,4))");
    std::vector<HalfInt> spins{HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)};
    auto M9 = recoupling_matrix(p12_34, p13_24, spins, HalfInt(0));
    auto from = k_assignments(p12_34, spins, HalfInt(0));
    auto to = k_assignments(p13_24, spins, HalfInt(0));
    for (size_t r = 0; r < to.size(); ++r)
        for (size_t c = 0; c < from.size(); ++c) {
            int k12 = from[c][0].two_j, k34 = from[c][1].two_j;
            int k13 = to[r][0].two_j, k24 = to[r][1].two_j;
            auto nine = wigner_9j(HalfInt(1), HalfInt(1), HalfInt(k12), HalfInt(1), HalfInt(1),
                                  HalfInt(k34), HalfInt(k13), HalfInt(k24), HalfInt(0));
            double expect = std::sqrt((double)(k12 + 1) * (k34 + 1) * (k13 + 1) * (k24 + 1)) *
                            std::abs(nine.to_double());
            CHECK(std::abs(M9(r, c)) == doctest::Approx(expect).epsilon(1e-10));
        }
}

TEST_CASE("phase gate squares to identity on states") {
    auto s = SimState::basis_state(parse("((1,2),3)"), HALF3, HalfInt(1), {HalfInt(2)},
                                   HalfInt(1));
    auto twice = apply_phase(apply_phase(s, 2), 2);
    REQUIRE(twice.amps.size() == 1);
    CHECK(std::abs(twice.amps.begin()->second - Complex(1, 0)) <= 1e-15);
    CHECK(twice.tree == s.tree);
}

TEST_CASE("apply_rotation: norm preserved, composition consistent") {
    auto ra = RotationSpec::euler(0.3, 1.1, 2.4);
    auto rb = RotationSpec::euler(5.1, 0.6, 1.9);
    auto s0 = SimState::basis_state(parse("((1,2),3)"), HALF3, HalfInt(1), {HalfInt(2)},
                                    HalfInt(1));
    auto s1 = apply_rotation(apply_rotation(s0, rb), ra);
    CHECK(s1.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // state transforms by D^dagger, so sequential rb,ra equals compose(rb,ra)
    auto s2 = apply_rotation(s0, compose_rotations(rb, ra));
    for (const auto& [k, a] : s1.amps) {
        auto it = s2.amps.find(k);
        Complex b = it == s2.amps.end() ? Complex(0) : it->second;
        CHECK(std::abs(a - b) <= 1e-12);
    }
}

TEST_CASE("product basis change is orthonormal across J") {
    std::vector<HalfInt> spins{HalfInt(1), HalfInt(2), HalfInt(1)};
    auto t = parse("((1,2),3)");
    std::vector<Eigen::MatrixXd> blocks;
    int rows = 0, cols = -1;
    for (int tJ = 0; tJ <= 4; tJ += 2) {
        auto m = product_to_coupled(spins, t, HalfInt(tJ), HalfInt(0));
        if (m.rows() == 0) continue;
        blocks.push_back(m);
        rows += (int)m.rows();
        cols = (int)m.cols();
    }
    Eigen::MatrixXd big(rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        big.middleRows(at, b.rows()) = b;
        at += (int)b.rows();
    }
    CHECK(rows == cols);  // M=0 sector resolves completely
    CHECK((big * big.transpose() - Eigen::MatrixXd::Identity(rows, rows)).norm() <= 1e-12);
}

TEST_CASE("sequential-chain reconstruction of D blocks") {
    auto r = RotationSpec::euler(0.4, 1.0, 2.2);
    // two spin-1/2 -> J=1 (the fermionic N=2 case reproduces d^1)
    auto blk = compose_D_from_spins({HalfInt(1), HalfInt(1)}, {HalfInt(2)}, r);
    auto direct = wigner_D(HalfInt(2), r);
    CHECK((blk - direct).norm() <= 1e-12);
    auto blk_d = compose_D_from_spins({HalfInt(1), HalfInt(1)}, {HalfInt(2)},
                                      RotationSpec::euler(0, 1.0, 0));
    auto d1 = wigner_d(HalfInt(2), 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(blk_d(i, j) - Complex(d1(i, j))) <= 1e-13);
    // mixed three-spin chain
    auto blk3 = compose_D_from_spins({HalfInt(1), HalfInt(2), HalfInt(1)},
                                     {HalfInt(3), HalfInt(4)}, r);
    CHECK((blk3 - wigner_D(HalfInt(4), r)).norm() <= 1e-10);
    CHECK_THROWS_AS(compose_D_from_spins({HalfInt(1), HalfInt(1)}, {HalfInt(6)}, r),
                    std::invalid_argument);
}
