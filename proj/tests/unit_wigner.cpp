#include <doctest.h>

#include "spinnet/wigner.hpp"

using namespace spinnet;

namespace {
HalfInt h(int two_j) { return HalfInt(two_j); }
}

TEST_CASE("Clebsch-Gordan basic values") {
    // j x 0 -> j is trivial
    CHECK(clebsch_gordan(h(1), h(1), h(0), h(0), h(1), h(1)) == SignedSqrtRational::one());
    // singlet of two spin-1/2: (|ud> - |du>)/sqrt(2)
    auto up_down = clebsch_gordan(h(1), h(1), h(1), h(-1), h(0), h(0));
    auto down_up = clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0));
    CHECK(up_down == SignedSqrtRational(1, mpq_class(1, 2)));
    CHECK(down_up == SignedSqrtRational(-1, mpq_class(1, 2)));
    // stretched state
    CHECK(clebsch_gordan(h(2), h(2), h(2), h(2), h(4), h(4)) == SignedSqrtRational::one());
    // M conservation
    CHECK(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(0)).is_zero());
}

TEST_CASE("6j known values and zeros") {
    // {1/2 1/2 1; 1/2 1/2 1} = 1/6
    CHECK(wigner_6j(h(1), h(1), h(2), h(1), h(1), h(2)) ==
          SignedSqrtRational(1, mpq_class(1, 36)));
    // {0 j j; 0 j j} = 1/(2j+1) with sign (+)
    CHECK(wigner_6j(h(0), h(2), h(2), h(0), h(2), h(2)) ==
          SignedSqrtRational(1, mpq_class(1, 9)));
    // triangle failure is a zero symbol, not an error
    CHECK(wigner_6j(h(2), h(2), h(8), h(2), h(2), h(2)).is_zero());
}

TEST_CASE("6j oracle agrees on a small sweep") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d)
                    for (int e = 0; e <= 3; ++e)
                        for (int f = 0; f <= 3; ++f) {
                            auto direct = wigner_6j(h(a), h(b), h(c), h(d), h(e), h(f));
                            auto oracle = wigner_6j_oracle(h(a), h(b), h(c), h(d), h(e), h(f));
                            CHECK(direct == oracle);
                        }
}

TEST_CASE("9j single value and symmetry") {
    // {1/2 1/2 1; 1/2 1/2 1; 1 1 0} = -1/18
    auto v = wigner_9j(h(1), h(1), h(2), h(1), h(1), h(2), h(2), h(2), h(0));
    CHECK(v == SignedSqrtRational(-1, mpq_class(1, 324)));
    // transpose symmetry, exact, on an asymmetric symbol
    auto t = wigner_9j(h(1), h(1), h(2), h(3), h(1), h(2), h(2), h(2), h(2));
    auto tt = wigner_9j(h(1), h(3), h(2), h(1), h(1), h(2), h(2), h(2), h(2));
    CHECK(t == tt);
    CHECK(!t.is_zero());
}

TEST_CASE("identity residuals vanish") {
    CHECK(residual_biedenharn_elliott(h(0), h(0), h(0), h(0), h(0), h(0), h(0), h(0), h(0)) ==
          0.0);
    CHECK(residual_racah(h(2), h(2), h(2), h(2), h(2), h(2)) <= 1e-14);
    CHECK(residual_orthogonality(h(2), h(2), h(2), h(2), h(2), h(2)) <= 1e-14);
    CHECK(residual_biedenharn_elliott(h(1), h(1), h(2), h(1), h(1), h(2), h(2), h(2), h(0)) <=
          1e-14);
}
