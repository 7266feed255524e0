#include "spinnet/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace spinnet {

namespace {

// factorial of a two_j-doubled integer quantity (must be even and >= 0)
const mpz_class& fact2(int two_n) {
    if (two_n < 0 || two_n % 2 != 0)
        throw std::invalid_argument("factorial of non-integer or negative argument");
    return factorial((unsigned long)(two_n / 2));
}

// squared triangle coefficient Delta(a,b,c)^2 as an exact rational
mpq_class delta_sq(HalfInt a, HalfInt b, HalfInt c) {
    mpq_class r(fact2(a.two_j + b.two_j - c.two_j) * fact2(a.two_j - b.two_j + c.two_j) *
                    fact2(-a.two_j + b.two_j + c.two_j),
                fact2(a.two_j + b.two_j + c.two_j + 2));
    r.canonicalize();
    return r;
}

}  // namespace

SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                  HalfInt J, HalfInt M) {
    require_jm(j1, m1);
    require_jm(j2, m2);
    require_jm(J, M);
    if (m1.two_j + m2.two_j != M.two_j) return SignedSqrtRational::zero();
    if (!triangle_ok(j1, j2, J)) return SignedSqrtRational::zero();

    // Racah's formula: CG = rho * sqrt(pi) with
    //   pi = (2J+1) * Delta(j1,j2,J)^2 * (j1+m1)!(j1-m1)!(j2+m2)!(j2-m2)!(J+M)!(J-M)!
    //   rho = sum_k (-1)^k / [k! (j1+j2-J-k)! (j1-m1-k)! (j2+m2-k)!
    //                         (J-j2+m1+k)! (J-j1-m2+k)!]
    mpq_class pi = delta_sq(j1, j2, J) * (J.two_j + 1);
    pi *= fact2(j1.two_j + m1.two_j) * fact2(j1.two_j - m1.two_j);
    pi *= fact2(j2.two_j + m2.two_j) * fact2(j2.two_j - m2.two_j);
    pi *= fact2(J.two_j + M.two_j) * fact2(J.two_j - M.two_j);

    const int a1 = j1.two_j + j2.two_j - J.two_j;  // all doubled, even
    const int a2 = j1.two_j - m1.two_j;
    const int a3 = j2.two_j + m2.two_j;
    const int b1 = J.two_j - j2.two_j + m1.two_j;
    const int b2 = J.two_j - j1.two_j - m2.two_j;

    int k_min = std::max({0, -b1, -b2});
    int k_max = std::min({a1, a2, a3});
    mpq_class rho = 0;
    for (int k = k_min; k <= k_max; k += 2) {
        mpq_class term(1, 1);
        term /= fact2(k) * fact2(a1 - k) * fact2(a2 - k);
        term /= fact2(a3 - k) * fact2(b1 + k) * fact2(b2 + k);
        if ((k / 2) % 2) term = -term;
        rho += term;
    }
    if (rho == 0) return SignedSqrtRational::zero();
    return SignedSqrtRational(sgn(rho), mpq_class(rho * rho) * pi);
}

SignedSqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                             HalfInt j4, HalfInt j5, HalfInt j6) {
    const Triad triads[4] = {{j1, j2, j3}, {j1, j5, j6}, {j4, j2, j6}, {j4, j5, j3}};
    for (const auto& t : triads)
        if (!t.admissible()) return SignedSqrtRational::zero();

    // Racah sum: {..} = Delta1..Delta4 * sum_t (-1)^t (t+1)! / prod(...)
    const int T[4] = {j1.two_j + j2.two_j + j3.two_j, j1.two_j + j5.two_j + j6.two_j,
                      j4.two_j + j2.two_j + j6.two_j, j4.two_j + j5.two_j + j3.two_j};
    const int S[3] = {j1.two_j + j2.two_j + j4.two_j + j5.two_j,
                      j2.two_j + j3.two_j + j5.two_j + j6.two_j,
                      j3.two_j + j1.two_j + j6.two_j + j4.two_j};
    int t_min = std::max({T[0], T[1], T[2], T[3]});
    int t_max = std::min({S[0], S[1], S[2]});
    mpq_class sum = 0;
    for (int t = t_min; t <= t_max; t += 2) {
        mpq_class term(fact2(t + 2), 1);
        for (int i = 0; i < 4; ++i) term /= fact2(t - T[i]);
        for (int i = 0; i < 3; ++i) term /= fact2(S[i] - t);
        if ((t / 2) % 2) term = -term;
        sum += term;
    }
    if (sum == 0) return SignedSqrtRational::zero();
    mpq_class rad = sum * sum;
    for (const auto& t : triads) rad *= delta_sq(t.a, t.b, t.c);
    return SignedSqrtRational(sgn(sum), rad);
}

SignedSqrtRational wigner_6j_oracle(HalfInt j1, HalfInt j2, HalfInt j3,
                                    HalfInt j4, HalfInt j5, HalfInt j6) {
    // Overlap of the two coupling orders of three spins,
    //   <(a b) d, c; f f | a, (b c) e; f f>
    //     = (-1)^{a+b+c+f} sqrt((2d+1)(2e+1)) {a b d; c f e},
    // with a=j1, b=j2, d=j3, c=j4, f=j5, e=j6 in row-major symbol layout.
    const HalfInt a = j1, b = j2, d = j3, c = j4, f = j5, e = j6;
    if (!triangle_ok(a, b, d) || !triangle_ok(d, c, f) || !triangle_ok(b, c, e) ||
        !triangle_ok(a, e, f))
        return SignedSqrtRational::zero();

    const HalfInt M = f;  // stretched total projection keeps the sums short
    SqrtSum acc;
    for (int two_m1 = -a.two_j; two_m1 <= a.two_j; two_m1 += 2) {
        for (int two_m2 = -b.two_j; two_m2 <= b.two_j; two_m2 += 2) {
            int two_m12 = two_m1 + two_m2;
            if (std::abs(two_m12) > d.two_j) continue;
            int two_m3 = M.two_j - two_m12;
            if (std::abs(two_m3) > c.two_j) continue;
            int two_m23 = two_m2 + two_m3;
            if (std::abs(two_m23) > e.two_j) continue;
            SignedSqrtRational v =
                clebsch_gordan(a, HalfInt(two_m1), b, HalfInt(two_m2), d, HalfInt(two_m12));
            if (v.is_zero()) continue;
            v = v * clebsch_gordan(d, HalfInt(two_m12), c, HalfInt(two_m3), f, M);
            if (v.is_zero()) continue;
            v = v * clebsch_gordan(b, HalfInt(two_m2), c, HalfInt(two_m3), e, HalfInt(two_m23));
            if (v.is_zero()) continue;
            v = v * clebsch_gordan(a, HalfInt(two_m1), e, HalfInt(two_m23), f, M);
            acc.add(v);
        }
    }
    int ph = phase_sign(a.two_j + b.two_j + c.two_j + f.two_j);
    mpq_class weight_sq((d.two_j + 1) * (e.two_j + 1), 1);
    SignedSqrtRational overlap = acc.to_signed_sqrt();
    // divide by sqrt((2d+1)(2e+1)) and strip the phase
    return SignedSqrtRational(ph * overlap.sign(), overlap.radicand() / weight_sq);
}

SignedSqrtRational wigner_9j(HalfInt j1, HalfInt j2, HalfInt j3,
                             HalfInt j4, HalfInt j5, HalfInt j6,
                             HalfInt j7, HalfInt j8, HalfInt j9) {
    const Triad triads[6] = {{j1, j2, j3}, {j4, j5, j6}, {j7, j8, j9},
                             {j1, j4, j7}, {j2, j5, j8}, {j3, j6, j9}};
    for (const auto& t : triads)
        if (!t.admissible()) return SignedSqrtRational::zero();

    int two_x_min = std::max(std::abs(j1.two_j - j9.two_j), std::abs(j2.two_j - j6.two_j));
    two_x_min = std::max(two_x_min, std::abs(j4.two_j - j8.two_j));
    int two_x_max = std::min({j1.two_j + j9.two_j, j2.two_j + j6.two_j, j4.two_j + j8.two_j});
    SqrtSum acc;
    for (int two_x = two_x_min; two_x <= two_x_max; two_x += 2) {
        HalfInt x(two_x);
        SignedSqrtRational term = wigner_6j(j1, j4, j7, j8, j9, x);
        if (term.is_zero()) continue;
        term = term * wigner_6j(j2, j5, j8, j4, x, j6);
        if (term.is_zero()) continue;
        term = term * wigner_6j(j3, j6, j9, x, j1, j2);
        if (term.is_zero()) continue;
        int sign = (two_x % 2 == 0) ? 1 : -1;  // (-1)^{2x}
        acc.add_scaled(mpq_class(sign * (two_x + 1), 1), term);
    }
    return acc.to_signed_sqrt();
}

double residual_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                   HalfInt e, HalfInt f, HalfInt p, HalfInt q,
                                   HalfInt r) {
    int two_R = a.two_j + b.two_j + c.two_j + d.two_j + e.two_j + f.two_j + p.two_j +
                q.two_j + r.two_j;
    int two_x_min = std::max({std::abs(a.two_j - b.two_j), std::abs(c.two_j - d.two_j),
                              std::abs(e.two_j - f.two_j)});
    int two_x_max = std::min({a.two_j + b.two_j, c.two_j + d.two_j, e.two_j + f.two_j});
    double lhs = 0.0;
    for (int two_x = two_x_min; two_x <= two_x_max; two_x += 2) {
        HalfInt x(two_x);
        SignedSqrtRational t1 = wigner_6j(a, b, x, c, d, p);
        if (t1.is_zero()) continue;
        SignedSqrtRational t2 = wigner_6j(c, d, x, e, f, q);
        if (t2.is_zero()) continue;
        SignedSqrtRational t3 = wigner_6j(e, f, x, b, a, r);
        if (t3.is_zero()) continue;
        int ph = phase_sign(two_R + two_x);
        lhs += ph * (two_x + 1) * (t1 * t2 * t3).to_double();
    }
    double rhs = wigner_6j(p, q, r, e, a, d).to_double() *
                 wigner_6j(p, q, r, f, b, c).to_double();
    return std::abs(lhs - rhs);
}

double residual_racah(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                      HalfInt p, HalfInt q) {
    int two_x_min = std::max(std::abs(a.two_j - b.two_j), std::abs(c.two_j - d.two_j));
    int two_x_max = std::min(a.two_j + b.two_j, c.two_j + d.two_j);
    double lhs = 0.0;
    for (int two_x = two_x_min; two_x <= two_x_max; two_x += 2) {
        HalfInt x(two_x);
        SignedSqrtRational t1 = wigner_6j(a, b, x, c, d, p);
        if (t1.is_zero()) continue;
        SignedSqrtRational t2 = wigner_6j(a, b, x, d, c, q);
        if (t2.is_zero()) continue;
        int ph = phase_sign(p.two_j + q.two_j + two_x);
        lhs += ph * (two_x + 1) * (t1 * t2).to_double();
    }
    double rhs = wigner_6j(a, c, q, b, d, p).to_double();
    return std::abs(lhs - rhs);
}

double residual_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                              HalfInt p, HalfInt q) {
    int two_x_min = std::max(std::abs(a.two_j - b.two_j), std::abs(c.two_j - d.two_j));
    int two_x_max = std::min(a.two_j + b.two_j, c.two_j + d.two_j);
    double lhs = 0.0;
    for (int two_x = two_x_min; two_x <= two_x_max; two_x += 2) {
        HalfInt x(two_x);
        SignedSqrtRational t1 = wigner_6j(a, b, x, c, d, p);
        if (t1.is_zero()) continue;
        SignedSqrtRational t2 = wigner_6j(c, d, x, a, b, q);
        if (t2.is_zero()) continue;
        lhs += (two_x + 1) * (t1 * t2).to_double();
    }
    double rhs = 0.0;
    if (p == q && triangle_ok(a, d, p) && triangle_ok(b, c, p))
        rhs = 1.0 / (p.two_j + 1);
    return std::abs(lhs - rhs);
}

}  // namespace spinnet
