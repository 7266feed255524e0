#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace spinnet {

// Memoized arbitrary precision factorials, safe for concurrent use.
const mpz_class& factorial(unsigned long n);

// sign * sqrt(radicand) with an exact non-negative rational radicand.
// Squares of CG and 6j coefficients are rational in the Condon-Shortley
// convention, so this represents single coefficients exactly.
class SignedSqrtRational {
public:
    SignedSqrtRational() : sign_(0), radicand_(0) {}
    SignedSqrtRational(int sign, mpq_class radicand);

    static SignedSqrtRational zero() { return SignedSqrtRational(); }
    static SignedSqrtRational one() { return SignedSqrtRational(1, 1); }
    // value = r (signed rational), stored as sgn(r) * sqrt(r^2)
    static SignedSqrtRational from_rational(const mpq_class& r);

    int sign() const { return sign_; }
    const mpq_class& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    SignedSqrtRational operator*(const SignedSqrtRational& o) const;
    SignedSqrtRational operator-() const;

    bool operator==(const SignedSqrtRational& o) const {
        return sign_ == o.sign_ && radicand_ == o.radicand_;
    }

    double to_double() const;
    // "+ num/den", "- num/den" or "0 0" (radicand in lowest terms)
    std::string str() const;

private:
    int sign_;
    mpq_class radicand_;
};

// Exact accumulator for sums of sign*sqrt(rational) terms, represented as
// sum_k coeff_k * sqrt(k) over squarefree integer kernels k. Radicands
// arising from factorial ratios factor completely over small primes, so
// kernels are computed by trial division (with a perfect-square check on
// any stray cofactor).
class SqrtSum {
public:
    void add(const SignedSqrtRational& v);
    void add_scaled(const mpq_class& scale, const SignedSqrtRational& v);

    bool is_zero() const;
    // Valid when the sum collapses to a single kernel (or zero); throws otherwise.
    SignedSqrtRational to_signed_sqrt() const;
    double to_double() const;

private:
    std::map<mpz_class, mpq_class> terms_;  // squarefree kernel -> coefficient
};

// (-1)^p for an integer power given as 2p (which must be even).
int phase_sign(int two_p);

}  // namespace spinnet
