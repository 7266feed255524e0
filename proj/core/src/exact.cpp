#include "spinnet/exact.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace spinnet {

namespace {
std::shared_mutex fact_mutex;
std::vector<mpz_class> fact_cache{1_mpz};
}  // namespace

const mpz_class& factorial(unsigned long n) {
    {
        std::shared_lock lock(fact_mutex);
        if (n < fact_cache.size()) return fact_cache[n];
    }
    std::unique_lock lock(fact_mutex);
    while (fact_cache.size() <= n) {
        mpz_class next = fact_cache.back() * (unsigned long)fact_cache.size();
        fact_cache.push_back(std::move(next));
    }
    return fact_cache[n];
}

SignedSqrtRational::SignedSqrtRational(int sign, mpq_class radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw std::invalid_argument("negative radicand");
    radicand_.canonicalize();
    if (radicand_ == 0) sign_ = 0;
    if (sign_ == 0) radicand_ = 0;
}

SignedSqrtRational SignedSqrtRational::from_rational(const mpq_class& r) {
    int s = sgn(r);
    return SignedSqrtRational(s, r * r);
}

SignedSqrtRational SignedSqrtRational::operator*(const SignedSqrtRational& o) const {
    return SignedSqrtRational(sign_ * o.sign_, radicand_ * o.radicand_);
}

SignedSqrtRational SignedSqrtRational::operator-() const {
    return SignedSqrtRational(-sign_, radicand_);
}

double SignedSqrtRational::to_double() const {
    return sign_ * std::sqrt(radicand_.get_d());
}

std::string SignedSqrtRational::str() const {
    if (sign_ == 0) return "0 0";
    std::string s = sign_ > 0 ? "+ " : "- ";
    return s + radicand_.get_num().get_str() + "/" + radicand_.get_den().get_str();
}

namespace {
// n = s^2 * k with k squarefree. Factorial-ratio radicands only involve
// primes up to the largest factorial argument, well below the trial bound.
void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& k) {
    s = 1;
    k = 1;
    mpz_class rest = n;
    for (unsigned long p = 2; p <= 20000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
        s *= pw;
        if (e % 2) k *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else {
            k *= rest;  // treated as a kernel of its own
        }
    }
}
}  // namespace

void SqrtSum::add(const SignedSqrtRational& v) { add_scaled(1, v); }

void SqrtSum::add_scaled(const mpq_class& scale, const SignedSqrtRational& v) {
    if (v.is_zero() || scale == 0) return;
    // sign*sqrt(p/q) = sign * sqrt(p*q) / q
    const mpz_class& p = v.radicand().get_num();
    const mpz_class& q = v.radicand().get_den();
    mpz_class s, k;
    squarefree_split(p * q, s, k);
    mpq_class coeff(v.sign() * s, q);
    coeff.canonicalize();
    coeff *= scale;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SqrtSum::is_zero() const { return terms_.empty(); }

SignedSqrtRational SqrtSum::to_signed_sqrt() const {
    if (terms_.empty()) return SignedSqrtRational::zero();
    if (terms_.size() != 1)
        throw std::logic_error("sqrt sum does not collapse to a single surd");
    const auto& [k, c] = *terms_.begin();
    return SignedSqrtRational(sgn(c), mpq_class(c * c) * k);
}

double SqrtSum::to_double() const {
    double out = 0.0;
    for (const auto& [k, c] : terms_) out += c.get_d() * std::sqrt(k.get_d());
    return out;
}

int phase_sign(int two_p) {
    if (two_p % 2 != 0) throw std::invalid_argument("half-integer exponent in phase");
    return (two_p / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace spinnet
