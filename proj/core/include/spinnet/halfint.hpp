#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace spinnet {

// Angular momentum quantum number stored as twice its value, so half
// integers stay exact. Used for both j-type (non-negative) and m-type
// (signed) quantities.
struct HalfInt {
    int two_j = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twoj) : two_j(twoj) {}

    static constexpr HalfInt from_int(int j) { return HalfInt(2 * j); }

    constexpr bool is_integer() const { return two_j % 2 == 0; }
    constexpr double value() const { return 0.5 * two_j; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(two_j + o.two_j); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(two_j - o.two_j); }
    constexpr HalfInt operator-() const { return HalfInt(-two_j); }

    std::string str() const {
        if (two_j % 2 == 0) return std::to_string(two_j / 2);
        return std::to_string(two_j) + "/2";
    }
};

inline void require_jm(HalfInt j, HalfInt m) {
    if (j.two_j < 0) throw std::invalid_argument("negative j");
    if ((j.two_j - m.two_j) % 2 != 0)
        throw std::invalid_argument("j,m parity mismatch: j=" + j.str() + " m=" + m.str());
    if (m.two_j < -j.two_j || m.two_j > j.two_j)
        throw std::invalid_argument("|m| > j: j=" + j.str() + " m=" + m.str());
}

struct Triad {
    HalfInt a, b, c;
    bool admissible() const {
        if (a.two_j < 0 || b.two_j < 0 || c.two_j < 0) return false;
        if ((a.two_j + b.two_j + c.two_j) % 2 != 0) return false;
        return c.two_j >= std::abs(a.two_j - b.two_j) && c.two_j <= a.two_j + b.two_j;
    }
};

inline bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    return Triad{a, b, c}.admissible();
}

}  // namespace spinnet
