#pragma once

// Algebraic Mukai lattice of a K3 surface with Pic = Z.H and H^2 = 2d.
//
// A class r + c.H + s.[pt] is stored as (r, c, s); the pairing is
//     (v, w) = 2d c_v c_w - r_v s_w - s_v r_w.

#include "hilbwalls/arith.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hilbwalls {

struct non_hyperbolic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dependent_basis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MukaiVector {
    Integer r;
    Integer c;
    Integer s;

    MukaiVector() = default;
    MukaiVector(Integer r_, Integer c_, Integer s_)
        : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}

    bool is_zero() const { return r == 0 && c == 0 && s == 0; }

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
    friend std::strong_ordering operator<=>(const MukaiVector& a, const MukaiVector& b) {
        if (a.r != b.r) return a.r < b.r ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.c != b.c) return a.c < b.c ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.s != b.s) return a.s < b.s ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
        return {a.r + b.r, a.c + b.c, a.s + b.s};
    }
    friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
        return {a.r - b.r, a.c - b.c, a.s - b.s};
    }
    friend MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.c, -a.s}; }
    friend MukaiVector operator*(const Integer& k, const MukaiVector& a) {
        return {k * a.r, k * a.c, k * a.s};
    }

    std::string str() const { return "(" + r.str() + "," + c.str() + "," + s.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const MukaiVector& v) { return os << v.str(); }
};

inline void require_degree(const Integer& d) {
    if (d < 1) throw degenerate_input("half-degree d must be >= 1");
}

inline Integer pairing(const MukaiVector& v, const MukaiVector& w, const Integer& d) {
    return 2 * d * v.c * w.c - v.r * w.s - v.s * w.r;
}

inline Integer square(const MukaiVector& v, const Integer& d) { return pairing(v, v, d); }

/// Returns (v / g, g) with g the gcd of the components.
inline std::pair<MukaiVector, Integer> primitive_part(const MukaiVector& v) {
    if (v.is_zero()) throw degenerate_input("primitive_part of the zero vector");
    Integer g = gcd_of(gcd_of(v.r, v.c), v.s);
    return {MukaiVector{v.r / g, v.c / g, v.s / g}, g};
}

inline bool is_primitive(const MukaiVector& v) {
    return !v.is_zero() && primitive_part(v).second == 1;
}

/// True when u lies in the positive cone relative to v: u^2 >= 0 and (u, v) > 0.
inline bool is_positive_class(const MukaiVector& u, const MukaiVector& v, const Integer& d) {
    return square(u, d) >= 0 && pairing(u, v, d) > 0;
}

/// v^2 w^2 - (v, w)^2. Negative exactly when Zv + Zw is hyperbolic.
inline Integer gram_determinant(const MukaiVector& v, const MukaiVector& w, const Integer& d) {
    Integer p = pairing(v, w, d);
    return square(v, d) * square(w, d) - p * p;
}

inline bool is_hyperbolic(const MukaiVector& v, const MukaiVector& w, const Integer& d) {
    return gram_determinant(v, w, d) < 0;
}

/// All s = x v + y w (x, y integers) with s^2 = target_square and
/// (s, v) = pairing_with_v. At most two solutions; sorted lexicographically.
///
/// With A = v^2, B = (v, w), G = gram_determinant and A != 0, the linear
/// condition gives A x = p - B y, and substituting into the quadratic leaves
///     G y^2 = A T - p^2.
inline std::vector<MukaiVector> solve_in_rank2(const MukaiVector& v, const MukaiVector& w,
                                               const Integer& target_square,
                                               const Integer& pairing_with_v, const Integer& d) {
    const Integer G = gram_determinant(v, w, d);
    if (G >= 0) throw non_hyperbolic("solve_in_rank2 needs a hyperbolic pair");
    const Integer A = square(v, d);
    const Integer B = pairing(v, w, d);
    const Integer C = square(w, d);
    const Integer& T = target_square;
    const Integer& p = pairing_with_v;

    std::vector<MukaiVector> out;
    auto emit = [&](const Integer& x, const Integer& y) {
        MukaiVector s = x * v + y * w;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    };

    if (A != 0) {
        Integer rhs = A * T - p * p;
        if (rhs % G != 0) return out;
        Integer y = exact_sqrt(rhs / G);
        if (y < 0) return out;
        for (const Integer& yy : {y, Integer(-y)}) {
            Integer num = p - B * yy;
            if (num % A == 0) emit(num / A, yy);
        }
    } else {
        // v isotropic, so B != 0 and y = p / B is forced.
        if (p % B != 0) return out;
        Integer y = p / B;
        if (y == 0) {
            if (T != 0) return out;
            throw degenerate_input("solve_in_rank2: infinitely many solutions (isotropic v, p = T = 0)");
        }
        Integer num = T - C * y * y;
        Integer den = 2 * B * y;
        if (num % den == 0) emit(num / den, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Integer (x, y) with target = x v + y w, if one exists.
inline std::optional<std::pair<Integer, Integer>> membership_in_lattice(const MukaiVector& target,
                                                                        const MukaiVector& v,
                                                                        const MukaiVector& w) {
    // 2x2 minors of the matrix with columns v, w.
    const Integer m_rc = v.r * w.c - v.c * w.r;
    const Integer m_rs = v.r * w.s - v.s * w.r;
    const Integer m_cs = v.c * w.s - v.s * w.c;
    if (m_rc == 0 && m_rs == 0 && m_cs == 0) throw dependent_basis("membership_in_lattice: v and w are proportional");

    // Solve on a pair of coordinates with non-zero minor, then verify the third.
    Integer x, y;
    auto solve = [&](const Integer& det, const Integer& v1, const Integer& w1, const Integer& t1,
                     const Integer& v2, const Integer& w2, const Integer& t2) -> bool {
        Integer xn = t1 * w2 - t2 * w1;
        Integer yn = v1 * t2 - v2 * t1;
        if (xn % det != 0 || yn % det != 0) return false;
        x = xn / det;
        y = yn / det;
        return true;
    };
    bool ok;
    if (m_rc != 0)
        ok = solve(m_rc, v.r, w.r, target.r, v.c, w.c, target.c);
    else if (m_rs != 0)
        ok = solve(m_rs, v.r, w.r, target.r, v.s, w.s, target.s);
    else
        ok = solve(m_cs, v.c, w.c, target.c, v.s, w.s, target.s);
    if (!ok) return std::nullopt;
    if (x * v + y * w != target) return std::nullopt;
    return std::make_pair(x, y);
}

}  // namespace hilbwalls
