#pragma once

// Polarized K3 surface (S, H) with Pic(S) = Z.H, H^2 = 2d = 2 Delta k^2, and the
// Hilbert scheme of N + 1 = Delta h^2 + 1 points on it.

#include "hilbwalls/arith.hpp"
#include "hilbwalls/mukai.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hilbwalls {

struct SurfaceParams {
    Integer Delta;
    Integer h;
    Integer k;
    Integer d;  // H^2 = 2d
    Integer N;  // number of points is N + 1
    MukaiVector v;

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

    std::string str() const {
        return "(Delta=" + Delta.str() + ", h=" + h.str() + ", k=" + k.str() + ")";
    }
};

/// Validated construction from (Delta, h, k).
inline SurfaceParams from_triple(const Integer& Delta, const Integer& h, const Integer& k) {
    if (Delta < 1 || h < 1 || k < 1) throw degenerate_input("Delta, h, k must all be >= 1");
    if (gcd_of(h, k) != 1) throw gcd_violation("gcd(h, k) = " + gcd_of(h, k).str() + " for h=" + h.str() + ", k=" + k.str());
    SurfaceParams p;
    p.Delta = Delta;
    p.h = h;
    p.k = k;
    p.d = Delta * k * k;
    p.N = Delta * h * h;
    p.v = MukaiVector{1, 0, -p.N};
    return p;
}

namespace detail {

/// Square-free part of n >= 1. Trial division runs to the cube root of what
/// remains; the cofactor then has at most two prime factors.
inline Integer squarefree_part(Integer n) {
    Integer out = 1;
    for (Integer p = 2; p * p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    if (!is_square(n)) out *= n;
    return out;
}

}  // namespace detail

/// d * N is not a perfect square, so no rational Lagrangian fibration exists.
struct SyzFailure {
    Integer product;     // d * N
    Integer squarefree;  // square-free part of d * N, > 1

    friend bool operator==(const SyzFailure&, const SyzFailure&) = default;
};

using NormalizeResult = std::variant<SurfaceParams, SyzFailure>;

/// Reduces d / N = k^2 / h^2 in lowest terms; Delta = gcd(d, N) is not assumed square-free.
inline NormalizeResult normalize(const Integer& d, const Integer& N) {
    if (d < 1 || N < 1) throw degenerate_input("d and N must be >= 1");
    if (!is_square(d * N)) {
        Integer sf_d = detail::squarefree_part(d);
        Integer sf_n = detail::squarefree_part(N);
        Integer g = gcd_of(sf_d, sf_n);
        return SyzFailure{d * N, sf_d * sf_n / (g * g)};
    }
    Integer g = gcd_of(d, N);
    Integer k = exact_sqrt(d / g);
    Integer h = exact_sqrt(N / g);
    if (k < 0 || h < 0 || g * k * k != d || g * h * h != N)
        throw internal_inconsistency("normalize: d/N reduced to a non-square ratio although dN is a square");
    return from_triple(g, h, k);
}

/// A ray lambda * H~ + mu * B in the Neron-Severi group of the Hilbert scheme,
/// stored primitive with lambda >= 0.
struct NsRay {
    Integer coeff_htilde;
    Integer coeff_b;

    friend bool operator==(const NsRay&, const NsRay&) = default;

    std::string str() const { return "(" + coeff_htilde.str() + "," + coeff_b.str() + ")"; }
};

inline NsRay make_ray(Integer lambda, Integer mu) {
    if (lambda == 0 && mu == 0) throw degenerate_input("zero ray");
    Integer g = gcd_of(lambda, mu);
    lambda /= g;
    mu /= g;
    if (lambda < 0 || (lambda == 0 && mu < 0)) {
        lambda = -lambda;
        mu = -mu;
    }
    return {lambda, mu};
}

/// Boundary rays H~ and h H~ - k B of the movable cone.
inline std::pair<NsRay, NsRay> movable_cone(const SurfaceParams& p) {
    return {make_ray(1, 0), make_ray(p.h, -p.k)};
}

/// h H~ - k B, which induces the rational Lagrangian fibration.
inline NsRay fibration_divisor(const SurfaceParams& p) { return make_ray(p.h, -p.k); }

/// Delta h (h-1)^2 + 3h/2: every admissible k at or above this has no interior walls.
inline Rational sufficient_k_bound(const Integer& Delta, const Integer& h) {
    if (Delta < 1 || h < 1) throw degenerate_input("Delta and h must be >= 1");
    return Rational(Delta * h * (h - 1) * (h - 1)) + make_rational(3 * h, 2);
}

namespace detail {

/// Fundamental solution of x^2 - D y^2 = 1 for non-square D > 0.
inline std::pair<Integer, Integer> pell_unit(const Integer& D) {
    const Integer a0 = boost::multiprecision::sqrt(D);
    Integer m = 0, q = 1, a = a0;
    Integer p_prev = 1, p = a0, r_prev = 0, r = 1;
    while (p * p - D * r * r != 1) {
        m = q * a - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
        Integer p_next = a * p + p_prev;
        Integer r_next = a * r + r_prev;
        p_prev = p;
        p = p_next;
        r_prev = r;
        r = r_next;
    }
    return {p, r};
}

}  // namespace detail

/// Minimal non-negative solution of X^2 - 4d Y^2 = 5, if any.
///
/// Square 4d = m^2 factors as (X - mY)(X + mY) = 5. Otherwise, when 5 < sqrt(4d)
/// every solution is a convergent of sqrt(4d) and two periods of the expansion
/// suffice; for the few remaining small discriminants a direct search up to
/// Nagell's bound y1 * sqrt(5 / (2 (x1 + 1))) is exhaustive.
inline std::optional<std::pair<Integer, Integer>> pell_check_hilb2(const Integer& d) {
    require_degree(d);
    const Integer D = 4 * d;
    const Integer target = 5;

    Integer m = exact_sqrt(D);
    if (m >= 0) {
        std::optional<std::pair<Integer, Integer>> best;
        for (Integer e = 1; e * e <= target; ++e) {
            if (target % e != 0) continue;
            Integer f = target / e;
            if ((e + f) % 2 != 0 || (f - e) % (2 * m) != 0) continue;
            std::pair<Integer, Integer> sol{(e + f) / 2, (f - e) / (2 * m)};
            if (!best || sol.first < best->first) best = sol;
        }
        return best;
    }

    if (D > target * target) {
        const Integer a0 = boost::multiprecision::sqrt(D);
        Integer mm = 0, q = 1, a = a0;
        Integer p_prev = 1, p = a0, r_prev = 0, r = 1;
        int period = 0;
        for (;;) {
            if (p * p - D * r * r == target) return std::make_pair(p, r);
            mm = q * a - mm;
            q = (D - mm * mm) / q;
            a = (a0 + mm) / q;
            // a == 2 a0 closes a period; the convergent just checked ended it.
            if (a == 2 * a0 && ++period == 2) return std::nullopt;
            Integer p_next = a * p + p_prev;
            Integer r_next = a * r + r_prev;
            p_prev = p;
            p = p_next;
            r_prev = r;
            r = r_next;
        }
    }

    auto [x1, y1] = detail::pell_unit(D);
    // Y <= y1 * sqrt(5 / (2 (x1 + 1)))  <=>  Y^2 * 2 (x1 + 1) <= 5 y1^2.
    for (Integer Y = 0; Y * Y * 2 * (x1 + 1) <= target * y1 * y1; ++Y) {
        Integer X = exact_sqrt(target + D * Y * Y);
        if (X >= 0) return std::make_pair(X, Y);
    }
    return std::nullopt;
}

}  // namespace hilbwalls
