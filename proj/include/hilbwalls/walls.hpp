#pragma once

// Candidate walls in the interior of the movable cone of Hilb^{N+1}(S).
//
// An interior wall is a ray H~ - Gamma B with 0 < Gamma < k/h. It corresponds to a
// flopping wall for v = (1, 0, -N) in the (x, y) stability slice, and hence to a
// primitive class w = (a, b, c) with
//     j = (w, v) = N a - c,      w^2 / 2 = d b^2 - a c,
//     Gamma = -2 d b / (2 N a - j).
// Either w is spherical (w^2 = -2, |j| <= N) or w and v - w are both positive
// classes with 0 <= w^2 < N/2 and 2 w^2 + 1 <= j <= N.
//
// The search runs over (a, w^2, j): c is then fixed and b is forced up to sign by
// a perfect-square test, so no bound on b is needed. |a| is bounded by the case
// analysis for a < -1 and a > 1, which does not depend on k.

#include "hilbwalls/arith.hpp"
#include "hilbwalls/mukai.hpp"
#include "hilbwalls/surface.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hilbwalls {

struct vertical_wall : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Branch { Spherical, PositivePair };

inline const char* to_string(Branch b) { return b == Branch::Spherical ? "spherical" : "positive-pair"; }

/// Lower end of the j-interval for the positive-pair branch.
enum class PositiveJLower {
    TwiceSquarePlusOne,  // j >= 2 w^2 + 1, as stated for the Hilbert scheme case analysis
    SquarePlusOne,       // j >= w^2 + 1, the reading with the coefficient on w^2 / 2
};

struct SearchOptions {
    PositiveJLower positive_j_lower = PositiveJLower::TwiceSquarePlusOne;
};

struct JInterval {
    Integer lo;
    Integer hi;
};

struct SearchBox {
    Integer a_max;
    std::vector<Integer> wsq_values;  // -2, then 0, 2, ... below N/2
    JInterval spherical_j;
    Integer positive_j_upper;
    PositiveJLower positive_j_lower;

    JInterval j_interval(const Integer& wsq) const {
        if (wsq == -2) return spherical_j;
        Integer lo = positive_j_lower == PositiveJLower::TwiceSquarePlusOne ? Integer(2 * wsq + 1) : Integer(wsq + 1);
        return {lo, positive_j_upper};
    }
};

inline SearchBox search_box(const SurfaceParams& p, const SearchOptions& opts = {}) {
    SearchBox box;
    Integer case7 = p.Delta * (p.h - 1) * (p.h - 1) + 1;
    Integer case6 = p.N / 4 + 1;
    box.a_max = std::max({Integer(1), case7, case6});
    box.wsq_values.push_back(-2);
    for (Integer e = 0; 2 * e < p.N; e += 2) box.wsq_values.push_back(e);
    box.spherical_j = {-p.N, p.N};
    box.positive_j_upper = p.N;
    box.positive_j_lower = opts.positive_j_lower;
    return box;
}

struct WallCandidate {
    MukaiVector w;              // reported class; spherical classes are signed so that j > 0
    MukaiVector destabilizing;  // the sign of w that satisfies the tilt inequalities
    Branch branch;
    Integer j;
    Integer wsq;
    Integer i;  // h a + k b
    Rational gamma;

    friend bool operator==(const WallCandidate&, const WallCandidate&) = default;
};

/// Gamma = -2 d b / (2 N a - j), in lowest terms.
inline Rational gamma(const MukaiVector& w, const SurfaceParams& p) {
    Integer j = pairing(w, p.v, p.d);
    Integer den = 2 * p.N * w.r - j;
    if (den == 0) throw vertical_wall("gamma: 2 N a - j = 0 for w = " + w.str());
    return make_rational(-2 * p.d * w.c, den);
}

/// 2k^2 / (h^2 + k^2 + 1) <= Gamma < k / h.
inline bool slope_window_filter(const Rational& g, const SurfaceParams& p) {
    Rational lower = make_rational(2 * p.k * p.k, p.h * p.h + p.k * p.k + 1);
    Rational upper = make_rational(p.k, p.h);
    return lower <= g && g < upper;
}

/// Both w and v - w lie in the tilted heart at x = -1/Gamma:
///     b Gamma + a >= 0  and  -b Gamma + (1 - a) >= 0.
inline bool tilt_admissible(const MukaiVector& w, const Rational& g) {
    Rational first = Rational(w.c) * g + Rational(w.r);
    Rational second = -Rational(w.c) * g + Rational(1 - w.r);
    return first >= 0 && second >= 0;
}

/// Applies every numerical filter to a single class. Returns the candidate with
/// its reported sign, or nothing if w is rejected.
inline std::optional<WallCandidate> admit(const MukaiVector& w, const SurfaceParams& p,
                                          const SearchOptions& opts = {}) {
    if (w.is_zero() || w.c == 0 || w.r * w.c > 0) return std::nullopt;

    const Integer j = pairing(w, p.v, p.d);
    const Integer wsq = square(w, p.d);
    Branch branch;
    if (wsq == -2) {
        if (j < -p.N || j > p.N) return std::nullopt;
        branch = Branch::Spherical;
    } else {
        if (wsq < 0 || 2 * wsq >= p.N) return std::nullopt;
        Integer lo = opts.positive_j_lower == PositiveJLower::TwiceSquarePlusOne ? Integer(2 * wsq + 1) : Integer(wsq + 1);
        if (j < lo || j > p.N) return std::nullopt;
        branch = Branch::PositivePair;
    }
    if (!is_primitive(w)) return std::nullopt;

    if (2 * p.N * w.r - j == 0) return std::nullopt;
    const Rational g = gamma(w, p);
    if (g <= 0) return std::nullopt;
    if (!slope_window_filter(g, p)) return std::nullopt;
    if (!tilt_admissible(w, g)) return std::nullopt;
    if (!is_hyperbolic(p.v, w, p.d)) return std::nullopt;
    if (branch == Branch::PositivePair &&
        !(is_positive_class(w, p.v, p.d) && is_positive_class(p.v - w, p.v, p.d)))
        return std::nullopt;

    // A spherical class and its negative give the same wall; report j > 0.
    MukaiVector reported = (branch == Branch::Spherical && j < 0) ? -w : w;
    WallCandidate cand;
    cand.w = reported;
    cand.destabilizing = w;
    cand.branch = branch;
    cand.j = pairing(reported, p.v, p.d);
    cand.wsq = wsq;
    cand.i = p.h * reported.r + p.k * reported.c;
    cand.gamma = g;
    return cand;
}

namespace detail {

inline void sort_and_dedupe(std::vector<WallCandidate>& out) {
    std::stable_sort(out.begin(), out.end(), [](const WallCandidate& x, const WallCandidate& y) {
        if (x.gamma != y.gamma) return x.gamma < y.gamma;
        return x.w < y.w;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const WallCandidate& x, const WallCandidate& y) { return x.w == y.w; }),
              out.end());
}

}  // namespace detail

/// All candidate walls, sorted by Gamma then lexicographically by w.
inline std::vector<WallCandidate> enumerate_candidates(const SurfaceParams& p, const SearchOptions& opts = {}) {
    const SearchBox box = search_box(p, opts);
    std::vector<WallCandidate> out;
    for (Integer a = -box.a_max; a <= box.a_max; ++a) {
        for (const Integer& wsq : box.wsq_values) {
            const JInterval js = box.j_interval(wsq);
            for (Integer j = js.lo; j <= js.hi; ++j) {
                const Integer c = p.N * a - j;
                // d b^2 = w^2/2 + a c, and b != 0.
                const Integer rhs = wsq / 2 + a * c;
                if (rhs <= 0 || rhs % p.d != 0) continue;
                const Integer b = exact_sqrt(rhs / p.d);
                if (b < 0) continue;
                // a b <= 0 fixes the sign of b unless a = 0.
                std::vector<Integer> signs;
                if (a > 0) signs = {Integer(-b)};
                else if (a < 0) signs = {b};
                else signs = {b, Integer(-b)};
                for (const Integer& bb : signs) {
                    if (auto cand = admit(MukaiVector{a, bb, c}, p, opts)) out.push_back(std::move(*cand));
                }
            }
        }
    }
    detail::sort_and_dedupe(out);
    return out;
}

/// Bound on |b| for the exhaustive search:
/// ceil((Delta h max((h-1)^2, h^2/4) + 2h) / k).
inline Integer brute_force_b_bound(const SurfaceParams& p) {
    Rational hh = Rational(p.h * p.h) / 4;
    Rational m = std::max(Rational((p.h - 1) * (p.h - 1)), hh);
    return ceil_of((Rational(p.Delta * p.h) * m + Rational(2 * p.h)) / Rational(p.k));
}

/// Exhaustive triple loop over (a, b, c) with |a| <= scale a_max,
/// |b| <= scale * brute_force_b_bound and |j| <= N. Independent of the
/// (a, w^2, j) parametrization used by enumerate_candidates.
inline std::vector<WallCandidate> brute_force_oracle(const SurfaceParams& p, const Integer& scale,
                                                     const SearchOptions& opts = {}) {
    if (scale < 1) throw degenerate_input("brute_force_oracle: scale must be >= 1");
    const Integer a_lim = scale * search_box(p, opts).a_max;
    const Integer b_lim = scale * brute_force_b_bound(p);
    std::vector<WallCandidate> out;
    for (Integer a = -a_lim; a <= a_lim; ++a) {
        for (Integer b = -b_lim; b <= b_lim; ++b) {
            for (Integer c = p.N * a - p.N; c <= p.N * a + p.N; ++c) {
                if (auto cand = admit(MukaiVector{a, b, c}, p, opts)) out.push_back(std::move(*cand));
            }
        }
    }
    detail::sort_and_dedupe(out);
    return out;
}

}  // namespace hilbwalls
