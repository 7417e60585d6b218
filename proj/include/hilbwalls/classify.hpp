#pragma once

// Walls, their numerical type, and the resulting chamber count of the movable cone.
//
// A wall is the ray H~ - Gamma B; Gamma is a complete invariant of it. The type is
// read off the hyperbolic lattice Zv + Zw of a representative w:
//   divisorial  spherical s with (s, v) = 0, or isotropic u with (u, v) in {1, 2}
//               (up to sign);
//   flopping    spherical s with 0 < |(s, v)| <= v^2 / 2, or v = w + (v - w) with
//               both summands positive classes;
//   fake        none of the above.

#include "hilbwalls/arith.hpp"
#include "hilbwalls/mukai.hpp"
#include "hilbwalls/surface.hpp"
#include "hilbwalls/walls.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbwalls {

struct degenerate_radius : std::domain_error {
    using std::domain_error::domain_error;
};

enum class WallKind { Flopping, Divisorial, Fake };

inline const char* to_string(WallKind k) {
    switch (k) {
        case WallKind::Flopping: return "flopping";
        case WallKind::Divisorial: return "divisorial";
        case WallKind::Fake: return "fake";
    }
    return "?";
}

enum class CertificateType { Spherical, Isotropic, Decomposition };

inline const char* to_string(CertificateType t) {
    switch (t) {
        case CertificateType::Spherical: return "spherical";
        case CertificateType::Isotropic: return "isotropic";
        case CertificateType::Decomposition: return "decomposition";
    }
    return "?";
}

struct Certificate {
    CertificateType type;
    MukaiVector vector;
    Integer pairing_with_v;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Semicircle {
    Rational center;
    Rational radius_sq;

    friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct Wall {
    Rational gamma;
    std::vector<WallCandidate> representatives;
    // Representative w with the smallest index of Zv + Zw; the type is read off its lattice.
    std::size_t base = 0;
    // in_lattice[i]: representatives[i] lies in Zv + Z representatives[base].
    std::vector<bool> in_lattice;
    // Zv + Z representatives[base] is saturated in the Mukai lattice.
    bool saturated = true;
    WallKind kind = WallKind::Fake;
    std::optional<Certificate> certificate;
    Semicircle semicircle;
    Rational y0_sq;
};

/// (x + 1/Gamma)^2 + y^2 = 1/Gamma^2 - h^2/k^2.
inline Semicircle semicircle(const Rational& g, const SurfaceParams& p) {
    if (g <= 0 || g >= make_rational(p.k, p.h))
        throw degenerate_radius("semicircle: need 0 < Gamma < k/h, got " + display_string(g));
    Rational inv = 1 / g;
    return {-inv, inv * inv - make_rational(p.h * p.h, p.k * p.k)};
}

/// Height squared where the wall meets x = -1; negative when it misses the line.
inline Rational y0_squared(const Rational& g, const SurfaceParams& p) {
    if (g <= 0) throw degenerate_input("y0_squared: Gamma must be positive");
    return 2 / g - make_rational(p.h * p.h + p.k * p.k, p.k * p.k);
}

/// Z_{x,y}(w) stored as (Re Z, Im Z / y), so only y^2 enters.
struct CentralChargeValue {
    Rational re;
    Rational im_over_y;

    friend bool operator==(const CentralChargeValue&, const CentralChargeValue&) = default;
};

inline CentralChargeValue central_charge(const MukaiVector& w, const Rational& x, const Rational& y_sq,
                                         const SurfaceParams& p) {
    const Rational d(p.d);
    CentralChargeValue z;
    z.re = 2 * d * Rational(w.c) * x - Rational(w.r) * d * (x * x - y_sq) - Rational(w.s);
    z.im_over_y = 2 * d * Rational(w.c) - 2 * d * Rational(w.r) * x;
    return z;
}

/// Z(w1) and Z(w2) are real-proportional at (x, y). Since y > 0 factors out of
/// both imaginary parts the test is a rational cross product.
inline bool aligned(const MukaiVector& w1, const MukaiVector& w2, const Rational& x, const Rational& y_sq,
                    const SurfaceParams& p) {
    if (y_sq <= 0) throw degenerate_input("aligned: y^2 must be positive");
    CentralChargeValue z1 = central_charge(w1, x, y_sq, p);
    CentralChargeValue z2 = central_charge(w2, x, y_sq, p);
    return z1.re * z2.im_over_y - z2.re * z1.im_over_y == 0;
}

namespace detail {

/// gcd of the 2x2 minors of [v w]; 1 iff Zv + Zw is saturated.
inline Integer lattice_index(const MukaiVector& v, const MukaiVector& w) {
    Integer m1 = v.r * w.c - v.c * w.r;
    Integer m2 = v.r * w.s - v.s * w.r;
    Integer m3 = v.c * w.s - v.s * w.c;
    return gcd_of(gcd_of(m1, m2), m3);
}

}  // namespace detail

/// One Wall per distinct Gamma. Kind and certificate are left for classify_wall.
inline std::vector<Wall> group_into_walls(const std::vector<WallCandidate>& candidates, const SurfaceParams& p) {
    std::vector<Wall> walls;
    for (const WallCandidate& c : candidates) {
        if (walls.empty() || walls.back().gamma != c.gamma) {
            Wall wall;
            wall.gamma = c.gamma;
            wall.semicircle = semicircle(c.gamma, p);
            wall.y0_sq = y0_squared(c.gamma, p);
            walls.push_back(std::move(wall));
        }
        walls.back().representatives.push_back(c);
    }
    for (Wall& wall : walls) {
        // Two representatives can span nested lattices, e.g. v - 2w next to w.
        Integer best = -1;
        for (std::size_t i = 0; i < wall.representatives.size(); ++i) {
            Integer idx = detail::lattice_index(p.v, wall.representatives[i].w);
            if (best < 0 || idx < best) {
                best = idx;
                wall.base = i;
            }
        }
        wall.saturated = best == 1;
        const MukaiVector& base = wall.representatives[wall.base].w;
        for (const WallCandidate& c : wall.representatives)
            wall.in_lattice.push_back(membership_in_lattice(c.w, p.v, base).has_value());
    }
    return walls;
}

/// Sets kind and certificate from the lattice Zv + Zw, w the base representative.
inline void classify_wall(Wall& wall, const SurfaceParams& p) {
    if (wall.representatives.empty()) throw degenerate_input("classify_wall: wall has no representatives");
    if (wall.base >= wall.representatives.size()) throw degenerate_input("classify_wall: base out of range");
    const MukaiVector& w = wall.representatives[wall.base].w;
    const Integer& d = p.d;

    auto first_solution = [&](const Integer& target, const Integer& pv) -> std::optional<MukaiVector> {
        auto sols = solve_in_rank2(p.v, w, target, pv, d);
        if (sols.empty()) return std::nullopt;
        return sols.front();
    };

    if (auto s = first_solution(-2, 0)) {
        wall.kind = WallKind::Divisorial;
        wall.certificate = Certificate{CertificateType::Spherical, *s, 0};
        return;
    }
    for (int mag = 1; mag <= 2; ++mag) {
        for (int sign : {1, -1}) {
            Integer pv = sign * mag;
            if (auto u = first_solution(0, pv)) {
                wall.kind = WallKind::Divisorial;
                wall.certificate = Certificate{CertificateType::Isotropic, *u, pv};
                return;
            }
        }
    }
    for (Integer mag = 1; mag <= p.N; ++mag) {
        for (int sign : {1, -1}) {
            Integer pv = sign * mag;
            if (auto s = first_solution(-2, pv)) {
                wall.kind = WallKind::Flopping;
                wall.certificate = Certificate{CertificateType::Spherical, *s, pv};
                return;
            }
        }
    }
    for (const WallCandidate& c : wall.representatives) {
        if (c.branch == Branch::PositivePair) {
            wall.kind = WallKind::Flopping;
            wall.certificate = Certificate{CertificateType::Decomposition, c.w, c.j};
            return;
        }
    }
    wall.kind = WallKind::Fake;
    wall.certificate.reset();
}

struct ChamberReport {
    SurfaceParams params;
    std::vector<Wall> walls;
    int chamber_count = 1;             // 1 + number of flopping walls (distinct Gamma)
    int chamber_count_by_vectors = 1;  // 1 + number of candidate vectors on flopping walls
    bool lagrangian_unique = true;
    Rational bound_k;
    std::vector<std::string> faults;

    std::size_t vector_count() const {
        std::size_t n = 0;
        for (const Wall& w : walls) n += w.representatives.size();
        return n;
    }
};

inline ChamberReport chamber_report(const SurfaceParams& p, const SearchOptions& opts = {}) {
    ChamberReport rep;
    rep.params = p;
    rep.bound_k = sufficient_k_bound(p.Delta, p.h);
    rep.walls = group_into_walls(enumerate_candidates(p, opts), p);
    for (Wall& wall : rep.walls) {
        classify_wall(wall, p);
        switch (wall.kind) {
            case WallKind::Flopping:
                ++rep.chamber_count;
                rep.chamber_count_by_vectors += static_cast<int>(wall.representatives.size());
                break;
            case WallKind::Divisorial:
                rep.faults.push_back("interior wall at Gamma=" + display_string(wall.gamma) +
                                     " classified divisorial");
                break;
            case WallKind::Fake:
                rep.faults.push_back("fake wall at Gamma=" + display_string(wall.gamma));
                break;
        }
    }
    rep.lagrangian_unique = rep.chamber_count == 1;
    return rep;
}

struct MinimalClearK {
    Integer k0;
    Integer d0;  // Delta k0^2
    struct Row {
        Integer k;
        int wall_count;  // flopping walls (distinct Gamma)
    };
    std::vector<Row> per_k;
};

/// Scans admissible k up to ceil(sufficient_k_bound); k0 is the first admissible
/// k past the last one carrying a wall.
inline MinimalClearK minimal_clear_k(const Integer& Delta, const Integer& h, const SearchOptions& opts = {}) {
    const Integer horizon = ceil_of(sufficient_k_bound(Delta, h));
    MinimalClearK out;
    Integer last_wall = 0;
    for (Integer k = 1; k <= horizon; ++k) {
        if (gcd_of(h, k) != 1) continue;
        ChamberReport rep = chamber_report(from_triple(Delta, h, k), opts);
        out.per_k.push_back({k, rep.chamber_count - 1});
        if (rep.chamber_count > 1) last_wall = k;
    }
    Integer k0 = last_wall + 1;
    while (gcd_of(h, k0) != 1) ++k0;
    out.k0 = k0;
    out.d0 = Delta * k0 * k0;
    return out;
}

}  // namespace hilbwalls
