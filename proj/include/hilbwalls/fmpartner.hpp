#pragma once

// Fourier-Mukai partner S' = M_H(u) of S, u = (k, -h, Delta k h^2), and the data
// identifying Hilb^{N+1}(S) with a twisted Beauville-Mukai system on S'.

#include "hilbwalls/arith.hpp"
#include "hilbwalls/mukai.hpp"
#include "hilbwalls/surface.hpp"

#include <string>
#include <utility>

namespace hilbwalls {

/// u = (k, -h, Delta k h^2); isotropic and primitive since gcd(h, k) = 1.
inline MukaiVector fm_vector(const SurfaceParams& p) { return {p.k, -p.h, p.Delta * p.k * p.h * p.h}; }

struct BezoutPair {
    Integer A;
    Integer B;

    friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// B h - A k = 1 with 0 <= A < h.
inline BezoutPair bezout(const Integer& h, const Integer& k) {
    if (h < 1 || k < 1) throw degenerate_input("bezout: h and k must be >= 1");
    if (gcd_of(h, k) != 1) throw gcd_violation("bezout: gcd(h, k) != 1");
    // Extended Euclid for x h + y k = 1.
    Integer r0 = h, r1 = k, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    // B = x0, A = -y0 is one solution; shift by (k, h) multiples into 0 <= A < h.
    Integer A = -y0 % h;
    if (A < 0) A += h;
    Integer B = (1 + A * k) / h;
    if (B * h - A * k != 1) throw internal_inconsistency("bezout: normalization failed");
    return {A, B};
}

inline const char* bezout_coset_rule() { return "B*h - A*k = 1 with 0 <= A < h"; }

/// Preimage (B, -A, Delta(-h + A k h)) of the Neron-Severi generator of S'.
inline MukaiVector ns_generator(const SurfaceParams& p) {
    const BezoutPair ab = bezout(p.h, p.k);
    const MukaiVector D{ab.B, -ab.A, p.Delta * (-p.h + ab.A * p.k * p.h)};
    const MukaiVector u = fm_vector(p);
    if (pairing(D, u, p.d) != 0) throw internal_inconsistency("ns_generator: not orthogonal to u");
    if (square(D, p.d) != 2 * p.Delta) throw internal_inconsistency("ns_generator: square is not 2 Delta");
    // phi(x) = h r + k c kills u and takes the value B h - A k = 1 on D, so no
    // D + L u is divisible by any N > 1. In particular D is not a multiple of u.
    auto phi = [&](const MukaiVector& x) -> Integer { return p.h * x.r + p.k * x.c; };
    if (phi(u) != 0 || phi(D) != 1) throw internal_inconsistency("ns_generator: not primitive modulo u");
    return D;
}

/// gcd(k, 2 Delta k^2 h, Delta k h^2): the order of the Brauer class obstructing a
/// universal sheaf on S x S'.
inline Integer twist_order(const SurfaceParams& p) {
    Integer g = gcd_of(gcd_of(p.k, 2 * p.Delta * p.k * p.k * p.h), p.Delta * p.k * p.h * p.h);
    if (g != p.k) throw internal_inconsistency("twist_order: gcd differs from k");
    return g;
}

/// Class (0, C, s) of the twisted Beauville-Mukai system with C = h H'.
struct BmClass {
    Integer curve_coeff;   // C = curve_coeff * H'
    Integer curve_square;  // C^2 = 2 Delta h^2 = v^2
    // s is fixed only up to composing the equivalence with a shift.
    static constexpr const char* s_marker = "undetermined";
};

inline BmClass bm_class(const SurfaceParams& p) {
    BmClass out;
    out.curve_coeff = p.h;
    out.curve_square = p.h * p.h * 2 * p.Delta;
    if (out.curve_square != square(p.v, p.d)) throw internal_inconsistency("bm_class: C^2 != v^2");
    return out;
}

struct FmPartnerReport {
    MukaiVector u;
    Integer partner_degree;  // (H')^2 = 2 Delta
    BezoutPair bezout;
    MukaiVector ns_generator_vector;
    Integer twist_order;
    BmClass bm;
};

inline FmPartnerReport fm_report(const SurfaceParams& p) {
    FmPartnerReport r;
    r.u = fm_vector(p);
    if (square(r.u, p.d) != 0 || !is_primitive(r.u)) throw internal_inconsistency("fm_vector: not primitive isotropic");
    r.partner_degree = square(ns_generator(p), p.d);
    r.bezout = bezout(p.h, p.k);
    r.ns_generator_vector = ns_generator(p);
    r.twist_order = twist_order(p);
    r.bm = bm_class(p);
    return r;
}

}  // namespace hilbwalls
