// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hilbwalls/hilbwalls.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace hilbwalls;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::set<MukaiVector> candidate_set(long Delta, long h, long k) {
    std::set<MukaiVector> out;
    for (const auto& c : enumerate_candidates(from_triple(Delta, h, k))) out.insert(c.w);
    return out;
}

std::string show(const std::set<MukaiVector>& s) {
    std::string out = "{";
    for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v.str();
    return out + "}";
}

std::vector<SurfaceParams> small_grid() {
    std::vector<SurfaceParams> out;
    for (long h = 1; h <= 3; ++h)
        for (long k = 1; k <= 13; ++k)
            if (gcd_of(h, k) == 1) out.push_back(from_triple(1, h, k));
    return out;
}

std::string capture(const std::string& args, int& code) {
    const std::string cmd = std::string(HILBWALLS_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome hilb2() {
    Outcome o;
    auto r = chamber_report(from_triple(1, 1, 1));
    o.require(r.walls.size() == 1, "k=1 has one wall");
    if (r.walls.size() == 1) {
        o.require(r.walls[0].kind == WallKind::Flopping, "k=1 wall is flopping");
        o.require(r.walls[0].representatives.size() == 1 &&
                      r.walls[0].representatives[0].w == MukaiVector{-1, 1, -2},
                  "k=1 representative is (-1,1,-2)");
    }
    o.require(r.chamber_count == 2, "k=1 has 2 chambers");
    for (long k = 2; k <= 10; ++k)
        o.require(enumerate_candidates(from_triple(1, 1, k)).empty(), "k=" + std::to_string(k) + " has no walls");
    return o;
}

Outcome h_two() {
    Outcome o;
    o.require(chamber_report(from_triple(1, 2, 1)).chamber_count == 5, "k=1 has 5 chambers");
    auto c3 = enumerate_candidates(from_triple(1, 2, 3));
    o.require(c3.size() == 1 && c3[0].w == MukaiVector{2, -1, 5} && c3[0].j == 3 &&
                  c3[0].gamma == make_rational(18, 13),
              "k=3 wall is (2,-1,5), j=3, Gamma=18/13");
    o.require(chamber_report(from_triple(1, 2, 3)).chamber_count == 2, "k=3 has 2 chambers");
    for (long k : {5, 7, 9})
        o.require(chamber_report(from_triple(1, 2, k)).chamber_count == 1, "k=" + std::to_string(k) + " has 1 chamber");
    return o;
}

Outcome h_three() {
    Outcome o;
    const std::vector<std::pair<long, std::set<MukaiVector>>> printed = {
        {2, {{1, -1, 5}, {1, -1, 4}, {-1, 2, -17}, {-1, 2, -16}}},
        {4, {{-1, 1, -17}, {-1, 1, -16}}},
        {5, {{2, -1, 13}}},
        {7, {{-2, 1, -25}}},
    };
    for (const auto& [k, want] : printed) {
        auto got = candidate_set(1, 3, k);
        o.require(got == want, "k=" + std::to_string(k) + " candidates " + show(got) + " != " + show(want));
    }
    for (long k : {8, 10, 11, 13})
        o.require(candidate_set(1, 3, k).empty(), "k=" + std::to_string(k) + " has no candidates");

    auto r2 = chamber_report(from_triple(1, 3, 2));
    o.require(r2.chamber_count == 4 && r2.chamber_count_by_vectors == 5,
              "k=2 counting policies give 4 (distinct Gamma) and 5 (vectors), got " +
                  std::to_string(r2.chamber_count) + " and " + std::to_string(r2.chamber_count_by_vectors));

    auto r1 = chamber_report(from_triple(1, 3, 1));
    o.require(r1.chamber_count_by_vectors == 11,
              "k=1 has 11 chambers counting vectors as walls, got " + std::to_string(r1.chamber_count_by_vectors));
    o.info("k=1: " + std::to_string(r1.vector_count()) + " vectors on " + std::to_string(r1.walls.size()) +
           " distinct Gamma; distinct-Gamma count gives " + std::to_string(r1.chamber_count) + " chambers");
    return o;
}

Outcome past_bound() {
    Outcome o;
    for (long D = 1; D <= 3; ++D)
        for (long h = 1; h <= 3; ++h) {
            const Integer start = ceil_of(sufficient_k_bound(D, h));
            for (Integer k = start; k <= start + 6; ++k) {
                if (gcd_of(h, k) != 1) continue;
                o.require(enumerate_candidates(from_triple(D, h, k)).empty(),
                          "walls at (" + std::to_string(D) + "," + std::to_string(h) + "," + k.str() + ")");
            }
        }
    return o;
}

Outcome pell() {
    Outcome o;
    for (long k = 1; k <= 50; ++k) {
        const bool solvable = pell_check_hilb2(Integer(k * k)).has_value();
        const bool walls = !enumerate_candidates(from_triple(1, 1, k)).empty();
        o.require(solvable == (k == 1), "Pell solvability at k=" + std::to_string(k));
        o.require(solvable == walls, "Pell vs walls at k=" + std::to_string(k));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (long D = 1; D <= 2; ++D)
        for (long h = 1; h <= 3; ++h)
            for (long k = 1; k <= 10; ++k) {
                if (gcd_of(h, k) != 1) continue;
                auto p = from_triple(D, h, k);
                std::set<MukaiVector> fast, slow;
                for (const auto& c : enumerate_candidates(p)) fast.insert(c.w);
                for (const auto& c : brute_force_oracle(p, 2)) slow.insert(c.w);
                o.require(fast == slow, p.str() + ": " + show(fast) + " vs " + show(slow));
            }
    return o;
}

Outcome y0_geometry() {
    Outcome o;
    for (const auto& p : small_grid()) {
        const Rational top = make_rational(p.k, p.h);
        const Rational lower = make_rational(2 * p.k * p.k, p.h * p.h + p.k * p.k + 1);
        for (int i = 1; i <= 100; ++i) {
            const Rational g = top * make_rational(i, 101);
            const Rational y0 = y0_squared(g, p);
            o.require(y0 == 2 / g - make_rational(p.h * p.h + p.k * p.k, p.k * p.k), "y0^2 identity " + p.str());
            o.require((g < lower) == (y0 > make_rational(1, p.k * p.k)), "biconditional " + p.str());
        }
    }
    return o;
}

Outcome fm_grid() {
    Outcome o;
    for (long D = 1; D <= 3; ++D)
        for (long h = 1; h <= 4; ++h)
            for (long k = 1; k <= 10; ++k) {
                if (gcd_of(h, k) != 1) continue;
                auto p = from_triple(D, h, k);
                const MukaiVector u = fm_vector(p), g = ns_generator(p);
                const std::string at = p.str();
                o.require(square(u, p.d) == 0, "u^2 = 0 " + at);
                o.require(is_primitive(u), "u primitive " + at);
                o.require(pairing(g, u, p.d) == 0, "generator orthogonal to u " + at);
                o.require(square(g, p.d) == 2 * D, "generator square 2 Delta " + at);
                o.require(pairing(p.v, u, p.d) == 0, "(v,u) = 0 " + at);
                o.require(twist_order(p) == k, "twist order k " + at);
                o.require(bm_class(p).curve_square == 2 * D * h * h, "C^2 = 2 Delta h^2 " + at);
            }
    return o;
}

Outcome alignment() {
    Outcome o;
    int checked = 0;
    for (const auto& p : small_grid())
        for (const auto& w : chamber_report(p).walls) {
            if (w.kind != WallKind::Flopping || w.y0_sq <= 0) continue;
            for (const auto& c : w.representatives) {
                auto zv = central_charge(p.v, Rational(-1), w.y0_sq, p);
                auto zw = central_charge(c.w, Rational(-1), w.y0_sq, p);
                o.require(zv.re * zw.im_over_y - zw.re * zv.im_over_y == 0, "alignment " + p.str() + " " + c.w.str());
                ++checked;
            }
        }
    o.info(std::to_string(checked) + " representatives checked");
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::string args = "scan --delta 1 --h 3 --k-max 8 --json";
    int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    const std::string a = capture(args, c1);
    const std::string b = capture(args, c2);
    const std::string p1 = capture(args + " --threads 4", c3);
    const std::string p2 = capture(args + " --threads 0", c4);
    o.require(c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0, "all runs exit 0");
    o.require(!a.empty(), "output is non-empty");
    o.require(a == b, "two serial runs are byte-identical");
    o.require(a == p1 && a == p2, "parallel runs match the serial run byte for byte");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1  Hilb^2: one flopping wall (-1,1,-2) at k=1, none for k=2..10", hilb2},
        {"2  h=2: chamber counts and the k=3 wall (2,-1,5)", h_two},
        {"3  h=3: printed vector lists and chamber counts", h_three},
        {"4  no walls past the sufficient bound on k", past_bound},
        {"5  Pell criterion matches walls of (1,1,k), k <= 50", pell},
        {"6  fast enumeration equals the exhaustive oracle", oracle_equivalence},
        {"7  y0^2 identity and threshold biconditional", y0_geometry},
        {"8  Fourier-Mukai partner invariants", fm_grid},
        {"9  Z(v) and Z(w) aligned at x=-1 on every flopping wall", alignment},
        {"10 scan output is deterministic, also in parallel", determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << "\n";
        for (const auto& n : o.notes) std::cout << "       " << n << "\n";
        if (!o.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
