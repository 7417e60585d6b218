#pragma once

// Output documents for the command line driver: the analysis document (JSON
// schema "1"), scan rows (table / CSV / JSON), minimal-k and partner reports.
// Rationals are always serialized as "num/den" strings.

#include "hilbwalls/classify.hpp"
#include "hilbwalls/fmpartner.hpp"
#include "hilbwalls/surface.hpp"
#include "hilbwalls/walls.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <future>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hilbwalls {

inline constexpr const char* kSchemaVersion = "1";

// Integers are JSON numbers when they fit in int64, decimal strings otherwise.
inline nlohmann::json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<std::int64_t>());
}

inline void to_json(nlohmann::json& j, const MukaiVector& v) {
    j = nlohmann::json::array({integer_json(v.r), integer_json(v.c), integer_json(v.s)});
}

inline void from_json(const nlohmann::json& j, MukaiVector& v) {
    v = MukaiVector{integer_from_json(j.at(0)), integer_from_json(j.at(1)), integer_from_json(j.at(2))};
}

inline void to_json(nlohmann::json& j, const NsRay& r) {
    j = nlohmann::json::array({integer_json(r.coeff_htilde), integer_json(r.coeff_b)});
}

inline void from_json(const nlohmann::json& j, NsRay& r) {
    r = NsRay{integer_from_json(j.at(0)), integer_from_json(j.at(1))};
}

inline const char* to_string(PositiveJLower rule) {
    return rule == PositiveJLower::TwiceSquarePlusOne ? "2wsq+1" : "wsq+1";
}

inline std::optional<PositiveJLower> parse_positive_j_lower(const std::string& text) {
    if (text == "2wsq+1") return PositiveJLower::TwiceSquarePlusOne;
    if (text == "wsq+1") return PositiveJLower::SquarePlusOne;
    return std::nullopt;
}

struct CertificateDoc {
    std::string type;
    MukaiVector vector;
    Integer pairing_with_v;

    friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

struct WallDoc {
    std::string gamma;
    std::vector<MukaiVector> vectors;  // lexicographic
    std::vector<Integer> j_values;     // aligned with vectors
    std::vector<std::string> branches;
    std::string kind;
    std::optional<CertificateDoc> certificate;
    std::string center;
    std::string radius_sq;
    std::string y0_sq;
    bool lattice_saturated = true;
    bool representatives_share_lattice = true;

    friend bool operator==(const WallDoc&, const WallDoc&) = default;
};

struct InputEcho {
    std::string mode;  // "triple" or "degree-points"
    Integer Delta, h, k, d, N, degree, points;

    friend bool operator==(const InputEcho&, const InputEcho&) = default;
};

struct FmDoc {
    MukaiVector u;
    Integer partner_degree;
    Integer A, B;
    std::string coset_rule;
    MukaiVector ns_generator;
    Integer twist_order;
    Integer bm_curve_coeff;
    Integer bm_curve_square;
    std::string bm_s;

    friend bool operator==(const FmDoc&, const FmDoc&) = default;
};

struct AnalysisDocument {
    std::string schema_version = kSchemaVersion;
    InputEcho input;
    bool syz = true;
    std::string positive_j_lower = "2wsq+1";
    NsRay cone_first, cone_second;
    NsRay fibration_divisor;
    std::string bound_k;
    std::vector<WallDoc> walls;
    int chamber_count = 1;
    int chamber_count_by_vectors = 1;
    bool counts_disagree = false;
    bool lagrangian_unique = true;
    std::vector<std::string> faults;
    FmDoc fm_partner;

    friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

inline FmDoc make_fm_doc(const SurfaceParams& p) {
    FmPartnerReport r = fm_report(p);
    return FmDoc{r.u,           r.partner_degree,    r.bezout.A,         r.bezout.B,
                 bezout_coset_rule(), r.ns_generator_vector, r.twist_order, r.bm.curve_coeff,
                 r.bm.curve_square, BmClass::s_marker};
}

inline WallDoc make_wall_doc(const Wall& wall) {
    WallDoc doc;
    doc.gamma = fraction_string(wall.gamma);
    std::vector<const WallCandidate*> reps;
    for (const WallCandidate& c : wall.representatives) reps.push_back(&c);
    std::sort(reps.begin(), reps.end(), [](auto* x, auto* y) { return x->w < y->w; });
    for (const WallCandidate* c : reps) {
        doc.vectors.push_back(c->w);
        doc.j_values.push_back(c->j);
        doc.branches.push_back(to_string(c->branch));
    }
    doc.kind = to_string(wall.kind);
    if (wall.certificate)
        doc.certificate = CertificateDoc{to_string(wall.certificate->type), wall.certificate->vector,
                                         wall.certificate->pairing_with_v};
    doc.center = fraction_string(wall.semicircle.center);
    doc.radius_sq = fraction_string(wall.semicircle.radius_sq);
    doc.y0_sq = fraction_string(wall.y0_sq);
    doc.lattice_saturated = wall.saturated;
    doc.representatives_share_lattice = std::all_of(wall.in_lattice.begin(), wall.in_lattice.end(), [](bool b) { return b; });
    return doc;
}

inline AnalysisDocument make_analysis_document(const SurfaceParams& p, const InputEcho& echo,
                                               const SearchOptions& opts = {}) {
    ChamberReport rep = chamber_report(p, opts);
    AnalysisDocument doc;
    doc.input = echo;
    doc.positive_j_lower = to_string(opts.positive_j_lower);
    auto cone = movable_cone(p);
    doc.cone_first = cone.first;
    doc.cone_second = cone.second;
    doc.fibration_divisor = fibration_divisor(p);
    doc.bound_k = fraction_string(rep.bound_k);
    for (const Wall& w : rep.walls) doc.walls.push_back(make_wall_doc(w));
    doc.chamber_count = rep.chamber_count;
    doc.chamber_count_by_vectors = rep.chamber_count_by_vectors;
    doc.counts_disagree = rep.chamber_count != rep.chamber_count_by_vectors;
    doc.lagrangian_unique = rep.lagrangian_unique;
    doc.faults = rep.faults;
    doc.fm_partner = make_fm_doc(p);
    return doc;
}

inline InputEcho echo_triple(const SurfaceParams& p) {
    return {"triple", p.Delta, p.h, p.k, p.d, p.N, 2 * p.d, p.N + 1};
}

inline InputEcho echo_degree_points(const SurfaceParams& p) {
    InputEcho e = echo_triple(p);
    e.mode = "degree-points";
    return e;
}

inline nlohmann::json to_json_value(const AnalysisDocument& doc) {
    using nlohmann::json;
    json j;
    j["schema_version"] = doc.schema_version;
    j["input"] = {{"mode", doc.input.mode},
                  {"delta", integer_json(doc.input.Delta)},
                  {"h", integer_json(doc.input.h)},
                  {"k", integer_json(doc.input.k)},
                  {"d", integer_json(doc.input.d)},
                  {"N", integer_json(doc.input.N)},
                  {"degree", integer_json(doc.input.degree)},
                  {"points", integer_json(doc.input.points)}};
    j["syz"] = doc.syz;
    j["positive_j_lower"] = doc.positive_j_lower;
    j["movable_cone"] = json::array({doc.cone_first, doc.cone_second});
    j["fibration_divisor"] = doc.fibration_divisor;
    j["bound_k"] = doc.bound_k;
    json walls = json::array();
    for (const WallDoc& w : doc.walls) {
        json jw;
        jw["gamma"] = w.gamma;
        jw["vectors"] = w.vectors;
        json js = json::array();
        for (const Integer& x : w.j_values) js.push_back(integer_json(x));
        jw["j"] = js;
        jw["branches"] = w.branches;
        jw["kind"] = w.kind;
        if (w.certificate)
            jw["certificate"] = {{"type", w.certificate->type},
                                 {"vector", w.certificate->vector},
                                 {"pairing_with_v", integer_json(w.certificate->pairing_with_v)}};
        else
            jw["certificate"] = nullptr;
        jw["semicircle"] = {{"center", w.center}, {"radius_sq", w.radius_sq}};
        jw["y0_sq"] = w.y0_sq;
        jw["lattice_saturated"] = w.lattice_saturated;
        jw["representatives_share_lattice"] = w.representatives_share_lattice;
        walls.push_back(jw);
    }
    j["walls"] = walls;
    j["chamber_count"] = doc.chamber_count;
    j["chamber_count_by_vectors"] = doc.chamber_count_by_vectors;
    j["counts_disagree"] = doc.counts_disagree;
    j["lagrangian_unique"] = doc.lagrangian_unique;
    j["faults"] = doc.faults;
    const FmDoc& f = doc.fm_partner;
    j["fm_partner"] = {{"u", f.u},
                       {"partner_degree", integer_json(f.partner_degree)},
                       {"bezout", {{"A", integer_json(f.A)}, {"B", integer_json(f.B)}, {"rule", f.coset_rule}}},
                       {"ns_generator_vector", f.ns_generator},
                       {"twist_order", integer_json(f.twist_order)},
                       {"bm_class", {{"curve_coeff", integer_json(f.bm_curve_coeff)},
                                     {"curve_square", integer_json(f.bm_curve_square)},
                                     {"s", f.bm_s}}}};
    return j;
}

inline AnalysisDocument analysis_from_json(const nlohmann::json& j) {
    AnalysisDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    const auto& in = j.at("input");
    doc.input = {in.at("mode").get<std::string>(), integer_from_json(in.at("delta")), integer_from_json(in.at("h")),
                 integer_from_json(in.at("k")),    integer_from_json(in.at("d")),     integer_from_json(in.at("N")),
                 integer_from_json(in.at("degree")), integer_from_json(in.at("points"))};
    doc.syz = j.at("syz").get<bool>();
    doc.positive_j_lower = j.at("positive_j_lower").get<std::string>();
    doc.cone_first = j.at("movable_cone").at(0).get<NsRay>();
    doc.cone_second = j.at("movable_cone").at(1).get<NsRay>();
    doc.fibration_divisor = j.at("fibration_divisor").get<NsRay>();
    doc.bound_k = j.at("bound_k").get<std::string>();
    for (const auto& jw : j.at("walls")) {
        WallDoc w;
        w.gamma = jw.at("gamma").get<std::string>();
        w.vectors = jw.at("vectors").get<std::vector<MukaiVector>>();
        for (const auto& x : jw.at("j")) w.j_values.push_back(integer_from_json(x));
        w.branches = jw.at("branches").get<std::vector<std::string>>();
        w.kind = jw.at("kind").get<std::string>();
        if (!jw.at("certificate").is_null()) {
            const auto& c = jw.at("certificate");
            w.certificate = CertificateDoc{c.at("type").get<std::string>(), c.at("vector").get<MukaiVector>(),
                                           integer_from_json(c.at("pairing_with_v"))};
        }
        w.center = jw.at("semicircle").at("center").get<std::string>();
        w.radius_sq = jw.at("semicircle").at("radius_sq").get<std::string>();
        w.y0_sq = jw.at("y0_sq").get<std::string>();
        w.lattice_saturated = jw.at("lattice_saturated").get<bool>();
        w.representatives_share_lattice = jw.at("representatives_share_lattice").get<bool>();
        doc.walls.push_back(std::move(w));
    }
    doc.chamber_count = j.at("chamber_count").get<int>();
    doc.chamber_count_by_vectors = j.at("chamber_count_by_vectors").get<int>();
    doc.counts_disagree = j.at("counts_disagree").get<bool>();
    doc.lagrangian_unique = j.at("lagrangian_unique").get<bool>();
    doc.faults = j.at("faults").get<std::vector<std::string>>();
    const auto& f = j.at("fm_partner");
    doc.fm_partner = FmDoc{f.at("u").get<MukaiVector>(),
                           integer_from_json(f.at("partner_degree")),
                           integer_from_json(f.at("bezout").at("A")),
                           integer_from_json(f.at("bezout").at("B")),
                           f.at("bezout").at("rule").get<std::string>(),
                           f.at("ns_generator_vector").get<MukaiVector>(),
                           integer_from_json(f.at("twist_order")),
                           integer_from_json(f.at("bm_class").at("curve_coeff")),
                           integer_from_json(f.at("bm_class").at("curve_square")),
                           f.at("bm_class").at("s").get<std::string>()};
    return doc;
}

inline nlohmann::json syz_failure_json(const Integer& d, const Integer& N, const SyzFailure& f) {
    return {{"schema_version", kSchemaVersion},
            {"input", {{"mode", "degree-points"},
                       {"d", integer_json(d)},
                       {"N", integer_json(N)},
                       {"degree", integer_json(2 * d)},
                       {"points", integer_json(N + 1)}}},
            {"syz", false},
            {"dN", integer_json(f.product)},
            {"squarefree_part", integer_json(f.squarefree)}};
}

inline std::string render_analysis_text(const AnalysisDocument& doc) {
    std::ostringstream os;
    const InputEcho& in = doc.input;
    os << "Hilbert scheme of " << in.points << " points on a K3 surface of degree " << in.degree << "\n";
    os << "  Delta=" << in.Delta << "  h=" << in.h << "  k=" << in.k << "  d=" << in.d << "  N=" << in.N << "\n";
    os << "  SYZ: d*N = " << Integer(in.d * in.N) << " is a perfect square\n";
    os << "  movable cone: <" << doc.cone_first.str() << ", " << doc.cone_second.str() << "> in (H~, B) coordinates\n";
    os << "  fibration divisor: " << doc.fibration_divisor.coeff_htilde << " H~ " << (doc.fibration_divisor.coeff_b < 0 ? "- " : "+ ")
       << abs_of(doc.fibration_divisor.coeff_b) << " B\n";
    os << "  wall-free for k >= " << display_string(parse_rational(doc.bound_k)) << "\n\n";
    if (doc.walls.empty()) {
        os << "No interior walls.\n";
    } else {
        os << std::left << std::setw(12) << "Gamma" << std::setw(16) << "w" << std::setw(6) << "j" << std::setw(15)
           << "branch" << std::setw(12) << "kind" << std::setw(10) << "y0^2" << "certificate\n";
        for (const WallDoc& w : doc.walls) {
            for (std::size_t i = 0; i < w.vectors.size(); ++i) {
                std::string cert;
                if (i == 0 && w.certificate)
                    cert = w.certificate->type + " " + w.certificate->vector.str() + " p=" + w.certificate->pairing_with_v.str();
                os << std::setw(12) << (i == 0 ? display_string(parse_rational(w.gamma)) : "") << std::setw(16)
                   << w.vectors[i].str() << std::setw(6) << w.j_values[i].str() << std::setw(15) << w.branches[i]
                   << std::setw(12) << (i == 0 ? w.kind : "") << std::setw(10)
                   << (i == 0 ? display_string(parse_rational(w.y0_sq)) : "") << cert << "\n";
            }
        }
    }
    os << "\nchambers: " << doc.chamber_count << " (distinct Gamma), " << doc.chamber_count_by_vectors
       << " (vectors as walls)";
    if (doc.counts_disagree) os << "  <-- counting policies disagree";
    os << "\n";
    os << "Lagrangian fibration on the Hilbert scheme itself (single chamber): "
       << (doc.lagrangian_unique ? "yes" : "no") << "\n";
    for (const std::string& f : doc.faults) os << "FAULT: " << f << "\n";
    const FmDoc& f = doc.fm_partner;
    os << "\nFourier-Mukai partner: u = " << f.u.str() << ", degree " << f.partner_degree << ", twist order "
       << f.twist_order << "\n";
    os << "  (A, B) = (" << f.A << ", " << f.B << ")  [" << f.coset_rule << "]\n";
    os << "  NS generator preimage " << f.ns_generator.str() << "\n";
    os << "  Beauville-Mukai class (0, " << f.bm_curve_coeff << " H', s), C^2 = " << f.bm_curve_square
       << ", s " << f.bm_s << "\n";
    return os.str();
}

struct ScanRow {
    Integer k;
    std::size_t walls = 0;           // candidate vectors
    std::size_t distinct_gamma = 0;  // walls as rays
    int chambers = 1;
    int chambers_by_vectors = 1;
    std::vector<MukaiVector> vectors;  // Gamma ascending, then lexicographic
    std::vector<std::string> faults;
};

inline ScanRow scan_row(const SurfaceParams& p, const SearchOptions& opts = {}) {
    ChamberReport rep = chamber_report(p, opts);
    ScanRow row;
    row.k = p.k;
    row.walls = rep.vector_count();
    row.distinct_gamma = rep.walls.size();
    row.chambers = rep.chamber_count;
    row.chambers_by_vectors = rep.chamber_count_by_vectors;
    for (const Wall& w : rep.walls)
        for (const WallCandidate& c : w.representatives) row.vectors.push_back(c.w);
    row.faults = rep.faults;
    return row;
}

/// One row per admissible k in [1, k_max]. Rows are computed on up to `threads`
/// workers; the result order does not depend on the thread count.
inline std::vector<ScanRow> scan(const Integer& Delta, const Integer& h, const Integer& k_max,
                                 const SearchOptions& opts = {}, unsigned threads = 1) {
    std::vector<SurfaceParams> params;
    for (Integer k = 1; k <= k_max; ++k)
        if (gcd_of(h, k) == 1) params.push_back(from_triple(Delta, h, k));
    std::vector<ScanRow> rows(params.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < params.size(); ++i) rows[i] = scan_row(params[i], opts);
        return rows;
    }
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < params.size(); i += threads) rows[i] = scan_row(params[i], opts);
        }));
    }
    for (auto& f : workers) f.get();
    return rows;
}

inline std::string vectors_field(const std::vector<MukaiVector>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ";" : "") + vs[i].str();
    return out;
}

inline std::string render_scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "k,walls,distinct_gamma,chambers,vectors\n";
    for (const ScanRow& r : rows) {
        out += r.k.str() + "," + std::to_string(r.walls) + "," + std::to_string(r.distinct_gamma) + "," +
               std::to_string(r.chambers) + ",\"" + vectors_field(r.vectors) + "\"\n";
    }
    return out;
}

inline nlohmann::json scan_json(const Integer& Delta, const Integer& h, const Integer& k_max,
                                const std::vector<ScanRow>& rows, const SearchOptions& opts = {}) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["delta"] = integer_json(Delta);
    j["h"] = integer_json(h);
    j["k_max"] = integer_json(k_max);
    j["positive_j_lower"] = to_string(opts.positive_j_lower);
    nlohmann::json jr = nlohmann::json::array();
    for (const ScanRow& r : rows) {
        jr.push_back({{"k", integer_json(r.k)},
                      {"walls", r.walls},
                      {"distinct_gamma", r.distinct_gamma},
                      {"chambers", r.chambers},
                      {"chambers_by_vectors", r.chambers_by_vectors},
                      {"vectors", r.vectors},
                      {"faults", r.faults}});
    }
    j["rows"] = jr;
    return j;
}

inline std::string render_scan_text(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "k" << std::setw(8) << "walls" << std::setw(10) << "#Gamma" << std::setw(10)
       << "chambers" << std::setw(12) << "by vectors" << "w\n";
    for (const ScanRow& r : rows) {
        os << std::setw(6) << r.k.str() << std::setw(8) << r.walls << std::setw(10) << r.distinct_gamma
           << std::setw(10) << r.chambers << std::setw(12) << r.chambers_by_vectors << vectors_field(r.vectors)
           << "\n";
        for (const std::string& f : r.faults) os << "      FAULT: " << f << "\n";
    }
    return os.str();
}

inline std::string render_min_k_text(const Integer& Delta, const Integer& h, const MinimalClearK& m) {
    std::ostringstream os;
    os << "Delta=" << Delta << " h=" << h << "\n";
    os << "k0 = " << m.k0 << "  d0 = " << m.d0 << "  degree 2*d0 = " << Integer(2 * m.d0) << "\n";
    os << "scanned up to k = " << ceil_of(sufficient_k_bound(Delta, h)) << " (bound "
       << display_string(sufficient_k_bound(Delta, h)) << ")\n";
    os << std::left << std::setw(6) << "k" << "walls\n";
    for (const auto& row : m.per_k) os << std::setw(6) << row.k.str() << row.wall_count << "\n";
    return os.str();
}

inline nlohmann::json min_k_json(const Integer& Delta, const Integer& h, const MinimalClearK& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.per_k) rows.push_back({{"k", integer_json(row.k)}, {"walls", row.wall_count}});
    return {{"schema_version", kSchemaVersion},
            {"delta", integer_json(Delta)},
            {"h", integer_json(h)},
            {"k0", integer_json(m.k0)},
            {"d0", integer_json(m.d0)},
            {"degree", integer_json(2 * m.d0)},
            {"bound_k", fraction_string(sufficient_k_bound(Delta, h))},
            {"per_k", rows}};
}

inline std::string render_fm_text(const SurfaceParams& p, const FmDoc& f) {
    std::ostringstream os;
    os << "Delta=" << p.Delta << " h=" << p.h << " k=" << p.k << "\n";
    os << "u = " << f.u.str() << "  (u^2 = 0, primitive)\n";
    os << "partner degree 2*Delta = " << f.partner_degree << "\n";
    os << "Bezout pair (A, B) = (" << f.A << ", " << f.B << ")  [" << f.coset_rule << "]\n";
    os << "NS generator preimage " << f.ns_generator.str() << "  (orthogonal to u, square " << f.partner_degree
       << ")\n";
    os << "twist order " << f.twist_order << "\n";
    os << "Beauville-Mukai class (0, " << f.bm_curve_coeff << " H', s) with C^2 = " << f.bm_curve_square << ", s "
       << f.bm_s << "\n";
    return os.str();
}

inline nlohmann::json fm_json(const SurfaceParams& p, const FmDoc& f) {
    return {{"schema_version", kSchemaVersion},
            {"delta", integer_json(p.Delta)},
            {"h", integer_json(p.h)},
            {"k", integer_json(p.k)},
            {"u", f.u},
            {"partner_degree", integer_json(f.partner_degree)},
            {"bezout", {{"A", integer_json(f.A)}, {"B", integer_json(f.B)}, {"rule", f.coset_rule}}},
            {"ns_generator_vector", f.ns_generator},
            {"twist_order", integer_json(f.twist_order)},
            {"bm_class", {{"curve_coeff", integer_json(f.bm_curve_coeff)},
                          {"curve_square", integer_json(f.bm_curve_square)},
                          {"s", f.bm_s}}}};
}

}  // namespace hilbwalls
