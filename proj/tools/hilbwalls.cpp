// hilbwalls: walls, chambers and Lagrangian fibrations for Hilbert schemes of
// points on Picard rank one K3 surfaces.
//
// Exit codes: 0 success, 2 invalid input, 3 d*N not a perfect square, 4 I/O failure.

#include "hilbwalls/hilbwalls.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitSyz = 3;
constexpr int kExitIo = 4;

using hilbwalls::Integer;

struct TripleFlags {
    std::optional<std::int64_t> delta, h, k;

    void add(CLI::App* cmd) {
        cmd->add_option("--delta", delta, "Delta, with H^2 = 2 Delta k^2")->check(CLI::PositiveNumber);
        cmd->add_option("--h", h, "h, with N + 1 = Delta h^2 + 1 points")->check(CLI::PositiveNumber);
        cmd->add_option("--k", k, "k, coprime to h")->check(CLI::PositiveNumber);
    }
    bool complete() const { return delta && h && k; }
    bool any() const { return delta || h || k; }
    hilbwalls::SurfaceParams params() const { return hilbwalls::from_triple(*delta, *h, *k); }
};

std::optional<hilbwalls::PositiveJLower> j_rule(const std::string& text) {
    return hilbwalls::parse_positive_j_lower(text);
}

int fail(const std::string& msg, int code) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walls in the movable cone of Hilbert schemes of points on K3 surfaces"};
    app.require_subcommand(1);
    // --h is a parameter, so help is long-form only; subcommands inherit this.
    app.set_help_flag("--help", "Print this help message and exit");

    std::string positive_j_lower = "2wsq+1";
    auto add_rule = [&](CLI::App* cmd) {
        cmd->add_option("--positive-j-lower", positive_j_lower,
                        "Lower end of (w,v) for positive-pair classes: 2wsq+1 (default) or wsq+1")
            ->check(CLI::IsMember({"2wsq+1", "wsq+1"}));
    };

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Walls, chambers and partner data for one surface");
    TripleFlags analyze_triple;
    analyze_triple.add(analyze);
    std::optional<std::int64_t> degree, points;
    analyze->add_option("--degree", degree, "H^2 = 2d (even)")->check(CLI::PositiveNumber);
    analyze->add_option("--points", points, "number of points N + 1 (>= 2)")->check(CLI::PositiveNumber);
    bool analyze_json = false;
    analyze->add_flag("--json", analyze_json, "structured output");
    add_rule(analyze);

    // scan
    auto* scan = app.add_subcommand("scan", "Per-k table of walls for fixed Delta and h");
    std::int64_t scan_delta = 0, scan_h = 0, k_max = 0;
    scan->add_option("--delta", scan_delta)->required()->check(CLI::PositiveNumber);
    scan->add_option("--h", scan_h)->required()->check(CLI::PositiveNumber);
    scan->add_option("--k-max", k_max)->required()->check(CLI::PositiveNumber);
    bool scan_csv = false, scan_json = false;
    scan->add_flag("--csv", scan_csv, "CSV output");
    scan->add_flag("--json", scan_json, "JSON output");
    unsigned threads = 1;
    scan->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    add_rule(scan);

    // min-k
    auto* min_k = app.add_subcommand("min-k", "Smallest k from which the movable cone has one chamber");
    std::int64_t mk_delta = 0, mk_h = 0;
    min_k->add_option("--delta", mk_delta)->required()->check(CLI::PositiveNumber);
    min_k->add_option("--h", mk_h)->required()->check(CLI::PositiveNumber);
    bool min_k_json = false;
    min_k->add_flag("--json", min_k_json, "structured output");
    add_rule(min_k);

    // fm
    auto* fm = app.add_subcommand("fm", "Fourier-Mukai partner data");
    TripleFlags fm_triple;
    fm_triple.add(fm);
    bool fm_json = false;
    fm->add_flag("--json", fm_json, "structured output");

    // plot
    auto* plot = app.add_subcommand("plot", "SVG of the walls in the (x, y) stability slice");
    TripleFlags plot_triple;
    plot_triple.add(plot);
    std::string out_path;
    plot->add_option("--out", out_path, "output SVG path")->required();
    add_rule(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    hilbwalls::SearchOptions opts;
    opts.positive_j_lower = *j_rule(positive_j_lower);

    try {
        if (*analyze) {
            hilbwalls::SurfaceParams params;
            hilbwalls::InputEcho echo;
            const bool by_degree = degree || points;
            if (by_degree == analyze_triple.any())
                return fail("give exactly one of (--delta --h --k) or (--degree --points)", kExitInvalid);
            if (by_degree) {
                if (!degree || !points) return fail("--degree and --points go together", kExitInvalid);
                if (*degree % 2 != 0) return fail("--degree must be even (H^2 = 2d)", kExitInvalid);
                if (*points < 2) return fail("--points must be at least 2", kExitInvalid);
                const Integer d = *degree / 2, N = *points - 1;
                auto result = hilbwalls::normalize(d, N);
                if (auto* f = std::get_if<hilbwalls::SyzFailure>(&result)) {
                    if (analyze_json)
                        std::cout << hilbwalls::syz_failure_json(d, N, *f).dump(2) << "\n";
                    else
                        std::cout << "d*N = " << f->product << " is not a perfect square (square-free part "
                                  << f->squarefree << "): no rational Lagrangian fibration\n";
                    return kExitSyz;
                }
                params = std::get<hilbwalls::SurfaceParams>(result);
                echo = hilbwalls::echo_degree_points(params);
            } else {
                if (!analyze_triple.complete()) return fail("--delta, --h and --k go together", kExitInvalid);
                params = analyze_triple.params();
                echo = hilbwalls::echo_triple(params);
            }
            auto doc = hilbwalls::make_analysis_document(params, echo, opts);
            if (analyze_json)
                std::cout << hilbwalls::to_json_value(doc).dump(2) << "\n";
            else
                std::cout << hilbwalls::render_analysis_text(doc);
            return kExitOk;
        }

        if (*scan) {
            if (scan_csv && scan_json) return fail("--csv and --json are exclusive", kExitInvalid);
            unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
            auto rows = hilbwalls::scan(scan_delta, scan_h, k_max, opts, n);
            if (scan_json)
                std::cout << hilbwalls::scan_json(scan_delta, scan_h, k_max, rows, opts).dump(2) << "\n";
            else if (scan_csv)
                std::cout << hilbwalls::render_scan_csv(rows);
            else
                std::cout << hilbwalls::render_scan_text(rows);
            return kExitOk;
        }

        if (*min_k) {
            auto m = hilbwalls::minimal_clear_k(mk_delta, mk_h, opts);
            if (min_k_json)
                std::cout << hilbwalls::min_k_json(mk_delta, mk_h, m).dump(2) << "\n";
            else
                std::cout << hilbwalls::render_min_k_text(mk_delta, mk_h, m);
            return kExitOk;
        }

        if (*fm) {
            if (!fm_triple.complete()) return fail("--delta, --h and --k are required", kExitInvalid);
            auto params = fm_triple.params();
            auto doc = hilbwalls::make_fm_doc(params);
            if (fm_json)
                std::cout << hilbwalls::fm_json(params, doc).dump(2) << "\n";
            else
                std::cout << hilbwalls::render_fm_text(params, doc);
            return kExitOk;
        }

        if (*plot) {
            if (!plot_triple.complete()) return fail("--delta, --h and --k are required", kExitInvalid);
            auto params = plot_triple.params();
            auto rep = hilbwalls::chamber_report(params, opts);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) return fail("cannot open " + out_path + " for writing", kExitIo);
            out << hilbwalls::svg_plot(params, rep.walls);
            out.close();
            if (!out) return fail("write to " + out_path + " failed", kExitIo);
            std::cout << rep.walls.size() << " wall(s) written to " << out_path << "\n";
            for (const auto& w : rep.walls)
                std::cout << "  Gamma=" << hilbwalls::display_string(w.gamma) << " " << hilbwalls::to_string(w.kind)
                          << " w=" << w.representatives.front().w << "\n";
            return kExitOk;
        }
    } catch (const hilbwalls::gcd_violation& e) {
        return fail(e.what(), kExitInvalid);
    } catch (const std::invalid_argument& e) {
        return fail(e.what(), kExitInvalid);
    }
    return kExitInvalid;
}
