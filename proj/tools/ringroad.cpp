#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringroad/bounds.hpp"
#include "ringroad/cut_system.hpp"
#include "ringroad/search.hpp"
#include "ringroad/serialize.hpp"
#include "ringroad/transition.hpp"

namespace {

using nlohmann::json;

struct Range {
    std::int64_t lo = 0, hi = 0;
};

// "12" or "3..10"
Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(s);
    } else {
        r.lo = std::stoll(s.substr(0, dots));
        r.hi = std::stoll(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range " + s);
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit(const json& j, const std::optional<std::string>& out_path) {
    if (out_path)
        write_text(*out_path, j.dump(2) + "\n");
    else
        std::cout << j.dump(2) << "\n";
}

int default_jobs() {
    if (const char* env = std::getenv("RINGROAD_JOBS")) return std::max(1, std::atoi(env));
    return 1;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

int run_verify(const std::string& path) {
    const ringroad::VerifyOutcome out = ringroad::verify_file(load_json(path));
    if (out.ok) {
        std::cout << path << ": OK\n";
        return 0;
    }
    std::cout << path << ": FAILED\n";
    for (const std::string& d : out.diffs) std::cout << "  " << d << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-genus cyclically symmetric complete interchanges"};
    app.require_subcommand(1);

    std::string n_arg, in_path;
    std::optional<std::string> out_path;
    std::string format = "table";
    bool no_ham = false, no_reduce = false, allow_big = false;
    int jobs = default_jobs();
    std::optional<std::string> checkpoint, svg_path, dot_path;
    bool with_search = false;

    auto* bounds = app.add_subcommand("bounds", "evaluate the genus bounds over a range of n");
    bounds->add_option("--n", n_arg, "n or range a..b")->required();
    bounds->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    bounds->add_option("--out", out_path, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "optimal symmetric construction for K_{n,n}");
    construct->add_option("--n", n_arg, "n >= 3")->required();
    construct->add_option("--out", out_path, "output JSON file");

    auto* construct3d = app.add_subcommand("construct3d", "optimal 3-dimensional cut system");
    construct3d->add_option("--n", n_arg, "n >= 2")->required();
    construct3d->add_option("--out", out_path, "output JSON file");

    auto* verify = app.add_subcommand("verify", "recompute the claims in a construction file");
    verify->add_option("file", in_path, "construction JSON")->required();

    auto* verify3d = app.add_subcommand("verify3d", "recompute the claims in a cut-system file");
    verify3d->add_option("file", in_path, "construction3d JSON")->required();

    auto* search = app.add_subcommand("search", "exhaustive minimum-genus search");
    search->add_option("--n", n_arg, "3 <= n <= 9")->required();
    search->add_flag("--no-ham", no_ham, "drop the Hamiltonian-face filter");
    search->add_flag("--no-reduce", no_reduce, "disable symmetry reduction");
    search->add_option("--jobs", jobs, "worker threads (or RINGROAD_JOBS)");
    search->add_flag("--allow-big", allow_big, "permit n = 9");
    search->add_option("--checkpoint", checkpoint, "progress file");
    search->add_option("--out", out_path, "output JSON file");

    auto* exp = app.add_subcommand("export", "DOT / SVG exports of a construction");
    exp->add_option("--n", n_arg, "n >= 3")->required();
    exp->add_option("--svg", svg_path, "transition-graph schematic");
    exp->add_option("--dot", dot_path, "derived K_{n,n} in DOT");

    auto* report = app.add_subcommand("report", "summary table per n");
    report->add_option("--n", n_arg, "n or range a..b")->required();
    report->add_flag("--search", with_search, "include exhaustive minima (n <= 8)");
    report->add_option("--jobs", jobs, "worker threads for --search");
    report->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed()) {
            const Range r = parse_range(n_arg);
            json rows = json::array();
            for (std::int64_t n = r.lo; n <= r.hi; ++n) {
                const ringroad::BoundsReport b = ringroad::bounds_report(n);
                json row = {{"n", b.n},
                            {"l_c", b.l_c},
                            {"branch", to_string(b.branch_l_c)},
                            {"l_c_star", b.l_c_star},
                            {"l_c_star_attainable", b.l_c_star_attainable},
                            {"l_c_star_tilde", b.l_c_star_tilde},
                            {"p1", b.p1}};
                if (b.pq) row["pq"] = {b.pq->first, b.pq->second};
                if (b.g1g2) row["g1g2"] = {b.g1g2->first, b.g1g2->second};
                if (b.n4_exception) row["n4_exception"] = true;
                rows.push_back(std::move(row));
            }
            if (format == "json") {
                emit(rows, out_path);
            } else {
                std::ostringstream os;
                os << "  n      L_C     L_C*    ~L_C*  branch\n";
                for (const auto& row : rows) {
                    os << std::setw(3) << row["n"].get<std::int64_t>() << std::setw(9)
                       << row["l_c"].get<std::int64_t>() << std::setw(9)
                       << row["l_c_star"].get<std::int64_t>() << std::setw(9)
                       << row["l_c_star_tilde"].get<std::int64_t>() << "  "
                       << row["branch"].get<std::string>();
                    if (row.contains("n4_exception")) os << "  (attainable 4)";
                    os << "\n";
                }
                if (out_path)
                    write_text(*out_path, os.str());
                else
                    std::cout << os.str();
            }
        } else if (construct->parsed()) {
            const std::int64_t n = parse_range(n_arg).lo;
            emit(ringroad::construction_file(ringroad::construct_optimal_tg(n)), out_path);
        } else if (construct3d->parsed()) {
            const std::int64_t n = parse_range(n_arg).lo;
            const ringroad::Construct3d c = ringroad::construct_3d(n);
            if (c.n4_exception)
                std::cerr << "note: n = 4 is exceptional; the bound 3 is not attainable and the "
                             "emitted witness has genus 4\n";
            emit(ringroad::construction3d_file(c), out_path);
        } else if (verify->parsed() || verify3d->parsed()) {
            return run_verify(in_path);
        } else if (search->parsed()) {
            const int n = static_cast<int>(parse_range(n_arg).lo);
            ringroad::SearchOptions opts;
            opts.require_ham = !no_ham;
            opts.symmetry_reduction = !no_reduce;
            opts.jobs = jobs;
            opts.allow_big = allow_big;
            if (checkpoint) opts.checkpoint_path = *checkpoint;
            emit(to_json(ringroad::enumerate_min_genus(n, opts)), out_path);
        } else if (exp->parsed()) {
            const std::int64_t n = parse_range(n_arg).lo;
            const ringroad::TransitionGraph tg = ringroad::construct_optimal_tg(n);
            if (svg_path) write_text(*svg_path, ringroad::to_svg(tg));
            if (dot_path)
                write_text(*dot_path,
                           ringroad::to_dot(ringroad::derive_graph(ringroad::tg_to_voltage(tg))));
            if (!svg_path && !dot_path) std::cout << ringroad::to_svg(tg);
        } else if (report->parsed()) {
            const Range r = parse_range(n_arg);
            std::ostringstream os;
            os << "  n      L_C  construction   search     L_C*  3d-construction\n";
            for (std::int64_t n = r.lo; n <= r.hi; ++n) {
                os << std::setw(3) << n;
                if (n >= 3) {
                    const ringroad::VoltageGraph vg = ringroad::construct_optimal_symmetric(n);
                    os << std::setw(9) << ringroad::l_c(n).genus << std::setw(14)
                       << ringroad::derived_genus_from_base(vg);
                } else {
                    os << std::setw(9) << "-" << std::setw(14) << "-";
                }
                if (with_search && n >= 3 && n <= 8) {
                    ringroad::SearchOptions opts;
                    opts.jobs = jobs;
                    os << std::setw(9)
                       << ringroad::enumerate_min_genus(static_cast<int>(n), opts).min_genus;
                } else {
                    os << std::setw(9) << "-";
                }
                const ringroad::Construct3d c = ringroad::construct_3d(n);
                os << std::setw(9) << ringroad::l_c_star(n) << std::setw(17) << c.rh;
                if (c.n4_exception) os << "  (exception: bound 3 unattainable)";
                os << "\n";
            }
            if (out_path)
                write_text(*out_path, os.str());
            else
                std::cout << os.str();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
