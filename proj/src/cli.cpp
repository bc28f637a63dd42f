#include "starrad/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "starrad/report_json.hpp"
#include "starrad/svg_plot.hpp"
#include "starrad/version.hpp"

namespace starrad {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::optional<RegionTag> parse_target(const std::string& name) {
    for (RegionTag tag : all_region_tags())
        if (name == region_name(tag)) return tag;
    return std::nullopt;
}

std::vector<ClassId> selected_classes(const RunConfig& config) {
    if (config.cls == "pi1") return {ClassId::Pi1};
    if (config.cls == "pi2") return {ClassId::Pi2};
    return {ClassId::Pi1, ClassId::Pi2};
}

// All (class, region) pairs selected by the config, half-plane expanded per
// alpha, in deterministic (class, region tag, alpha) order.
std::vector<std::pair<ClassId, TargetRegion>> selected_pairs(const RunConfig& config) {
    std::vector<double> alphas = config.alphas;
    std::sort(alphas.begin(), alphas.end());
    std::vector<std::pair<ClassId, TargetRegion>> pairs;
    for (ClassId cls : selected_classes(config)) {
        for (RegionTag tag : all_region_tags()) {
            if (config.target != "all" && config.target != region_name(tag)) continue;
            if (tag == RegionTag::HalfPlane) {
                for (double al : alphas)
                    pairs.emplace_back(cls, TargetRegion::half_plane(al));
            } else {
                pairs.emplace_back(cls, TargetRegion::make(tag));
            }
        }
    }
    return pairs;
}

int write_output(const RunConfig& config, const std::string& text) {
    if (config.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(config.out, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file " << config.out << "\n";
        return kExitIo;
    }
    os << text;
    if (!os) {
        std::cerr << "error: failed writing " << config.out << "\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string alpha_cell(const TargetRegion& region) {
    return region.tag == RegionTag::HalfPlane ? fmt17(region.alpha) : std::string();
}

std::string render_table_csv(const std::vector<RadiusResult>& rows) {
    std::ostringstream os;
    os << "class,target,alpha,closed_form,solved,abs_diff,sharp,equation\n";
    for (const RadiusResult& row : rows) {
        os << class_name(row.cls) << "," << region_symbol(row.region.tag) << ","
           << alpha_cell(row.region) << "," << fmt17(row.closed_form) << ","
           << fmt17(row.solved) << "," << fmt17(std::abs(row.closed_form - row.solved))
           << "," << (row.sharp ? "true" : "false") << "," << row.equation << "\n";
    }
    return os.str();
}

std::string render_table_md(const std::vector<RadiusResult>& rows) {
    std::ostringstream os;
    os << "| class | target | alpha | closed_form | solved | abs_diff | sharp | equation |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const RadiusResult& row : rows) {
        os << "| " << class_name(row.cls) << " | " << region_symbol(row.region.tag)
           << " | " << alpha_cell(row.region) << " | " << fmt17(row.closed_form)
           << " | " << fmt17(row.solved) << " | "
           << fmt17(std::abs(row.closed_form - row.solved)) << " | "
           << (row.sharp ? "true" : "false") << " | " << row.equation << " |\n";
    }
    return os.str();
}

std::string render_table_json(const std::vector<RadiusResult>& rows) {
    nlohmann::json doc;
    doc["version"] = std::string(kVersion);
    nlohmann::json list = nlohmann::json::array();
    for (const RadiusResult& row : rows) list.push_back(to_json(row));
    doc["rows"] = list;
    return doc.dump(2) + "\n";
}

}  // namespace

int cmd_table(const RunConfig& config) {
    std::vector<RadiusResult> rows;
    try {
        for (ClassId cls : selected_classes(config)) {
            for (RadiusResult& row : radius_table(cls, config.alphas)) {
                if (config.target != "all" &&
                    config.target != region_name(row.region.tag))
                    continue;
                rows.push_back(std::move(row));
            }
        }
    } catch (const NoSignChangeError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }

    std::string text;
    if (config.format == "csv")
        text = render_table_csv(rows);
    else if (config.format == "md")
        text = render_table_md(rows);
    else
        text = render_table_json(rows);
    const int io = write_output(config, text);
    if (io != kExitOk) return io;

    for (const RadiusResult& row : rows)
        if (std::abs(row.closed_form - row.solved) > 1e-9)
            return kExitVerificationFailed;
    return kExitOk;
}

int cmd_verify(const RunConfig& config) {
    const VerifyTolerances tol = config.tolerances();
    std::vector<VerificationReport> reports;
    bool all_pass = true;
    for (const auto& [cls, region] : selected_pairs(config)) {
        try {
            reports.push_back(cross_validate(cls, region, config.samples, tol));
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.cls = cls;
            rep.function_id = extremal_function(cls);
            rep.region = region;
            rep.tolerances = tol;
            rep.pass = false;
            rep.failures.push_back(e.what());
            reports.push_back(std::move(rep));
        }
        all_pass = all_pass && reports.back().pass;
    }
    const nlohmann::json doc = make_run_report(reports, config.seed, tol);
    const int io = write_output(config, doc.dump(2) + "\n");
    if (io != kExitOk) return io;
    return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_plot(const RunConfig& config) {
    if (config.cls == "all" || config.target == "all") {
        std::cerr << "error: plot requires one --class and one --target\n";
        return kExitBadArguments;
    }
    const std::optional<RegionTag> tag = parse_target(config.target);
    if (!tag) {
        std::cerr << "error: unknown target " << config.target << "\n";
        return kExitBadArguments;
    }
    const ClassId cls = config.cls == "pi1" ? ClassId::Pi1 : ClassId::Pi2;
    const TargetRegion region = *tag == RegionTag::HalfPlane
                                    ? TargetRegion::half_plane(config.alphas.front())
                                    : TargetRegion::make(*tag);
    const std::string svg = render_region_plot(cls, region, config.samples);

    RunConfig out_config = config;
    if (out_config.out.empty()) {
        std::ostringstream name;
        name << "plot_" << config.cls << "_" << config.target << ".svg";
        out_config.out = name.str();
    }
    return write_output(out_config, svg);
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"radii of starlikeness for ratio-defined analytic function classes"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "",
                   "key=value configuration file; command-line flags take precedence");
    app.require_subcommand(1);

    // options live on the root app and fall through from the subcommands, so
    // they can be given on either side of the subcommand name and picked up
    // from the config file as plain keys
    RunConfig config;
    app.add_option("--class", config.cls, "function class: pi1, pi2 or all")
        ->check(CLI::IsMember({"pi1", "pi2", "all"}))
        ->capture_default_str();
    app.add_option("--target", config.target,
                   "target region: halfplane, lemniscate, parabolic, exp, "
                   "cardioid, sine, lune, rational or all")
        ->check(CLI::IsMember({"halfplane", "lemniscate", "parabolic", "exp",
                               "cardioid", "sine", "lune", "rational", "all"}))
        ->capture_default_str();
    app.add_option("--alpha", config.alphas, "half-plane orders in [0, 1)")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 0.9999999))
        ->capture_default_str();
    app.add_option("--samples", config.samples, "boundary sample count (>= 360)")
        ->check(CLI::Range(360, 1 << 22))
        ->capture_default_str();
    app.add_option("--tol", config.solver_tol, "solver bisection tolerance")
        ->check(CLI::Range(1e-15, 1e-6))
        ->capture_default_str();
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->capture_default_str();
    app.add_option("--out", config.out, "output path (default: stdout)");
    app.add_option("--seed", config.seed, "seed recorded in report metadata")
        ->capture_default_str();

    CLI::App* table = app.add_subcommand("table", "closed-form and solved radius table");
    table->fallthrough();
    CLI::App* verify = app.add_subcommand("verify", "cross-validation report (JSON)");
    verify->fallthrough();
    CLI::App* plot = app.add_subcommand("plot", "SVG of a region and image curves");
    plot->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help / --version
            app.exit(e);
            return kExitOk;
        }
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (table->parsed()) return cmd_table(config);
        if (verify->parsed()) {
            config.plot = false;
            return cmd_verify(config);
        }
        config.plot = true;
        return cmd_plot(config);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace starrad
