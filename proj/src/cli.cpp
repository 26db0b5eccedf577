#include "liftwing/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "liftwing/config.hpp"
#include "liftwing/fitting.hpp"
#include "liftwing/optimizer.hpp"
#include "liftwing/reference_models.hpp"
#include "liftwing/report.hpp"

namespace liftwing {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::IoError:
        return kExitIo;
    case ErrorKind::InvalidModel:
    case ErrorKind::AlphaNotOnGrid:
    case ErrorKind::DegenerateDesign:
    case ErrorKind::RankDeficient:
    case ErrorKind::DegenerateVariance:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownUnit:
    case ErrorKind::ConfigError:
        return kExitConfig;
    case ErrorKind::OutOfAeroDomain:
    case ErrorKind::OutOfSurrogateDomain:
    case ErrorKind::OutOfEscDomain:
    case ErrorKind::HoverDegenerate:
    case ErrorKind::AeroInfeasible:
    case ErrorKind::RpmInfeasible:
    case ErrorKind::NoTrimAtSpeed:
    case ErrorKind::EmptyFeasibleSet:
        return kExitInfeasible;
    }
    return kExitConfig;
}

namespace {

enum class Format { Csv, Json, Text };

struct Globals {
    std::string config_path;
    std::string out_dir;
    Format format = Format::Text;
    unsigned jobs = 0;
};

struct TrimArgs {
    double gamma = 0.0;
    std::optional<double> alpha;
    std::optional<double> speed;
};

struct SweepArgs {
    std::optional<double> capacity;
    std::optional<double> capacity_mah;
    std::optional<double> margin;
    std::optional<double> stall;
};

struct FitArgs {
    std::string input;
    std::string target = "thrust";
    std::string basis;
    std::vector<std::string> units;
};

struct CompareArgs {
    std::vector<double> speeds{5.0, 10.0, 15.0};
    std::optional<double> gamma;
};

RunConfig resolve_config(const Globals& g) {
    std::string path = g.config_path;
    if (path.empty())
        if (const char* env = std::getenv("LIFTWING_CONFIG"); env && *env) path = env;
    return path.empty() ? default_config() : load_config(path);
}

unsigned resolve_jobs(const Globals& g) {
    if (g.jobs > 0) return g.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::ofstream open_for_write(const fs::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    return f;
}

void finish_write(std::ofstream& f, const fs::path& path) {
    f.close();
    if (!f) throw Error(ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
    auto f = open_for_write(path);
    writer(f);
    finish_write(f, path);
}

std::string alpha_tag(double alpha) { return format_number(alpha); }

// --- trim / hover ---------------------------------------------------------

void emit_trim(const Globals& g, const TrimPoint& p, std::ostream& out) {
    switch (g.format) {
    case Format::Text: write_trim_text(out, p); break;
    case Format::Json: out << trim_to_json(p).dump(2) << '\n'; break;
    case Format::Csv: write_trim_csv(out, p); break;
    }
    if (!g.out_dir.empty()) {
        const fs::path dir(g.out_dir);
        write_file(dir / "trim.csv", [&](std::ostream& f) { write_trim_csv(f, p); });
        write_file(dir / "trim.json", [&](std::ostream& f) { f << trim_to_json(p).dump(2) << '\n'; });
    }
}

int cmd_trim(const Globals& g, const TrimArgs& a, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = resolve_config(g);
    const TrimPoint p = a.alpha ? solve_trim(cfg.bundle, a.gamma, *a.alpha)
                                : trim_at_speed(cfg.bundle, a.gamma, *a.speed);
    emit_trim(g, p, out);
    if (p.regime == Regime::Hover) {
        err << "error[" << to_string(ErrorKind::HoverDegenerate)
            << "]: gamma equals alpha, so the wing carries no load and there is no forward-flight trim\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

int cmd_hover(const Globals& g, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    emit_trim(g, hover_trim(cfg.bundle), out);
    return kExitOk;
}

// --- sweep ----------------------------------------------------------------

int cmd_sweep(const Globals& g, const SweepArgs& a, std::ostream& out) {
    RunConfig cfg = resolve_config(g);
    if (a.capacity) cfg.bundle.battery.capacity = *a.capacity;
    if (a.capacity_mah) cfg.bundle.battery.capacity = *a.capacity_mah * 3.6;
    if (a.stall) cfg.bundle.airframe.stall_alpha = *a.stall;
    if (a.margin) cfg.bundle.airframe.safety_margin = *a.margin;
    cfg.bundle.battery.validate();
    if (cfg.bundle.airframe.safety_margin >= cfg.bundle.airframe.stall_alpha ||
        cfg.bundle.airframe.safety_margin < 0.0)
        throw Error(ErrorKind::EmptyFeasibleSet, "safety margin leaves no admissible attack angle");

    const SweepResult result = sweep(cfg.bundle, cfg.grid(), resolve_jobs(g));
    const json summary = sweep_summary(result);

    if (!g.out_dir.empty()) {
        const fs::path dir(g.out_dir);
        write_file(dir / "cells.csv", [&](std::ostream& f) { write_cells_csv(f, result); });
        for (std::size_t j = 0; j < result.grid.alpha_count(); ++j) {
            const double alpha = result.grid.alpha_at(j);
            write_file(dir / "curves" / ("alpha_" + alpha_tag(alpha) + ".csv"),
                       [&](std::ostream& f) { write_curve_csv(f, result, alpha); });
        }
        write_file(dir / "summary.json", [&](std::ostream& f) { f << summary.dump(2) << '\n'; });
    }

    switch (g.format) {
    case Format::Json: out << summary.dump(2) << '\n'; break;
    case Format::Csv: write_cells_csv(out, result); break;
    case Format::Text: {
        const TrimPoint& p = result.argmax.point;
        out << "range optimum over " << result.cells.size() << " cells (alpha <= "
            << format_number(result.safety_alpha_cap) << " deg)\n";
        write_trim_text(out, p);
        break;
    }
    }
    return kExitOk;
}

// --- fit ------------------------------------------------------------------

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open input '" + path + "'");
    return in;
}

Basis parse_basis(const std::string& text, const std::string& target) {
    if (text.empty()) return target == "torque" ? reference::torque_basis() : reference::thrust_basis();
    if (text == "quadratic") return reference::thrust_basis();
    if (text == "cubic") return reference::torque_basis();
    Basis basis;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::ConfigError, "basis term '" + item + "' is not <vp_exp>:<rpm_exp>");
        try {
            basis.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ConfigError, "basis term '" + item + "' is not <vp_exp>:<rpm_exp>");
        }
    }
    if (basis.empty()) throw Error(ErrorKind::ConfigError, "empty basis");
    return basis;
}

UnitMap parse_units(const std::vector<std::string>& items) {
    UnitMap units;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::ConfigError, "unit override '" + item + "' is not <column>=<unit>");
        units[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return units;
}

bool is_csv(const std::string& path) { return fs::path(path).extension() == ".csv"; }

void emit_fit(const Globals& g, const json& fragment, const json& report, std::ostream& out) {
    const json doc = {{"config", fragment}, {"report", report}};
    if (g.format == Format::Text) {
        out << "fit report\n" << report.dump(2) << "\nconfig fragment\n" << fragment.dump(2) << '\n';
    } else {
        out << doc.dump(2) << '\n';
    }
    if (!g.out_dir.empty())
        write_file(fs::path(g.out_dir) / "fit.json", [&](std::ostream& f) { f << doc.dump(2) << '\n'; });
}

int cmd_fit_aero(const Globals& g, const FitArgs& a, std::ostream& out) {
    auto in = open_input(a.input);
    const AeroFit fit = fit_linear_aero(parse_csv_table(in));
    emit_fit(g, {{"aero", aero_to_json(fit.model)}},
             {{"lift", fit_report_to_json(fit.lift)}, {"drag", fit_report_to_json(fit.drag)}}, out);
    return kExitOk;
}

int cmd_fit_prop(const Globals& g, const FitArgs& a, std::ostream& out) {
    if (a.target != "thrust" && a.target != "torque")
        throw Error(ErrorKind::ConfigError, "--target must be thrust or torque");
    auto in = open_input(a.input);
    const SampleTable table = is_csv(a.input) ? parse_csv_table(in)
                                              : parse_propeller_table(in, {}, parse_units(a.units));
    const SurrogateFit fit = fit_poly_surrogate(table, parse_basis(a.basis, a.target), a.target);
    const std::string note = "least-squares fit of " + fs::path(a.input).filename().string();
    emit_fit(g, {{a.target + "_surrogate", surrogate_to_json(fit.surrogate, note)}},
             fit_report_to_json(fit.report), out);
    return kExitOk;
}

int cmd_fit_esc(const Globals& g, const FitArgs& a, std::ostream& out) {
    auto in = open_input(a.input);
    const EscFit fit = fit_esc_quadratic(parse_csv_table(in));
    emit_fit(g, {{"esc", esc_to_json(fit.model)}}, fit_report_to_json(fit.report), out);
    return kExitOk;
}

// --- compare --------------------------------------------------------------

int cmd_compare(const Globals& g, const CompareArgs& a, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    const double gamma = a.gamma.value_or(cfg.bundle.airframe.mounting_angle);
    std::vector<CompareRow> rows;
    bool any = false;
    for (double v : a.speeds) {
        CompareRow row{v, std::nullopt, std::nullopt};
        try {
            row.wing = trim_at_speed(cfg.bundle, gamma, v);
        } catch (const Error& e) {
            row.wing_status = std::string(to_string(e.kind()));
        }
        try {
            row.wingless = wingless_trim_at_speed(cfg.bundle, v);
        } catch (const Error& e) {
            row.wingless_status = std::string(to_string(e.kind()));
        }
        any = any || row.wing || row.wingless;
        rows.push_back(std::move(row));
    }

    switch (g.format) {
    case Format::Text: write_compare_text(out, rows, gamma); break;
    case Format::Csv: write_compare_csv(out, rows); break;
    case Format::Json: out << compare_to_json(rows, gamma).dump(2) << '\n'; break;
    }
    if (!g.out_dir.empty())
        write_file(fs::path(g.out_dir) / "compare.csv", [&](std::ostream& f) { write_compare_csv(f, rows); });
    return any ? kExitOk : kExitInfeasible;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trim, range and energy analysis for a lifting-wing multirotor", "liftwing"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config_path, "JSON run configuration (default: $LIFTWING_CONFIG)");
    app.add_option("--out", g.out_dir, "directory for CSV/JSON output files");
    std::string format_name = "text";
    app.add_option("--format", format_name, "stdout format: csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "sweep worker threads (default: hardware concurrency)")
        ->check(CLI::PositiveNumber);

    TrimArgs trim_args;
    auto* trim = app.add_subcommand("trim", "solve one trim point");
    trim->fallthrough();
    trim->add_option("--gamma", trim_args.gamma, "wing mounting angle [deg]")->required();
    auto* opt_alpha = trim->add_option("--alpha", trim_args.alpha, "attack angle [deg]");
    auto* opt_speed = trim->add_option("--speed", trim_args.speed, "airspeed [m/s]");
    opt_alpha->excludes(opt_speed);
    opt_speed->excludes(opt_alpha);

    SweepArgs sweep_args;
    auto* sw = app.add_subcommand("sweep", "grid search over mounting and attack angle");
    sw->fallthrough();
    auto* opt_cap = sw->add_option("--capacity", sweep_args.capacity, "battery capacity [A*s]");
    auto* opt_mah = sw->add_option("--capacity-mah", sweep_args.capacity_mah, "battery capacity [mAh]");
    opt_cap->excludes(opt_mah);
    sw->add_option("--margin", sweep_args.margin, "attack-angle safety margin [deg]");
    sw->add_option("--stall", sweep_args.stall, "stall attack angle [deg]");

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "least-squares model fitting");
    fit->fallthrough();
    fit->require_subcommand(1);
    auto add_input = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--input", fit_args.input, "sample file")->required();
    };
    auto* fit_aero = fit->add_subcommand("aero", "linear CL/CD fit from alpha:deg,cl:-,cd:- CSV");
    add_input(fit_aero);
    auto* fit_prop = fit->add_subcommand("prop", "propeller surrogate fit from a performance table or CSV");
    add_input(fit_prop);
    fit_prop->add_option("--target", fit_args.target, "thrust or torque");
    fit_prop->add_option("--basis", fit_args.basis, "quadratic, cubic, or vp_exp:rpm_exp,...");
    fit_prop->add_option("--unit", fit_args.units, "column unit override, e.g. V=mph");
    auto* fit_esc = fit->add_subcommand("esc", "quadratic ESC current fit from torque:N*m,current:A CSV");
    add_input(fit_esc);

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "current draw with and without the wing");
    cmp->fallthrough();
    cmp->add_option("--speeds", cmp_args.speeds, "airspeeds [m/s]")->delimiter(',');
    cmp->add_option("--gamma", cmp_args.gamma, "mounting angle [deg] (default: from config)");

    auto* hover = app.add_subcommand("hover", "hover trim at the configured mounting angle");
    hover->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    g.format = format_name == "csv" ? Format::Csv : format_name == "json" ? Format::Json : Format::Text;

    try {
        if (trim->parsed()) {
            if (!trim_args.alpha && !trim_args.speed) {
                err << "trim: exactly one of --alpha and --speed is required\n";
                return kExitConfig;
            }
            return cmd_trim(g, trim_args, out, err);
        }
        if (sw->parsed()) return cmd_sweep(g, sweep_args, out);
        if (fit_aero->parsed()) return cmd_fit_aero(g, fit_args, out);
        if (fit_prop->parsed()) return cmd_fit_prop(g, fit_args, out);
        if (fit_esc->parsed()) return cmd_fit_esc(g, fit_args, out);
        if (cmp->parsed()) return cmd_compare(g, cmp_args, out);
        if (hover->parsed()) return cmd_hover(g, out);
    } catch (const Error& e) {
        err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << '\n';
        return 1;
    }
    return kExitConfig;
}

} // namespace liftwing
