#include "cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "output.hpp"
#include "scarf/errors.hpp"
#include "scarf/oracle.hpp"
#include "scarf/qhj_spectrum.hpp"
#include "scarf/qmf_probe.hpp"
#include "scarf/wavefunction.hpp"

namespace scarf::cli {

namespace {

class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

class IoError : public Error {
public:
    using Error::Error;
};

PotentialParams make_params(const RunConfig& cfg) {
    auto params = PotentialParams::create(cfg.s, cfg.a, cfg.m);
    if (params.regime() == Regime::Unsupported) throw DomainError("unsupported coupling s");
    return params;
}

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

Json params_json(const PotentialParams& p) {
    Json j;
    j["s"] = p.s();
    j["a"] = p.a();
    j["m"] = p.m();
    j["v0"] = p.v0();
    return j;
}

Json edge_json(Edge e) {
    if (e == Edge::NotApplicable) return nullptr;
    return std::string(to_string(e));
}

Json level_json(const SpectrumLine& line) {
    Json j;
    j["n"] = line.n;
    j["edge"] = edge_json(line.edge);
    j["lambda"] = line.lambda;
    j["energy"] = line.energy;
    j["nu1"] = line.nu1;
    j["nu2"] = line.nu2;
    return j;
}

std::string edge_cell(Edge e) { return e == Edge::NotApplicable ? "" : std::string(to_string(e)); }

Edge parse_edge(const std::optional<std::string>& edge, Regime regime) {
    if (regime == Regime::BoundStates) {
        if (edge && *edge != "none") throw ConfigError("--edge applies only to 0 < s <= 1/2");
        return Edge::NotApplicable;
    }
    if (!edge) throw ConfigError("--edge {lower,upper} is required for 0 < s <= 1/2");
    if (*edge == "lower") return Edge::Lower;
    if (*edge == "upper") return Edge::Upper;
    throw ConfigError("--edge must be lower or upper");
}

SpectrumLine select_line(const PotentialParams& params, int n, Edge edge) {
    switch (params.regime()) {
        case Regime::BoundStates: return bound_energy(params, n);
        case Regime::Bands: {
            const auto edges = band_edge_energies(params, n);
            return edge == Edge::Lower ? edges.lower : edges.upper;
        }
        case Regime::FreeParticle: {
            const auto edges = free_particle_edges(params, n);
            if (edge == Edge::Upper) return edges.upper;
            if (!edges.lower) throw ConfigError("the free particle has no n = 0 lower edge");
            return *edges.lower;
        }
        case Regime::Unsupported: break;
    }
    throw DomainError("unsupported coupling s");
}

int write_spectrum(const RunConfig& cfg, std::ostream& out, bool bands_only) {
    const auto params = make_params(cfg);
    if (bands_only && params.regime() != Regime::Bands) {
        throw RegimeError("bands requires 0 < s < 1/2");
    }
    if (cfg.n_max < 0) throw ConfigError("--n-max must be non-negative");
    const auto lines = closed_form_spectrum(params, cfg.n_max);
    spdlog::info("spectrum: s = {}, regime {}, {} levels", params.s(), to_string(params.regime()),
                 lines.size());

    // Band widths and the gap above each band, from the edges of bands n and n+1.
    struct BandInfo {
        double width;
        double gap_above;
    };
    std::vector<BandInfo> bands;
    const bool banded = params.regime() != Regime::BoundStates;
    if (banded) {
        const auto extended = closed_form_spectrum(params, cfg.n_max + 1);
        auto edge_energy = [&](int n, Edge e) {
            for (const auto& l : extended) {
                if (l.n == n && l.edge == e) return l.energy;
            }
            return 0.0;  // free particle n = 0 lower edge
        };
        for (int n = 0; n <= cfg.n_max; ++n) {
            const double lo = edge_energy(n, Edge::Lower);
            const double hi = edge_energy(n, Edge::Upper);
            bands.push_back({hi - lo, edge_energy(n + 1, Edge::Lower) - hi});
        }
    }

    if (format_or(cfg, Format::Json) == Format::Csv) {
        std::vector<std::vector<std::string>> rows{
            {"n", "edge", "lambda", "energy", "nu1", "nu2", "band_width", "gap_above"}};
        for (const auto& l : lines) {
            rows.push_back({std::to_string(l.n), edge_cell(l.edge), format_shortest(l.lambda),
                            format_shortest(l.energy), format_shortest(l.nu1),
                            format_shortest(l.nu2),
                            banded ? format_shortest(bands[l.n].width) : "",
                            banded ? format_shortest(bands[l.n].gap_above) : ""});
        }
        out << to_csv(rows);
        return exit_ok;
    }

    Json report;
    report["params"] = params_json(params);
    report["regime"] = std::string(to_string(params.regime()));
    report["levels"] = Json::array();
    for (const auto& l : lines) report["levels"].push_back(level_json(l));
    if (banded) {
        report["bands"] = Json::array();
        for (int n = 0; n <= cfg.n_max; ++n) {
            Json b;
            b["n"] = n;
            b["width"] = bands[n].width;
            b["gap_above"] = bands[n].gap_above;
            report["bands"].push_back(b);
        }
    }
    report["checks"] = Json::array();
    out << dump_json(report);
    return exit_ok;
}

struct Check {
    std::string name;
    const SpectrumLine* line = nullptr;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool relative = false;

    double delta() const {
        const double d = std::abs(measured - expected);
        return relative ? d / std::abs(expected) : d;
    }
    bool pass() const { return std::isfinite(measured) && delta() <= tolerance; }
};

Json check_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["n"] = c.line ? Json(c.line->n) : Json(nullptr);
    j["edge"] = c.line ? edge_json(c.line->edge) : Json(nullptr);
    j["measured"] = c.measured;
    j["expected"] = c.expected;
    j["delta"] = c.delta();
    j["tolerance"] = c.tolerance;
    j["relative"] = c.relative;
    j["pass"] = c.pass();
    return j;
}

Json complex_json(std::complex<double> z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

const oracle::OracleResult* match_oracle(const oracle::ScanResult& scan, const SpectrumLine& line) {
    const oracle::OracleResult* best = nullptr;
    for (const auto& r : scan.levels) {
        if (!r.classification || r.classification->n != line.n ||
            r.classification->edge != line.edge) {
            continue;
        }
        if (!(r.family == oracle::predicted_family(line))) continue;
        if (!best || std::abs(r.energy - line.energy) < std::abs(best->energy - line.energy)) {
            best = &r;
        }
    }
    return best;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) { return write_spectrum(cfg, out, false); }

int cmd_bands(const RunConfig& cfg, std::ostream& out) { return write_spectrum(cfg, out, true); }

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
    const auto params = make_params(cfg);
    double lambda = 0.0;
    if (cfg.lambda) {
        lambda = *cfg.lambda;
    } else {
        lambda = select_line(params, cfg.n, parse_edge(cfg.edge, params.regime())).lambda;
    }
    const auto sets = enumerate_residue_sets(params.s(), lambda);

    auto remark = [](const ResidueSet& rs) {
        return rs.valid ? std::string("valid") : "not valid (" + *rs.rejection_reason + ")";
    };

    if (format_or(cfg, Format::Json) == Format::Csv) {
        std::vector<std::vector<std::string>> rows{
            {"set", "b1", "b1_prime", "d1", "n", "valid", "remark"}};
        for (const auto& rs : sets) {
            rows.push_back({std::to_string(rs.set_id), format_shortest(rs.b1),
                            format_shortest(rs.b1_prime), format_shortest(rs.d1),
                            format_shortest(rs.n_value), rs.valid ? "true" : "false", remark(rs)});
        }
        out << to_csv(rows);
        return exit_ok;
    }

    Json report;
    report["params"] = params_json(params);
    report["regime"] = std::string(to_string(params.regime()));
    report["lambda"] = lambda;
    report["sets"] = Json::array();
    for (const auto& rs : sets) {
        Json j;
        j["set"] = rs.set_id;
        j["b1"] = rs.b1;
        j["b1_prime"] = rs.b1_prime;
        j["d1"] = rs.d1;
        j["n"] = rs.n_value;
        j["valid"] = rs.valid;
        j["remark"] = remark(rs);
        report["sets"].push_back(j);
    }
    out << dump_json(report);
    return exit_ok;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out) {
    const auto params = make_params(cfg);
    if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
    const auto line = select_line(params, cfg.n, parse_edge(cfg.edge, params.regime()));
    const auto spec = build_wavefunction(params, line);
    const auto rows = sample_wavefunction(spec, cfg.samples);
    spdlog::info("wavefunction: n = {}, lambda = {}, norm = {}", line.n, line.lambda, spec.norm);

    if (format_or(cfg, Format::Csv) == Format::Csv) {
        std::vector<std::vector<std::string>> table{{"x", "V", "psi", "psi_squared"}};
        for (const auto& r : rows) {
            table.push_back({format_shortest(r.x), format_shortest(r.potential),
                             format_shortest(r.psi), format_shortest(r.psi_squared)});
        }
        out << to_csv(table);
        return exit_ok;
    }

    Json report;
    report["params"] = params_json(params);
    report["regime"] = std::string(to_string(params.regime()));
    report["levels"] = Json::array({level_json(line)});
    report["samples"] = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["x"] = r.x;
        j["V"] = r.potential;
        j["psi"] = r.psi;
        j["psi_squared"] = r.psi_squared;
        report["samples"].push_back(j);
    }
    out << dump_json(report);
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto params = make_params(cfg);
    if (cfg.n_max < 0) throw ConfigError("--n-max must be non-negative");
    if (!(cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
    const bool bound = params.regime() == Regime::BoundStates;
    const bool want_shooting = cfg.oracle != OracleKind::FiniteDifference;
    const bool want_fd = cfg.oracle != OracleKind::Shooting;
    if (cfg.oracle == OracleKind::FiniteDifference && !bound) {
        throw RegimeError("--oracle fd needs hard walls (s > 1/2)");
    }

    const auto lines = closed_form_spectrum(params, cfg.n_max);
    double e_top = 0.0;
    for (const auto& l : lines) e_top = std::max(e_top, l.energy);

    oracle::ScanResult scan;
    if (want_shooting) {
        const double e_max = 1.05 * e_top + 0.1 * params.energy_unit();
        spdlog::info("verify: shooting scan up to E = {}", e_max);
        scan = oracle::scan_spectrum(params, e_max);
        for (const auto& e : scan.errors) spdlog::warn("shooting: {}", e);
    }
    std::vector<double> fd;
    if (want_fd && bound) {
        spdlog::info("verify: finite differences with N = {}", cfg.fd_grid);
        fd = oracle::fd_bound_spectrum(params, cfg.fd_grid, cfg.n_max + 1);
    }

    std::vector<Check> checks;
    Json details = Json::array();
    for (const auto& line : lines) {
        spdlog::debug("verify: level n = {}, edge {}", line.n, to_string(line.edge));
        const auto spec = build_wavefunction(params, line);
        const auto residues = probe_residues(spec);
        const int nodes = count_nodes(spec, 2048);
        const double exponent = boundary_exponent(spec);
        const auto par = parity(spec);
        const double schrodinger = max_schrodinger_residual(spec);
        const double norm = norm_integral(spec);
        const double nan = std::nan("");

        Json d;
        d["n"] = line.n;
        d["edge"] = edge_json(line.edge);
        d["closed_form_energy"] = line.energy;

        if (want_shooting) {
            const auto* hit = match_oracle(scan, line);
            d["shooting_energy"] = hit ? Json(hit->energy) : Json(nullptr);
            d["shooting_family"] = std::string(oracle::to_string(oracle::predicted_family(line).exponent)) +
                                   "/" +
                                   std::string(oracle::to_string(oracle::predicted_family(line).match));
            d["shooting_delta_sensitivity"] = hit ? Json(hit->delta_sensitivity) : Json(nullptr);
            checks.push_back({"shooting_energy", &line, hit ? hit->energy : nan, line.energy,
                              cfg.tol, true});
        }
        if (want_fd && bound) {
            d["fd_energy"] = fd[line.n];
            checks.push_back({"fd_energy", &line, fd[line.n], line.energy, cfg.fd_tol, true});
        }

        Json r;
        r["b1"] = complex_json(residues.b1_measured);
        r["b1_prime"] = complex_json(residues.b1_prime_measured);
        r["d1"] = complex_json(residues.d1_measured);
        r["d0"] = complex_json(residues.d0_measured);
        r["moving_poles"] = residues.moving_pole_count;
        r["sum_rule_defect"] = residues.sum_rule_defect;
        r["riccati_residual"] = residues.riccati_residual;
        d["residues"] = r;
        d["node_count"] = nodes;
        d["boundary_exponent"] = exponent;
        d["parity"] = par.parity == Parity::Even ? "even" : "odd";
        d["schrodinger_residual"] = schrodinger;
        d["norm"] = norm;
        details.push_back(d);

        const double b1 = 0.5 * (1.0 - line.lambda);
        const double lam2 = line.lambda * line.lambda;
        checks.push_back({"sum_rule", &line, residues.sum_rule_defect, 0.0, 1e-9});
        checks.push_back({"b1", &line, residues.b1_measured.real(), b1, 1e-10});
        checks.push_back({"b1_prime", &line, residues.b1_prime_measured.real(), b1, 1e-10});
        checks.push_back({"d1", &line, residues.d1_measured.real(), line.d1, 1e-10});
        checks.push_back({"moving_poles", &line, static_cast<double>(residues.moving_pole_count),
                          static_cast<double>(line.n), 0.0});
        checks.push_back({"riccati_residual", &line, residues.riccati_residual, 0.0,
                          1e-10 * (1.0 + lam2)});
        checks.push_back({"schrodinger_residual", &line, schrodinger, 0.0, 1e-8});
        checks.push_back({"normalization", &line, norm, 1.0, 1e-9});
        checks.push_back({"node_count", &line, static_cast<double>(nodes),
                          static_cast<double>(line.n), 0.0});
        checks.push_back({"parity", &line, par.parity == Parity::Even ? 1.0 : -1.0,
                          line.n % 2 == 0 ? 1.0 : -1.0, 0.0});
        checks.push_back({"parity_defect", &line, par.defect, 0.0, 1e-10});
        checks.push_back({"boundary_exponent", &line, exponent, line.lambda - line.n, 1e-3});
    }

    const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
    for (const auto& c : checks) {
        if (!c.pass()) {
            spdlog::info("check {} failed for n = {}: delta {} > {}", c.name, c.line ? c.line->n : -1,
                         c.delta(), c.tolerance);
        }
    }

    if (format_or(cfg, Format::Json) == Format::Csv) {
        std::vector<std::vector<std::string>> rows{
            {"name", "n", "edge", "measured", "expected", "delta", "tolerance", "pass"}};
        for (const auto& c : checks) {
            rows.push_back({c.name, c.line ? std::to_string(c.line->n) : "",
                            c.line ? edge_cell(c.line->edge) : "", format_shortest(c.measured),
                            format_shortest(c.expected), format_shortest(c.delta()),
                            format_shortest(c.tolerance), c.pass() ? "true" : "false"});
        }
        out << to_csv(rows);
    } else {
        Json report;
        report["params"] = params_json(params);
        report["regime"] = std::string(to_string(params.regime()));
        report["levels"] = Json::array();
        for (const auto& l : lines) report["levels"].push_back(level_json(l));
        Json oracle_info;
        oracle_info["kind"] = cfg.oracle == OracleKind::Shooting   ? "shooting"
                              : cfg.oracle == OracleKind::Both     ? "both"
                                                                   : "fd";
        oracle_info["fd_grid"] = (want_fd && bound) ? Json(cfg.fd_grid) : Json(nullptr);
        oracle_info["shooting_errors"] = scan.errors;
        if (want_fd && !bound) oracle_info["note"] = "finite differences apply only to s > 1/2";
        report["oracle"] = oracle_info;
        report["verification"] = details;
        report["checks"] = Json::array();
        for (const auto& c : checks) report["checks"].push_back(check_json(c));
        report["passed"] = all_pass;
        out << dump_json(report);
    }
    return all_pass ? exit_ok : exit_check_failed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("scarf", sink);
    logger->set_pattern("[scarf] %l: %v");
    logger->set_level(spdlog::level::err);
    if (const char* level = std::getenv("SCARF_LOG")) {
        const std::string l = level;
        if (l == "info") logger->set_level(spdlog::level::info);
        if (l == "debug") logger->set_level(spdlog::level::debug);
    }
    spdlog::set_default_logger(logger);

    RunConfig cfg;
    std::string format_name;
    std::string out_path;
    std::string config_path;
    std::string oracle_name = "shooting";
    std::string edge_name;
    double lambda = 0.0;

    CLI::App app{"Spectrum, eigenfunctions and residue checks for the Scarf potential", "scarf"};
    app.require_subcommand(1);
    auto* opt_s = app.add_option("--s", cfg.s, "coupling s > 0");
    auto* opt_a = app.add_option("--a", cfg.a, "potential period (default 1)");
    auto* opt_m = app.add_option("--m", cfg.m, "mass (default 1)");
    auto* opt_format = app.add_option("--format", format_name, "json or csv")
                           ->check(CLI::IsMember({"json", "csv"}));
    auto* opt_out = app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--config", config_path, "JSON file with default option values");

    auto* spectrum = app.add_subcommand("spectrum", "closed-form levels for n = 0..n_max");
    auto* bands = app.add_subcommand("bands", "band edges (0 < s < 1/2 only)");
    auto* table1 = app.add_subcommand("table1", "enumerate residue sets for one lambda");
    auto* wavefunction = app.add_subcommand("wavefunction", "sample one eigenfunction");
    auto* verify = app.add_subcommand("verify", "cross-check closed forms against the oracles");

    std::vector<CLI::Option*> n_max_opts;
    for (auto* sub : {spectrum, bands, verify}) {
        n_max_opts.push_back(sub->add_option("--n-max", cfg.n_max, "highest level index"));
    }
    std::vector<CLI::Option*> n_opts;
    std::vector<CLI::Option*> edge_opts;
    for (auto* sub : {table1, wavefunction}) {
        n_opts.push_back(sub->add_option("--n", cfg.n, "level index"));
        edge_opts.push_back(sub->add_option("--edge", edge_name, "lower or upper")
                                ->check(CLI::IsMember({"lower", "upper", "none"})));
    }
    auto* opt_lambda = table1->add_option("--lambda", lambda, "dimensionless energy lambda > 0");
    auto* opt_samples = wavefunction->add_option("--samples", cfg.samples, "number of samples");
    auto* opt_oracle = verify->add_option("--oracle", oracle_name, "shooting, fd or both")
                           ->check(CLI::IsMember({"shooting", "fd", "both"}));
    auto* opt_tol = verify->add_option("--tol", cfg.tol, "relative tolerance for the shooting oracle");
    auto* opt_fd_tol = verify->add_option("--fd-tol", cfg.fd_tol, "relative tolerance for finite differences");
    auto* opt_fd_grid = verify->add_option("--fd-grid", cfg.fd_grid, "finite-difference intervals N");
    for (auto* sub : {spectrum, bands, table1, wavefunction, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        spdlog::error("{}", e.what());
        return exit_bad_input;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw IoError("cannot read config file " + config_path);
            Json file;
            try {
                file = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
            }
            auto any_given = [](const std::vector<CLI::Option*>& opts) {
                return std::any_of(opts.begin(), opts.end(), [](auto* o) { return o->count() > 0; });
            };
            try {
                if (file.contains("s") && opt_s->count() == 0) cfg.s = file["s"].get<double>();
                if (file.contains("a") && opt_a->count() == 0) cfg.a = file["a"].get<double>();
                if (file.contains("m") && opt_m->count() == 0) cfg.m = file["m"].get<double>();
                if (file.contains("format") && opt_format->count() == 0) {
                    format_name = file["format"].get<std::string>();
                }
                if (file.contains("out") && opt_out->count() == 0) out_path = file["out"].get<std::string>();
                if (file.contains("n_max") && !any_given(n_max_opts)) cfg.n_max = file["n_max"].get<int>();
                if (file.contains("n") && !any_given(n_opts)) cfg.n = file["n"].get<int>();
                if (file.contains("edge") && !any_given(edge_opts)) {
                    edge_name = file["edge"].get<std::string>();
                }
                if (file.contains("lambda") && opt_lambda->count() == 0) {
                    lambda = file["lambda"].get<double>();
                    cfg.lambda = lambda;
                }
                if (file.contains("samples") && opt_samples->count() == 0) {
                    cfg.samples = file["samples"].get<int>();
                }
                if (file.contains("oracle") && opt_oracle->count() == 0) {
                    oracle_name = file["oracle"].get<std::string>();
                }
                if (file.contains("tol") && opt_tol->count() == 0) cfg.tol = file["tol"].get<double>();
                if (file.contains("fd_tol") && opt_fd_tol->count() == 0) {
                    cfg.fd_tol = file["fd_tol"].get<double>();
                }
                if (file.contains("fd_grid") && opt_fd_grid->count() == 0) {
                    cfg.fd_grid = file["fd_grid"].get<int>();
                }
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("config file has a mistyped value: ") + e.what());
            }
        }

        if (opt_s->count() == 0 && cfg.s == 0.0) throw ConfigError("--s is required");
        if (!format_name.empty()) {
            if (format_name == "json") cfg.format = Format::Json;
            else if (format_name == "csv") cfg.format = Format::Csv;
            else throw ConfigError("--format must be json or csv");
        }
        if (!edge_name.empty()) cfg.edge = edge_name;
        if (opt_lambda->count() > 0) cfg.lambda = lambda;
        if (oracle_name == "shooting") cfg.oracle = OracleKind::Shooting;
        else if (oracle_name == "fd") cfg.oracle = OracleKind::FiniteDifference;
        else if (oracle_name == "both") cfg.oracle = OracleKind::Both;
        else throw ConfigError("--oracle must be shooting, fd or both");
        if (!out_path.empty()) cfg.out_path = out_path;

        std::ostringstream buffer;
        int code = exit_ok;
        if (spectrum->parsed()) code = cmd_spectrum(cfg, buffer);
        else if (bands->parsed()) code = cmd_bands(cfg, buffer);
        else if (table1->parsed()) code = cmd_table1(cfg, buffer);
        else if (wavefunction->parsed()) code = cmd_wavefunction(cfg, buffer);
        else if (verify->parsed()) code = cmd_verify(cfg, buffer);

        if (cfg.out_path) {
            std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
            if (!file) throw IoError("cannot open " + *cfg.out_path + " for writing");
            file << buffer.str();
            file.flush();
            if (!file) throw IoError("failed writing " + *cfg.out_path);
        } else {
            out << buffer.str();
            out.flush();
        }
        return code;
    } catch (const IoError& e) {
        spdlog::error("{}", e.what());
        return exit_io;
    } catch (const DomainError& e) {
        spdlog::error("{}", e.what());
        return exit_bad_input;
    } catch (const RegimeError& e) {
        spdlog::error("{}", e.what());
        return exit_bad_input;
    } catch (const Error& e) {
        spdlog::error("{}", e.what());
        return exit_check_failed;
    }
}

}  // namespace scarf::cli
