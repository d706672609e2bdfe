#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace scarf::cli {

enum class Format { Json, Csv };
enum class OracleKind { Shooting, FiniteDifference, Both };

struct RunConfig {
    double s = 0.0;
    double a = 1.0;
    double m = 1.0;
    std::optional<Format> format;
    std::optional<std::string> out_path;

    int n_max = 3;
    int n = 0;
    std::optional<std::string> edge;
    std::optional<double> lambda;
    int samples = 512;
    OracleKind oracle = OracleKind::Shooting;
    double tol = 1e-8;
    double fd_tol = 1e-4;
    int fd_grid = 4000;
};

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_io = 3;

// Each command writes its data to `out` and returns an exit code. Invalid
// parameters surface as scarf::Error exceptions.
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_bands(const RunConfig& cfg, std::ostream& out);
int cmd_table1(const RunConfig& cfg, std::ostream& out);
int cmd_wavefunction(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Full front end: parses argv, merges --config, dispatches, maps errors to
// exit codes. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scarf::cli
