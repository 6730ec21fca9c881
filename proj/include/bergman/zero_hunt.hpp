#pragma once

// Generation of the two-spiral zero configurations, high-precision boundary
// values of the zero-based kernel at z = 1 with residual-based error control,
// bisection location of extraneous zeros on (0,1), the reference parameter
// table, level-grid exports, and parameter sweeps.

#include <optional>

#include "bergman/kernels.hpp"

namespace bergman {

struct NoSignChangeError : std::runtime_error {
    explicit NoSignChangeError(const std::string& what) : std::runtime_error(what) {}
};

struct HuntConfig {
    std::string alpha = "3";  // decimal string, parsed at context precision
    int n = 6;                // even point count, >= 0
    double theta = 0.51;      // in (0, pi/2)
    double d = 10.0;          // > 1
    int digits = 40;

    void validate() const;
};

enum class HuntVerdict { extraneous_zero_found, none_found, inconclusive };
const char* to_string(HuntVerdict v);

struct HuntResult {
    HuntConfig config;
    KernelRep rep;           // coefficients + solve/zero residuals
    HPReal boundary_value;   // Re K(1, 0)
    HuntVerdict verdict = HuntVerdict::inconclusive;
    std::optional<HPReal> located_zero;
    double wall_seconds = 0.0;

    std::string to_json() const;
};

// a_k = exp(3(i - theta) d^{k - n/2}) for k = 1..n/2 plus conjugates; all
// moduli exp(-3 theta d^{k-n/2}) < 1.
ZeroSet generate_configuration(const HuntConfig& cfg);

// Solves the coefficient system, evaluates at z = 1, and issues a verdict:
// a negative boundary value counts only when it clears margin * zero_residual.
HuntResult boundary_value_scan(const HuntConfig& cfg, double margin = 1e3);

// Sign-change bisection of x -> Re K(x, 0) on [0,1] down to the given
// interval width (decimal string, default the standard 1e-20). Requires a
// symmetric configuration and a negative boundary value.
HPReal locate_extraneous_zero(const HuntResult& scan, const std::string& width = "1e-20");

// Generic bisection helper used by the toy-example root checks as well.
HPReal bisect_real(const std::function<HPReal(const HPReal&)>& f, HPReal lo, HPReal hi,
                   const HPReal& width);

struct Table1Row {
    std::string alpha;
    int n;
    double theta;
    double d;
};
// The thirteen reference rows, ordered by decreasing alpha.
const std::vector<Table1Row>& table1_rows();

struct Table1Entry {
    Table1Row row;
    bool ran = false;
    std::string skip_reason;
    std::optional<HuntResult> result;
};

// Runs the scan per selected row (0-based indices); rows with n > 78 are
// skipped unless long_running is set.
std::vector<Table1Entry> table1_reproduce(const std::vector<int>& rows, int digits,
                                          bool long_running, double margin = 1e3);

struct LevelGrid {
    double x0, x1, y0, y1;
    int nx, ny;
    std::vector<double> values;  // |K(z,0)|, row-major, y fastest

    std::string to_csv() const;
};

// Samples |K(z,0)| over a rectangle inside the closed disk.
LevelGrid level_grid_export(const KernelRep& rep, double x0, double x1, double y0, double y1,
                            int nx, int ny);

struct SweepPoint {
    std::string alpha;
    HPReal boundary_value;
    HPReal zero_residual;
    HuntVerdict verdict;
};

// boundary_value_scan for each alpha over a fixed (n, theta, d).
std::vector<SweepPoint> alpha_sweep(const HuntConfig& base, const std::vector<std::string>& alphas,
                                    double margin = 1e3);

}  // namespace bergman
