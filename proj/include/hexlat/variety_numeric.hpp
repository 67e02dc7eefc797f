#pragma once

// Floating-point verification of the analytic facts behind the variety
// diagrams: the solution arcs r^t e^{i nu} + r e^{i omega} = -1 in the solid
// torus, the R_d region and its slices, the bridge-point equation on the
// central torus, and the regular-value check for the affine chart of V_d.

#include "hexlat/variety_exact.hpp"

#include <complex>
#include <vector>

namespace hexlat {

struct ConvergenceError : GeomError {
    explicit ConvergenceError(const std::string& m) : GeomError(m) {}
};
struct MismatchError : GeomError {
    explicit MismatchError(const std::string& m) : GeomError(m) {}
};
struct SeparationError : GeomError {
    explicit SeparationError(const std::string& m) : GeomError(m) {}
};

struct ToleranceConfig {
    double root_tol = 1e-12;
    double match_tol = 1e-6;
    double grad_floor = 1e-1;
    int samples = 512;
    double separation_floor = 1e-4;
    unsigned seed = 20240613;
};

struct TraceSample {
    double r, nu, omega;
    std::complex<double> z1, z2;
    double theta = 0, psi = 0; // filled by the torus-projected traces
};

struct TraceResult {
    std::vector<TraceSample> samples;
    double endpoint_deviation = 0; // worst endpoint error
    double max_residual = 0;
    int injectivity_violations = 0;
    double r0 = 0;
};

// The arc {r^t e^{i nu} + r e^{i omega} = -1} in D^2 x S^1, sampled from the
// endpoint (e^{2pi i/3}, e^{4pi i/3}) through (-r0, -1) to the conjugate
// endpoint.
TraceResult arc_solution(double t, const ToleranceConfig& cfg = {});

// Bisection roots of r^{d-1} + r s0^{d-1} = s0 and r^{d-1} - r s0^{d-1} = s0
// on the slice s = s0 of R_d; the second root saturates at 1.
std::pair<double, double> rd_slice(std::int64_t d, double s0,
                                   const ToleranceConfig& cfg = {});

// All solutions of the variety equation restricted to |z1|=|z2|=|z3|=1,
// found by Newton polishing from a grid, matched 1:1 against the exact
// bridge points.  Returns the numeric (theta, psi) list in turns.
std::vector<std::pair<double, double>> sigma_points(std::int64_t d,
                                                    const ToleranceConfig& cfg = {});

// The d^2-3d+3 solution arcs of V_d in the solid torus H_1, pushed through
// the (theta_j, psi_j) substitution; endpoints are matched against the exact
// arc endpoints and distinct traces are checked for separation.
std::vector<TraceResult> trace_h1_arcs(std::int64_t d, const ToleranceConfig& cfg = {});

struct SmoothnessReport {
    double min_gradient = 0;      // min |df| over polished zero-set samples
    double min_critical_residual = 0; // min over samples of the critical system residual
    std::int64_t accepted = 0;
};

// Samples the zero set of z1 z2^{d-1} + z2 + z1^{d-1} inside the bidisk and
// reports the smallest gradient norm observed.
SmoothnessReport smoothness_check(std::int64_t d, std::int64_t n_samples = 10000,
                                  const ToleranceConfig& cfg = {});

// Number of torus solutions over an interior point of R_d, counted on a
// grid; the count must equal 2(d^2-3d+3) at every interior grid point.
struct RdCountReport {
    std::int64_t grid_points = 0;
    std::int64_t bad_points = 0;
    std::int64_t expected_per_point = 0;
};
RdCountReport count_rd_solutions(std::int64_t d, int grid = 50,
                                 const ToleranceConfig& cfg = {});

} // namespace hexlat
