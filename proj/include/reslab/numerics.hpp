#ifndef RESLAB_NUMERICS_HPP
#define RESLAB_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace reslab::numerics {

// Small dense row-major matrix; fits in a cache line for the 4-7 parameter
// problems this library solves.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// A model maps a parameter vector to a residual vector.
using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;

struct Bounds {
    std::vector<double> lo;
    std::vector<double> hi;
};

struct FitReport {
    std::vector<double> params;
    std::vector<double> stddev;        // sqrt(covariance diagonal); +inf sentinel when dof = 0
    Matrix covariance;                 // s^2 (J^T J)^-1 at the solution
    double residual_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    bool dof_warning = false;          // residual count equals parameter count
    std::vector<bool> unidentifiable;  // parameters the residuals are insensitive to
};

struct LmOptions {
    int max_iterations = 500;
    double tol = 1e-10;      // relative step and relative cost decrease
    double fd_scale = 1e-7;  // finite-difference step scale for the Jacobian
};

// Damped least squares with per-parameter box bounds (candidate steps are
// clamped before acceptance). Covariance is s^2 (J^T J)^-1 with
// s^2 = residual_norm^2 / (m - p). Throws DomainError for params0 outside
// bounds or m < p, FitError when the normal equations are singular.
FitReport levenberg_marquardt(const ResidualFn& model,
                              std::span<const double> params0,
                              const Bounds& bounds,
                              const LmOptions& opts = {});

// Modified Bessel function of the second kind, order zero. Relative error
// <= 1e-10 on [1e-6, 700]; returns 0 beyond 700 (underflow). Throws
// DomainError for x <= 0.
double bessel_k0(double x);

// Central differences, step scale * max(|p_i|, 1) per parameter. Throws
// FitError on non-finite model output. Rows = residuals, cols = parameters.
Matrix finite_diff_jacobian(const ResidualFn& model,
                            std::span<const double> params, double scale);

} // namespace reslab::numerics

#endif // RESLAB_NUMERICS_HPP
