#include "reslab/numerics.hpp"

#include "reslab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace reslab::numerics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x))
            return false;
    return true;
}

// In-place Cholesky A = L L^T (lower triangle). False if not positive definite.
bool cholesky(Matrix& a) {
    const std::size_t n = a.rows;
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= a(j, k) * a(j, k);
        if (!(d > 0.0) || !std::isfinite(d))
            return false;
        d = std::sqrt(d);
        a(j, j) = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= a(i, k) * a(j, k);
            a(i, j) = s / d;
        }
    }
    return true;
}

// Solve L L^T x = b with the factor from cholesky().
void chol_solve(const Matrix& l, std::span<double> x) {
    const std::size_t n = l.rows;
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k)
            s -= l(i, k) * x[k];
        x[i] = s / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k)
            s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
}

// Inverse of SPD matrix via Cholesky; false on failure.
bool spd_inverse(const Matrix& a, Matrix& inv) {
    Matrix l = a;
    if (!cholesky(l))
        return false;
    const std::size_t n = a.rows;
    inv = Matrix(n, n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        chol_solve(l, col);
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = col[i];
    }
    return true;
}

std::string diag_condition_note(const Matrix& a) {
    double dmin = kInf, dmax = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) {
        dmin = std::min(dmin, a(i, i));
        dmax = std::max(dmax, a(i, i));
    }
    std::ostringstream os;
    os << "diagonal ratio ~ " << (dmin > 0.0 ? dmax / dmin : kInf);
    return os.str();
}

} // namespace

Matrix finite_diff_jacobian(const ResidualFn& model,
                            std::span<const double> params, double scale) {
    const std::size_t p = params.size();
    std::vector<double> x(params.begin(), params.end());
    std::vector<std::vector<double>> cols(p);
    std::size_t m = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const double h = scale * std::max(std::fabs(x[i]), 1.0);
        const double save = x[i];
        x[i] = save + h;
        std::vector<double> rp = model(x);
        x[i] = save - h;
        std::vector<double> rm = model(x);
        x[i] = save;
        if (!all_finite(rp) || !all_finite(rm))
            throw FitError("finite_diff_jacobian: non-finite model output");
        if (i == 0)
            m = rp.size();
        if (rp.size() != m || rm.size() != m)
            throw FitError("finite_diff_jacobian: residual length changed");
        cols[i].resize(m);
        for (std::size_t k = 0; k < m; ++k)
            cols[i][k] = (rp[k] - rm[k]) / (2.0 * h);
    }
    Matrix j(m, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < m; ++k)
            j(k, i) = cols[i][k];
    return j;
}

FitReport levenberg_marquardt(const ResidualFn& model,
                              std::span<const double> params0,
                              const Bounds& bounds, const LmOptions& opts) {
    const std::size_t p = params0.size();
    if (p == 0)
        throw DomainError("levenberg_marquardt: empty parameter vector");
    if (bounds.lo.size() != p || bounds.hi.size() != p)
        throw DomainError("levenberg_marquardt: bounds size mismatch");
    for (std::size_t i = 0; i < p; ++i) {
        if (!(bounds.lo[i] <= bounds.hi[i]))
            throw DomainError("levenberg_marquardt: lo > hi for parameter " +
                              std::to_string(i));
        if (params0[i] < bounds.lo[i] || params0[i] > bounds.hi[i])
            throw DomainError("levenberg_marquardt: params0 outside bounds at "
                              "parameter " + std::to_string(i));
    }

    std::vector<double> x(params0.begin(), params0.end());
    std::vector<double> r = model(x);
    const std::size_t m = r.size();
    if (m < p)
        throw DomainError("levenberg_marquardt: fewer residuals (" +
                          std::to_string(m) + ") than parameters (" +
                          std::to_string(p) + ")");
    if (!all_finite(r))
        throw FitError("levenberg_marquardt: model not finite at params0");
    double cost = dot(r, r);

    Matrix j;
    Matrix a(p, p);
    std::vector<double> g(p);
    std::vector<bool> unident(p, false);

    auto refresh = [&]() {
        j = finite_diff_jacobian(model, x, opts.fd_scale);
        for (std::size_t c1 = 0; c1 < p; ++c1) {
            for (std::size_t c2 = c1; c2 < p; ++c2) {
                double s = 0.0;
                for (std::size_t k = 0; k < m; ++k)
                    s += j(k, c1) * j(k, c2);
                a(c1, c2) = s;
                a(c2, c1) = s;
            }
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                s += j(k, c1) * r[k];
            g[c1] = s;
        }
        double dmax = 0.0;
        for (std::size_t i = 0; i < p; ++i)
            dmax = std::max(dmax, a(i, i));
        for (std::size_t i = 0; i < p; ++i)
            unident[i] = !(a(i, i) > dmax * 1e-28);
    };
    refresh();

    if (std::all_of(unident.begin(), unident.end(), [](bool b) { return b; }))
        throw FitError("levenberg_marquardt: singular normal equations (all "
                       "Jacobian columns vanish; " + diag_condition_note(a) + ")");

    double lambda = 1e-3;
    bool converged = (cost == 0.0);
    int iters = 0;
    std::vector<double> xn(p), step(p);

    while (!converged && iters < opts.max_iterations) {
        ++iters;
        double dmax = 0.0;
        for (std::size_t i = 0; i < p; ++i)
            dmax = std::max(dmax, a(i, i));

        Matrix ad = a;
        for (std::size_t i = 0; i < p; ++i)
            ad(i, i) = a(i, i) + lambda * std::max(a(i, i), dmax * 1e-12);
        std::vector<double> delta(p);
        for (std::size_t i = 0; i < p; ++i)
            delta[i] = -g[i];
        Matrix l = ad;
        if (!cholesky(l)) {
            lambda *= 10.0;
            if (lambda > 1e16)
                throw FitError("levenberg_marquardt: singular normal equations "
                               "(" + diag_condition_note(a) + ")");
            continue;
        }
        chol_solve(l, delta);

        for (std::size_t i = 0; i < p; ++i) {
            xn[i] = std::clamp(x[i] + delta[i], bounds.lo[i], bounds.hi[i]);
            step[i] = xn[i] - x[i];
        }

        std::vector<double> rn = model(xn);
        double costn = all_finite(rn) && rn.size() == m ? dot(rn, rn) : kInf;

        if (costn <= cost) {
            double rel_step = 0.0;
            for (std::size_t i = 0; i < p; ++i)
                rel_step = std::max(rel_step, std::fabs(step[i]) /
                                                  std::max(std::fabs(xn[i]), 1.0));
            const double rel_dec =
                (cost - costn) / std::max(cost, std::numeric_limits<double>::min());
            x = xn;
            r = std::move(rn);
            cost = costn;
            refresh();
            lambda = std::max(lambda / 3.0, 1e-12);
            if ((rel_step < opts.tol && rel_dec < opts.tol) || cost == 0.0)
                converged = true;
        } else {
            lambda *= 10.0;
            if (lambda > 1e16)
                break;   // cannot make progress; report unconverged state
        }
    }

    FitReport rep;
    rep.params = x;
    rep.iterations = iters;
    rep.converged = converged;
    rep.residual_norm = std::sqrt(cost);
    rep.unidentifiable = unident;
    rep.dof_warning = (m == p);

    // Covariance over the identifiable subset; +inf sentinels elsewhere.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p; ++i)
        if (!unident[i])
            idx.push_back(i);
    Matrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            sub(i, k) = a(idx[i], idx[k]);
    Matrix sub_inv;
    if (!spd_inverse(sub, sub_inv))
        throw FitError("levenberg_marquardt: singular normal equations at "
                       "solution (" + diag_condition_note(a) + ", 1-norm cond "
                       "not computable)");

    const double s2 = m > p ? cost / double(m - p) : kInf;
    rep.covariance = Matrix(p, p);
    rep.stddev.assign(p, kInf);
    for (std::size_t i = 0; i < p; ++i)
        rep.covariance(i, i) = kInf;
    if (m > p) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t k = 0; k < idx.size(); ++k)
                rep.covariance(idx[i], idx[k]) = s2 * sub_inv(i, k);
        for (std::size_t i = 0; i < p; ++i)
            rep.stddev[i] = unident[i] ? kInf
                                       : std::sqrt(std::max(rep.covariance(i, i), 0.0));
    }
    return rep;
}

double bessel_k0(double x) {
    if (!(x > 0.0))
        throw DomainError("bessel_k0: requires x > 0");
    if (x > 700.0)
        return 0.0;   // result underflows well past double range

    if (x < 2.0) {
        // Ascending series: K0 = -(ln(x/2) + gamma) I0(x) + sum_k H_k q^k/(k!)^2.
        const double q = 0.25 * x * x;
        double term = 1.0;
        double i0 = 1.0;
        double hsum = 0.0;
        double s = 0.0;
        for (int k = 1; k <= 64; ++k) {
            term *= q / (double(k) * double(k));
            hsum += 1.0 / double(k);
            i0 += term;
            s += term * hsum;
            if (term * (hsum + 1.0) < 1e-21)
                break;
        }
        constexpr double kEulerGamma = 0.577215664901532860606512;
        return -(std::log(0.5 * x) + kEulerGamma) * i0 + s;
    }

    // x >= 2: Thompson-Barnett continued fraction for the confluent
    // hypergeometric factor of the large-x form (order 0).
    const double eps = 1e-16;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 30000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / double(i);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps)
            break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
}

} // namespace reslab::numerics
