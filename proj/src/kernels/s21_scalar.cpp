// Scalar reference kernels for the hanger-mode S21 model. The SIMD variants
// replicate this exact operation sequence lane-by-lane; this translation unit
// is compiled with -ffp-contract=off so the comparison is bit-exact.

#include "reslab/kernels/s21_kernel.hpp"

#include <cmath>

namespace reslab::kernels::detail {

namespace {

struct Derived {
    double a;       // Q / Qe
    double b;       // -2 Q df / fc  (imag part of the numerator)
    double c;       // 2 Q / fc      (detuning scale)
    double f_c;
    double bg_re;   // B cos(phi)
    double bg_im;   // B sin(phi)
};

inline Derived derive(const S21Params& p) {
    Derived d;
    d.a = p.q_loaded / p.q_ext;
    d.b = -2.0 * p.q_loaded * p.df / p.f_c;
    d.c = 2.0 * p.q_loaded / p.f_c;
    d.f_c = p.f_c;
    d.bg_re = p.b_amp * std::cos(p.phi_off);
    d.bg_im = p.b_amp * std::sin(p.phi_off);
    return d;
}

// One grid point:
//   x = 2 Q (f - fc) / fc
//   (a + jb)/(1 + jx) = [(a + b x) + j(b - a x)] / (1 + x^2)
//   inner = (1 - (a + b x) t) + j (a x - b) t,   t = 1/(1 + x^2)
inline void point(const Derived& d, double f, double& re, double& im) {
    const double x = d.c * (f - d.f_c);
    const double t = 1.0 / (1.0 + x * x);
    const double u = 1.0 - (d.a + d.b * x) * t;
    const double v = (d.a * x - d.b) * t;
    re = d.bg_re * u - d.bg_im * v;
    im = d.bg_im * u + d.bg_re * v;
}

} // namespace

void s21_eval_scalar(const double* freqs, std::size_t n, const S21Params& p,
                     double* out_re, double* out_im) {
    const Derived d = derive(p);
    for (std::size_t i = 0; i < n; ++i)
        point(d, freqs[i], out_re[i], out_im[i]);
}

void s21_resid_scalar(const double* freqs, const double* data_re,
                      const double* data_im, std::size_t n, const S21Params& p,
                      double* out) {
    const Derived d = derive(p);
    for (std::size_t i = 0; i < n; ++i) {
        double re, im;
        point(d, freqs[i], re, im);
        out[i] = re - data_re[i];
        out[n + i] = im - data_im[i];
    }
}

} // namespace reslab::kernels::detail
