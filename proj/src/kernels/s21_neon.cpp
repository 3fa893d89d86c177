// NEON variant of the S21 kernels: two grid points per iteration, same
// operation order as the scalar reference (vdivq is IEEE-correct on aarch64,
// and no fused multiply-add is emitted here).

#include "reslab/kernels/s21_kernel.hpp"

#if defined(RESLAB_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace reslab::kernels::detail {

namespace {

struct Coef {
    float64x2_t a, b, c, f_c, bg_re, bg_im, one;
};

inline Coef broadcast(const S21Params& p) {
    Coef k;
    k.a = vdupq_n_f64(p.q_loaded / p.q_ext);
    k.b = vdupq_n_f64(-2.0 * p.q_loaded * p.df / p.f_c);
    k.c = vdupq_n_f64(2.0 * p.q_loaded / p.f_c);
    k.f_c = vdupq_n_f64(p.f_c);
    k.bg_re = vdupq_n_f64(p.b_amp * std::cos(p.phi_off));
    k.bg_im = vdupq_n_f64(p.b_amp * std::sin(p.phi_off));
    k.one = vdupq_n_f64(1.0);
    return k;
}

inline void point2(const Coef& k, float64x2_t f, float64x2_t& re,
                   float64x2_t& im) {
    const float64x2_t x = vmulq_f64(k.c, vsubq_f64(f, k.f_c));
    const float64x2_t t = vdivq_f64(k.one, vaddq_f64(k.one, vmulq_f64(x, x)));
    const float64x2_t u =
        vsubq_f64(k.one, vmulq_f64(vaddq_f64(k.a, vmulq_f64(k.b, x)), t));
    const float64x2_t v = vmulq_f64(vsubq_f64(vmulq_f64(k.a, x), k.b), t);
    re = vsubq_f64(vmulq_f64(k.bg_re, u), vmulq_f64(k.bg_im, v));
    im = vaddq_f64(vmulq_f64(k.bg_im, u), vmulq_f64(k.bg_re, v));
}

} // namespace

void s21_eval_neon(const double* freqs, std::size_t n, const S21Params& p,
                   double* out_re, double* out_im) {
    const Coef k = broadcast(p);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t re, im;
        point2(k, vld1q_f64(freqs + i), re, im);
        vst1q_f64(out_re + i, re);
        vst1q_f64(out_im + i, im);
    }
    if (i < n)
        s21_eval_scalar(freqs + i, n - i, p, out_re + i, out_im + i);
}

void s21_resid_neon(const double* freqs, const double* data_re,
                    const double* data_im, std::size_t n, const S21Params& p,
                    double* out) {
    const Coef k = broadcast(p);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t re, im;
        point2(k, vld1q_f64(freqs + i), re, im);
        vst1q_f64(out + i, vsubq_f64(re, vld1q_f64(data_re + i)));
        vst1q_f64(out + n + i, vsubq_f64(im, vld1q_f64(data_im + i)));
    }
    for (; i < n; ++i) {
        double re, im;
        s21_eval_scalar(freqs + i, 1, p, &re, &im);
        out[i] = re - data_re[i];
        out[n + i] = im - data_im[i];
    }
}

} // namespace reslab::kernels::detail

#endif // RESLAB_HAVE_NEON
