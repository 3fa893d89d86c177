// AVX2 variant of the S21 kernels: four grid points per iteration, same
// operation order as the scalar reference (no FMA contraction) so results
// match bit-for-bit. Tail points fall through to the scalar kernel.

#include "reslab/kernels/s21_kernel.hpp"

#if defined(RESLAB_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace reslab::kernels::detail {

namespace {

struct Coef {
    __m256d a, b, c, f_c, bg_re, bg_im, one;
};

inline Coef broadcast(const S21Params& p) {
    Coef k;
    k.a = _mm256_set1_pd(p.q_loaded / p.q_ext);
    k.b = _mm256_set1_pd(-2.0 * p.q_loaded * p.df / p.f_c);
    k.c = _mm256_set1_pd(2.0 * p.q_loaded / p.f_c);
    k.f_c = _mm256_set1_pd(p.f_c);
    k.bg_re = _mm256_set1_pd(p.b_amp * std::cos(p.phi_off));
    k.bg_im = _mm256_set1_pd(p.b_amp * std::sin(p.phi_off));
    k.one = _mm256_set1_pd(1.0);
    return k;
}

inline void point4(const Coef& k, __m256d f, __m256d& re, __m256d& im) {
    const __m256d x = _mm256_mul_pd(k.c, _mm256_sub_pd(f, k.f_c));
    const __m256d t =
        _mm256_div_pd(k.one, _mm256_add_pd(k.one, _mm256_mul_pd(x, x)));
    const __m256d u = _mm256_sub_pd(
        k.one,
        _mm256_mul_pd(_mm256_add_pd(k.a, _mm256_mul_pd(k.b, x)), t));
    const __m256d v =
        _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(k.a, x), k.b), t);
    re = _mm256_sub_pd(_mm256_mul_pd(k.bg_re, u), _mm256_mul_pd(k.bg_im, v));
    im = _mm256_add_pd(_mm256_mul_pd(k.bg_im, u), _mm256_mul_pd(k.bg_re, v));
}

} // namespace

void s21_eval_avx2(const double* freqs, std::size_t n, const S21Params& p,
                   double* out_re, double* out_im) {
    const Coef k = broadcast(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d re, im;
        point4(k, _mm256_loadu_pd(freqs + i), re, im);
        _mm256_storeu_pd(out_re + i, re);
        _mm256_storeu_pd(out_im + i, im);
    }
    if (i < n)
        s21_eval_scalar(freqs + i, n - i, p, out_re + i, out_im + i);
}

void s21_resid_avx2(const double* freqs, const double* data_re,
                    const double* data_im, std::size_t n, const S21Params& p,
                    double* out) {
    const Coef k = broadcast(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d re, im;
        point4(k, _mm256_loadu_pd(freqs + i), re, im);
        _mm256_storeu_pd(out + i,
                         _mm256_sub_pd(re, _mm256_loadu_pd(data_re + i)));
        _mm256_storeu_pd(out + n + i,
                         _mm256_sub_pd(im, _mm256_loadu_pd(data_im + i)));
    }
    for (; i < n; ++i) {
        double re, im;
        s21_eval_scalar(freqs + i, 1, p, &re, &im);
        out[i] = re - data_re[i];
        out[n + i] = im - data_im[i];
    }
}

} // namespace reslab::kernels::detail

#endif // RESLAB_HAVE_AVX2
