#ifndef RESLAB_KERNELS_S21_KERNEL_HPP
#define RESLAB_KERNELS_S21_KERNEL_HPP

#include <cstddef>
#include <span>
#include <string_view>

namespace reslab::kernels {

// Plain-parameter form of the hanger-mode transmission model,
//   S21(f) = B exp(j phi) [1 - (Q/Qe - j 2 Q df / fc) / (1 + j 2 Q (f - fc) / fc)],
// kept free of higher-level headers so the SIMD translation units stay minimal.
struct S21Params {
    double b_amp;      // background amplitude B
    double phi_off;    // phase offset (rad)
    double q_loaded;   // total (loaded) quality factor
    double q_ext;      // external (coupling) quality factor
    double f_c;        // resonance frequency (Hz)
    double df;         // asymmetry parameter (Hz)
};

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

// Backend chosen at first use: RESLAB_KERNEL env override ("scalar", "avx2",
// "neon"), otherwise the widest instruction set the CPU supports.
Backend active_backend();

// Force a backend; throws DomainError if it is not available on this CPU/build.
void set_backend(Backend b);

// Evaluate the model over a frequency grid. out_re/out_im must match freqs in
// length. Dispatches to the active backend.
void s21_eval(std::span<const double> freqs, const S21Params& p,
              std::span<double> out_re, std::span<double> out_im);

// Stacked residuals against measured data: out[0..n) = model_re - data_re,
// out[n..2n) = model_im - data_im. out must have length 2n.
void s21_residuals(std::span<const double> freqs,
                   std::span<const double> data_re,
                   std::span<const double> data_im,
                   const S21Params& p,
                   std::span<double> out);

namespace detail {

using EvalFn = void (*)(const double* freqs, std::size_t n, const S21Params& p,
                        double* out_re, double* out_im);
using ResidFn = void (*)(const double* freqs, const double* data_re,
                         const double* data_im, std::size_t n,
                         const S21Params& p, double* out);

void s21_eval_scalar(const double* freqs, std::size_t n, const S21Params& p,
                     double* out_re, double* out_im);
void s21_resid_scalar(const double* freqs, const double* data_re,
                      const double* data_im, std::size_t n, const S21Params& p,
                      double* out);

#if defined(RESLAB_HAVE_AVX2)
void s21_eval_avx2(const double* freqs, std::size_t n, const S21Params& p,
                   double* out_re, double* out_im);
void s21_resid_avx2(const double* freqs, const double* data_re,
                    const double* data_im, std::size_t n, const S21Params& p,
                    double* out);
#endif

#if defined(RESLAB_HAVE_NEON)
void s21_eval_neon(const double* freqs, std::size_t n, const S21Params& p,
                   double* out_re, double* out_im);
void s21_resid_neon(const double* freqs, const double* data_re,
                    const double* data_im, std::size_t n, const S21Params& p,
                    double* out);
#endif

} // namespace detail

} // namespace reslab::kernels

#endif // RESLAB_KERNELS_S21_KERNEL_HPP
