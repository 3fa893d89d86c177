#include "reslab/kernels/s21_kernel.hpp"

#include "reslab/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace reslab::kernels {

namespace {

bool backend_available(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(RESLAB_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::Neon:
#if defined(RESLAB_HAVE_NEON)
        return true;   // mandatory on aarch64
#else
        return false;
#endif
    }
    return false;
}

Backend pick_default() {
    if (const char* env = std::getenv("RESLAB_KERNEL")) {
        const std::string v(env);
        Backend want = Backend::Scalar;
        if (v == "avx2")
            want = Backend::Avx2;
        else if (v == "neon")
            want = Backend::Neon;
        else if (v != "scalar" && !v.empty())
            throw DomainError("RESLAB_KERNEL: unknown backend '" + v + "'");
        if (!backend_available(want))
            throw DomainError("RESLAB_KERNEL: backend '" + v +
                              "' not available on this machine");
        return want;
    }
#if defined(RESLAB_HAVE_AVX2)
    if (backend_available(Backend::Avx2))
        return Backend::Avx2;
#endif
#if defined(RESLAB_HAVE_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

struct Table {
    detail::EvalFn eval;
    detail::ResidFn resid;
};

Table table_for(Backend b) {
    switch (b) {
#if defined(RESLAB_HAVE_AVX2)
    case Backend::Avx2:
        return {detail::s21_eval_avx2, detail::s21_resid_avx2};
#endif
#if defined(RESLAB_HAVE_NEON)
    case Backend::Neon:
        return {detail::s21_eval_neon, detail::s21_resid_neon};
#endif
    default:
        return {detail::s21_eval_scalar, detail::s21_resid_scalar};
    }
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{pick_default()};
    return b;
}

} // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "?";
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw DomainError(std::string("kernel backend '") +
                          std::string(backend_name(b)) +
                          "' not available on this machine");
    current().store(b, std::memory_order_relaxed);
}

void s21_eval(std::span<const double> freqs, const S21Params& p,
              std::span<double> out_re, std::span<double> out_im) {
    if (out_re.size() != freqs.size() || out_im.size() != freqs.size())
        throw DomainError("s21_eval: output spans must match freqs length");
    table_for(active_backend()).eval(freqs.data(), freqs.size(), p,
                                     out_re.data(), out_im.data());
}

void s21_residuals(std::span<const double> freqs,
                   std::span<const double> data_re,
                   std::span<const double> data_im,
                   const S21Params& p,
                   std::span<double> out) {
    const std::size_t n = freqs.size();
    if (data_re.size() != n || data_im.size() != n)
        throw DomainError("s21_residuals: data spans must match freqs length");
    if (out.size() != 2 * n)
        throw DomainError("s21_residuals: output span must have length 2n");
    table_for(active_backend()).resid(freqs.data(), data_re.data(),
                                      data_im.data(), n, p, out.data());
}

} // namespace reslab::kernels
