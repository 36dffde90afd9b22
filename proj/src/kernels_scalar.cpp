#include "fewform/kernels.hpp"

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace fewform {

void row_eval_scalar(const double* c, int d, double y0, double step, int n, double* out) {
    for (int i = 0; i < n; ++i) {
        double y = y0 + static_cast<double>(i) * step;
        double acc = c[d];
        for (int k = d - 1; k >= 0; --k) acc = acc * y + c[k];
        out[i] = acc;
    }
}

#if defined(__ARM_NEON)
void row_eval_neon(const double* c, int d, double y0, double step, int n, double* out) {
    int i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t idx = {static_cast<double>(i), static_cast<double>(i + 1)};
        float64x2_t y = vaddq_f64(vdupq_n_f64(y0), vmulq_f64(idx, vdupq_n_f64(step)));
        float64x2_t acc = vdupq_n_f64(c[d]);
        for (int k = d - 1; k >= 0; --k)
            acc = vaddq_f64(vmulq_f64(acc, y), vdupq_n_f64(c[k]));
        vst1q_f64(out + i, acc);
    }
    if (i < n) row_eval_scalar(c, d, y0 + i * step, step, n - i, out + i);
}
#endif

RowEvalFn row_eval_kernel() {
#if defined(FEWFORM_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return row_eval_avx2;
#endif
#if defined(__ARM_NEON)
    return row_eval_neon;
#endif
    return row_eval_scalar;
}

const char* row_eval_kernel_name() {
#if defined(FEWFORM_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return "avx2";
#endif
#if defined(__ARM_NEON)
    return "neon";
#endif
    return "scalar";
}

}  // namespace fewform
