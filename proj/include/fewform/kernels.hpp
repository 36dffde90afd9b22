#pragma once

namespace fewform {

// Evaluate p(y) = c[0] + c[1] y + ... + c[d] y^d at y = y0 + i*step for
// i = 0..n-1. Every implementation uses the same per-element Horner order
// (plain mul + add, no FMA), so outputs are bit-identical across variants.
void row_eval_scalar(const double* c, int d, double y0, double step, int n, double* out);

#if defined(FEWFORM_HAVE_AVX2)
void row_eval_avx2(const double* c, int d, double y0, double step, int n, double* out);
#endif
#if defined(__ARM_NEON)
void row_eval_neon(const double* c, int d, double y0, double step, int n, double* out);
#endif

using RowEvalFn = void (*)(const double*, int, double, double, int, double*);

// Runtime CPU dispatch: AVX2 or NEON when available, scalar otherwise.
RowEvalFn row_eval_kernel();
const char* row_eval_kernel_name();

}  // namespace fewform
