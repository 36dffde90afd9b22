#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "fewform/kernels.hpp"

namespace fewform {

// Same per-lane operation order as the scalar kernel: y = y0 + i*step,
// then plain mul + add Horner (no FMA), so results match bit for bit.
void row_eval_avx2(const double* c, int d, double y0, double step, int n, double* out) {
    const __m256d vy0 = _mm256_set1_pd(y0);
    const __m256d vstep = _mm256_set1_pd(step);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d idx = _mm256_set_pd(static_cast<double>(i + 3), static_cast<double>(i + 2),
                                    static_cast<double>(i + 1), static_cast<double>(i));
        __m256d y = _mm256_add_pd(vy0, _mm256_mul_pd(idx, vstep));
        __m256d acc = _mm256_set1_pd(c[d]);
        for (int k = d - 1; k >= 0; --k)
            acc = _mm256_add_pd(_mm256_mul_pd(acc, y), _mm256_set1_pd(c[k]));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        double y = y0 + static_cast<double>(i) * step;
        double acc = c[d];
        for (int k = d - 1; k >= 0; --k) acc = acc * y + c[k];
        out[i] = acc;
    }
}

}  // namespace fewform

#endif
