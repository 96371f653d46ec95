#include "care/kernels.hpp"

#if CARE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>
#include <cstdint>

// AVX2+FMA variants. Compiled with per-function target attributes so the rest
// of the binary stays generic; callers must gate on cpu_supports_avx2().

namespace care::kernels {

bool cpu_supports_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace avx2 {

#define CARE_AVX2 __attribute__((target("avx2,fma")))

namespace {

CARE_AVX2 inline double fold(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s2 = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s2) + _mm_cvtsd_f64(_mm_unpackhi_pd(s2, s2));
}

// exp() on 4 lanes, Cephes-style rational approximation after range
// reduction by ln2. Saturates to 0 below -708.396 and to +inf above
// 709.436 (a hair before the true overflow threshold, so the 2^n scaling
// stays inside the normal exponent range).
CARE_AVX2 inline __m256d exp4(__m256d x) {
    const __m256d hi_cut = _mm256_set1_pd(709.436);
    const __m256d lo_cut = _mm256_set1_pd(-708.396);
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);

    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);

    __m256d over = _mm256_cmp_pd(x, hi_cut, _CMP_GT_OQ);
    __m256d under = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ);
    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo_cut), hi_cut);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, c1, xc);
    r = _mm256_fnmadd_pd(n, c2, r);

    __m256d z = _mm256_mul_pd(r, r);
    __m256d pz = _mm256_fmadd_pd(_mm256_fmadd_pd(p0, z, p1), z, p2);
    pz = _mm256_mul_pd(pz, r);
    __m256d qz = _mm256_fmadd_pd(
        _mm256_fmadd_pd(_mm256_fmadd_pd(q0, z, q1), z, q2), z, q3);
    __m256d e = _mm256_div_pd(pz, _mm256_sub_pd(qz, pz));
    __m256d y = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // scale by 2^n through the exponent bits; |n| <= 1023 after clamping
    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bits =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    y = _mm256_mul_pd(y, _mm256_castsi256_pd(bits));

    y = _mm256_blendv_pd(y, _mm256_set1_pd(HUGE_VAL), over);
    y = _mm256_blendv_pd(y, _mm256_setzero_pd(), under);
    return y;
}

}  // namespace

CARE_AVX2 double sum(std::span<const double> x) {
    const double* p = x.data();
    std::size_t n = x.size(), i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
    double s = fold(acc);
    for (; i < n; ++i) s += p[i];
    return s;
}

CARE_AVX2 double dot(std::span<const double> x, std::span<const double> y) {
    const double* px = x.data();
    const double* py = y.data();
    std::size_t n = x.size(), i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i),
                              acc);
    double s = fold(acc);
    for (; i < n; ++i) s += px[i] * py[i];
    return s;
}

CARE_AVX2 double wdot(std::span<const double> w, std::span<const double> x,
                      std::span<const double> y) {
    const double* pw = w.data();
    const double* px = x.data();
    const double* py = y.data();
    std::size_t n = w.size(), i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
        __m256d xy =
            _mm256_mul_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(pw + i), xy, acc);
    }
    double s = fold(acc);
    for (; i < n; ++i) s += pw[i] * (px[i] * py[i]);
    return s;
}

CARE_AVX2 void axpy(double a, std::span<const double> x, std::span<double> y) {
    const double* px = x.data();
    double* py = y.data();
    std::size_t n = x.size(), i = 0;
    __m256d av = _mm256_set1_pd(a);
    for (; i + 4 <= n; i += 4) {
        __m256d v =
            _mm256_fmadd_pd(av, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i));
        _mm256_storeu_pd(py + i, v);
    }
    for (; i < n; ++i) py[i] += a * px[i];
}

CARE_AVX2 void vexp(std::span<const double> x, std::span<double> out) {
    const double* px = x.data();
    double* po = out.data();
    std::size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(po + i, exp4(_mm256_loadu_pd(px + i)));
    if (i < n) {
        double buf[4] = {0, 0, 0, 0};
        for (std::size_t j = i; j < n; ++j) buf[j - i] = px[j];
        __m256d v = exp4(_mm256_loadu_pd(buf));
        _mm256_storeu_pd(buf, v);
        for (std::size_t j = i; j < n; ++j) po[j] = buf[j - i];
    }
}

CARE_AVX2 void vsigmoid(std::span<const double> x, std::span<double> out) {
    const double* px = x.data();
    double* po = out.data();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = exp4(_mm256_xor_pd(_mm256_loadu_pd(px + i), sign));
        _mm256_storeu_pd(po + i, _mm256_div_pd(one, _mm256_add_pd(one, t)));
    }
    if (i < n) {
        double buf[4] = {0, 0, 0, 0};
        for (std::size_t j = i; j < n; ++j) buf[j - i] = px[j];
        __m256d t = exp4(_mm256_xor_pd(_mm256_loadu_pd(buf), sign));
        _mm256_storeu_pd(buf, _mm256_div_pd(one, _mm256_add_pd(one, t)));
        for (std::size_t j = i; j < n; ++j) po[j] = buf[j - i];
    }
}

#undef CARE_AVX2

}  // namespace avx2
}  // namespace care::kernels

#endif  // CARE_HAVE_AVX2_KERNELS
