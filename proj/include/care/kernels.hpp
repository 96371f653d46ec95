#pragma once

#include <cstddef>
#include <span>

// Data-parallel primitives behind the GLM and estimator inner loops.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The unqualified entry points dispatch once per process
// based on CPUID; setting CARE_FORCE_SCALAR=1 in the environment pins the
// scalar path. Both variants of a kernel are exported so the test suite can
// check them against each other on the same inputs.
//
// Reductions accumulate in four independent lanes and fold them in a fixed
// order, so results are deterministic for a given backend but may differ from
// the scalar path in the last few ulps.

namespace care::kernels {

enum class Backend { Scalar, Avx2 };

// Backend selected for this process.
Backend active();
const char* backend_name(Backend b);

// sum_i x[i]
double sum(std::span<const double> x);
// sum_i x[i] * y[i]
double dot(std::span<const double> x, std::span<const double> y);
// sum_i w[i] * x[i] * y[i]
double wdot(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);
// out[i] = exp(x[i])
void vexp(std::span<const double> x, std::span<double> out);
// out[i] = 1 / (1 + exp(-x[i]))
void vsigmoid(std::span<const double> x, std::span<double> out);

namespace scalar {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double wdot(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void vexp(std::span<const double> x, std::span<double> out);
void vsigmoid(std::span<const double> x, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CARE_HAVE_AVX2_KERNELS 1
// True when the running CPU supports AVX2 and FMA.
bool cpu_supports_avx2();

namespace avx2 {
// Call these only when cpu_supports_avx2() is true.
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double wdot(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void vexp(std::span<const double> x, std::span<double> out);
void vsigmoid(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#else
#define CARE_HAVE_AVX2_KERNELS 0
#endif

}  // namespace care::kernels
