#include "care/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace care::kernels {

namespace scalar {

double sum(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double wdot(std::span<const double> w, std::span<const double> x,
            std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void vexp(std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(x[i]);
}

void vsigmoid(std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = 1.0 / (1.0 + std::exp(-x[i]));
}

}  // namespace scalar

namespace {

struct Dispatch {
    Backend backend;
    double (*sum)(std::span<const double>);
    double (*dot)(std::span<const double>, std::span<const double>);
    double (*wdot)(std::span<const double>, std::span<const double>,
                   std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    void (*vexp)(std::span<const double>, std::span<double>);
    void (*vsigmoid)(std::span<const double>, std::span<double>);
};

Dispatch select() {
#if CARE_HAVE_AVX2_KERNELS
    const char* force = std::getenv("CARE_FORCE_SCALAR");
    bool forced_off = force != nullptr && std::strcmp(force, "0") != 0;
    if (!forced_off && cpu_supports_avx2()) {
        return {Backend::Avx2, avx2::sum,  avx2::dot,  avx2::wdot,
                avx2::axpy,    avx2::vexp, avx2::vsigmoid};
    }
#endif
    return {Backend::Scalar, scalar::sum,  scalar::dot,  scalar::wdot,
            scalar::axpy,    scalar::vexp, scalar::vsigmoid};
}

const Dispatch& table() {
    static const Dispatch d = select();
    return d;
}

}  // namespace

Backend active() { return table().backend; }

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

double sum(std::span<const double> x) { return table().sum(x); }

double dot(std::span<const double> x, std::span<const double> y) {
    return table().dot(x, y);
}

double wdot(std::span<const double> w, std::span<const double> x,
            std::span<const double> y) {
    return table().wdot(w, x, y);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    table().axpy(a, x, y);
}

void vexp(std::span<const double> x, std::span<double> out) {
    table().vexp(x, out);
}

void vsigmoid(std::span<const double> x, std::span<double> out) {
    table().vsigmoid(x, out);
}

}  // namespace care::kernels
