#include "care/glm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "care/kernels.hpp"

namespace care::glm {

namespace {

constexpr double kMeanFloor = 1e-10;  // working clamp inside IRLS

struct Design {
    std::vector<std::span<const double>> cols;
    std::vector<std::string> names;
    std::vector<double> ones;
    std::size_t n = 0;
};

Design build_design(const DataTable& data, const GlmSpec& spec) {
    Design d;
    d.n = data.rows();
    if (spec.include_intercept) {
        d.ones.assign(d.n, 1.0);
        d.cols.emplace_back(d.ones);
        d.names.emplace_back("(intercept)");
    }
    for (const auto& term : spec.terms) {
        d.cols.push_back(data.col(term));
        d.names.push_back(term);
    }
    if (d.cols.empty()) throw SpecError("model has no terms and no intercept");
    return d;
}

void check_spec(const GlmSpec& spec) {
    if (spec.offset && spec.family != Family::PoissonLog)
        throw SpecError("offset is only supported for the Poisson family");
}

void check_response(std::span<const double> y, Family family) {
    for (double v : y) {
        if (family == Family::BinomialLogit) {
            if (v != 0.0 && v != 1.0)
                throw InvalidResponse("logistic response must be 0 or 1");
        } else {
            if (!std::isfinite(v) || v < 0.0 ||
                std::abs(v - std::round(v)) > 1e-8)
                throw InvalidResponse(
                    "Poisson response must be a nonnegative count");
        }
    }
}

// Solve A x = b for symmetric positive definite A (row-major p x p) by
// Cholesky with diagonal pivoting. A pivot collapsing relative to the largest
// diagonal signals rank deficiency.
std::vector<double> solve_spd(std::vector<double> A, std::vector<double> b,
                              std::size_t p,
                              const std::vector<std::string>& names) {
    std::vector<std::size_t> piv(p);
    std::iota(piv.begin(), piv.end(), 0);

    double max_diag = 0.0;
    for (std::size_t k = 0; k < p; ++k)
        max_diag = std::max(max_diag, A[k * p + k]);
    const double tol = 1e-12 * std::max(max_diag, 1e-300);

    for (std::size_t k = 0; k < p; ++k) {
        std::size_t best = k;
        for (std::size_t j = k + 1; j < p; ++j)
            if (A[j * p + j] > A[best * p + best]) best = j;
        if (best != k) {
            for (std::size_t t = 0; t < p; ++t) std::swap(A[k * p + t], A[best * p + t]);
            for (std::size_t t = 0; t < p; ++t) std::swap(A[t * p + k], A[t * p + best]);
            std::swap(b[k], b[best]);
            std::swap(piv[k], piv[best]);
        }
        double d = A[k * p + k];
        if (!(d > tol))
            throw SingularDesign("design is rank deficient at column " +
                                 names[piv[k]]);
        double l = std::sqrt(d);
        A[k * p + k] = l;
        for (std::size_t i = k + 1; i < p; ++i) A[i * p + k] /= l;
        for (std::size_t j = k + 1; j < p; ++j)
            for (std::size_t i = j; i < p; ++i)
                A[i * p + j] -= A[i * p + k] * A[j * p + k];
    }

    // L y = b, then L' z = y
    for (std::size_t i = 0; i < p; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= A[i * p + j] * b[j];
        b[i] = s / A[i * p + i];
    }
    for (std::size_t ii = p; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < p; ++j) s -= A[j * p + ii] * b[j];
        b[ii] = s / A[ii * p + ii];
    }

    std::vector<double> x(p);
    for (std::size_t k = 0; k < p; ++k) x[piv[k]] = b[k];
    return x;
}

void inverse_link(Family family, std::span<const double> eta,
                  std::span<double> mu) {
    if (family == Family::BinomialLogit)
        kernels::vsigmoid(eta, mu);
    else
        kernels::vexp(eta, mu);
}

}  // namespace

FittedGlm fit_glm(const DataTable& data, const GlmSpec& spec,
                  std::string_view response) {
    check_spec(spec);
    Design design = build_design(data, spec);
    auto y = data.col(response);
    check_response(y, spec.family);

    const std::size_t n = design.n;
    const std::size_t p = design.cols.size();
    if (n < p + 1)
        throw SingularDesign("need at least " + std::to_string(p + 1) +
                             " rows to fit " + std::to_string(p) +
                             " coefficients");

    std::span<const double> offset;
    std::vector<double> zero_offset;
    if (spec.offset) {
        offset = data.col(*spec.offset);
    } else {
        zero_offset.assign(n, 0.0);
        offset = zero_offset;
    }

    FittedGlm fit;
    fit.spec = spec;
    fit.coef_names = design.names;
    fit.coefficients.assign(p, 0.0);

    std::vector<double> eta(n), mu(n), w(n), z(n), resid(n);

    // standard starting means
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.family == Family::BinomialLogit) {
            double m = (y[i] + 0.5) / 2.0;
            mu[i] = m;
            eta[i] = std::log(m / (1.0 - m));
        } else {
            double m = y[i] + 0.1;
            mu[i] = m;
            eta[i] = std::log(m);
        }
    }

    const bool binomial = spec.family == Family::BinomialLogit;
    for (int it = 1; it <= kMaxIterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double m = binomial
                           ? std::clamp(mu[i], kMeanFloor, 1.0 - kMeanFloor)
                           : std::max(mu[i], kMeanFloor);
            w[i] = binomial ? m * (1.0 - m) : m;
            z[i] = (eta[i] - offset[i]) + (y[i] - m) / w[i];
        }

        std::vector<double> xtwx(p * p), xtwz(p);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t k = j; k < p; ++k) {
                double v = kernels::wdot(w, design.cols[j], design.cols[k]);
                xtwx[j * p + k] = v;
                xtwx[k * p + j] = v;
            }
            xtwz[j] = kernels::wdot(w, design.cols[j], z);
        }
        fit.coefficients = solve_spd(std::move(xtwx), std::move(xtwz), p,
                                     design.names);

        std::copy(offset.begin(), offset.end(), eta.begin());
        for (std::size_t j = 0; j < p; ++j)
            kernels::axpy(fit.coefficients[j], design.cols[j], eta);
        inverse_link(spec.family, eta, mu);

        for (std::size_t i = 0; i < n; ++i) resid[i] = y[i] - mu[i];
        double score = 0.0;
        for (std::size_t j = 0; j < p; ++j)
            score = std::max(score,
                             std::abs(kernels::dot(design.cols[j], resid)));

        fit.iterations = it;
        fit.max_abs_score = score;
        if (score <= kScoreTolerance) break;
    }

    for (std::size_t i = 0; i < n; ++i) {
        bool at_edge = binomial ? (mu[i] < kProbabilityFloor ||
                                   mu[i] > 1.0 - kProbabilityFloor)
                                : mu[i] < kMeanFloor;
        if (at_edge) {
            fit.boundary = true;
            break;
        }
    }
    fit.converged = fit.max_abs_score <= kScoreTolerance && !fit.boundary;
    return fit;
}

std::vector<double> linear_predictor(const FittedGlm& model,
                                     const DataTable& data) {
    const std::size_t n = data.rows();
    std::vector<double> eta(n, 0.0);
    if (model.spec.offset) {
        auto off = data.col(*model.spec.offset);
        std::copy(off.begin(), off.end(), eta.begin());
    }
    std::size_t j = 0;
    if (model.spec.include_intercept) {
        double b0 = model.coefficients[0];
        for (double& v : eta) v += b0;
        j = 1;
    }
    for (const auto& term : model.spec.terms)
        kernels::axpy(model.coefficients[j++], data.col(term), eta);
    return eta;
}

std::vector<double> predict_response(const FittedGlm& model,
                                     const DataTable& data) {
    std::vector<double> eta = linear_predictor(model, data);
    std::vector<double> out(eta.size());
    inverse_link(model.spec.family, eta, out);
    if (model.spec.family == Family::BinomialLogit) {
        for (double& v : out)
            v = std::clamp(v, kProbabilityFloor, 1.0 - kProbabilityFloor);
    } else {
        for (double& v : out) v = std::max(v, 1e-300);
    }
    return out;
}

}  // namespace care::glm
