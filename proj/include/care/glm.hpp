#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "care/data.hpp"

namespace care::glm {

enum class Family { BinomialLogit, PoissonLog };

// IRLS stops when the score sup-norm drops to this value.
inline constexpr double kScoreTolerance = 1e-8;
inline constexpr int kMaxIterations = 100;
// Fitted probabilities are clamped into [floor, 1 - floor] before use
// downstream; keeps inverse-probability weights finite.
inline constexpr double kProbabilityFloor = 1e-6;

struct GlmSpec {
    Family family = Family::BinomialLogit;
    // main-term covariate columns, in design order
    std::vector<std::string> terms;
    bool include_intercept = true;
    // column holding a per-row log-exposure offset; PoissonLog only
    std::optional<std::string> offset;
};

struct FittedGlm {
    GlmSpec spec;
    std::vector<std::string> coef_names;
    std::vector<double> coefficients;  // link scale, intercept first
    bool converged = false;
    int iterations = 0;
    double max_abs_score = std::numeric_limits<double>::infinity();
    // true when a fitted mean sat at the numeric boundary (separation or a
    // diverging linear predictor); such fits are reported as not converged
    bool boundary = false;
};

// Maximum-likelihood fit by iteratively reweighted least squares.
//
// Throws InvalidResponse when the response lies outside the family support,
// MissingColumn for unknown terms, SpecError for a malformed spec, and
// SingularDesign when the weighted normal equations are rank deficient.
// Failure to converge is reported through the flags, not an exception.
FittedGlm fit_glm(const DataTable& data, const GlmSpec& spec,
                  std::string_view response);

// Inverse link applied to the linear predictor (plus offset when present).
// Logistic predictions are clamped to [kProbabilityFloor, 1 - floor].
std::vector<double> predict_response(const FittedGlm& model,
                                     const DataTable& data);

// Linear predictor on the link scale, including any offset.
std::vector<double> linear_predictor(const FittedGlm& model,
                                     const DataTable& data);

}  // namespace care::glm
