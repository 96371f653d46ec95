#pragma once

#include <stdexcept>
#include <string>

namespace care {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A referenced column is absent from the data.
struct MissingColumn : Error {
    explicit MissingColumn(const std::string& column)
        : Error("missing column: " + column), column(column) {}
    std::string column;
};

// The weighted normal equations are rank-deficient.
struct SingularDesign : Error {
    using Error::Error;
};

// Response values lie outside the support of the requested family.
struct InvalidResponse : Error {
    using Error::Error;
};

// A model or estimator specification is malformed.
struct SpecError : Error {
    using Error::Error;
};

// Exposure vector has an empty arm.
struct EmptyArm : Error {
    using Error::Error;
};

// Dataset contains non-finite values or a non-binary exposure.
struct InvalidData : Error {
    using Error::Error;
};

// The outcome model formula names the exposure column.
struct ExposureInOutcomeModel : Error {
    using Error::Error;
};

// Ingestion: follow-up time must be strictly positive.
struct NonPositiveFollowUp : Error {
    using Error::Error;
};

// Ingestion: a {0,1} field held something else.
struct NonBinaryField : Error {
    using Error::Error;
};

// Ingestion: exposure varies within a cluster.
struct InconsistentClusterExposure : Error {
    using Error::Error;
};

// Ingestion: a cluster with no member records.
struct EmptyCluster : Error {
    using Error::Error;
};

// Oracle: a propensity of exactly zero or one.
struct PositivityFailure : Error {
    using Error::Error;
};

// Oracle: an exposure arm with zero marginal probability.
struct DegenerateArm : Error {
    using Error::Error;
};

// Config file or CLI usage problems.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace care
