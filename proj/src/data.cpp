#include "care/data.hpp"

#include <cmath>

namespace care {

ClusterDataset::ClusterDataset(DataTable table, std::string exposure_column,
                               std::string outcome_column)
    : table_(std::move(table)),
      exposure_column_(std::move(exposure_column)),
      outcome_column_(std::move(outcome_column)) {
    if (table_.rows() == 0) throw InvalidData("dataset has no rows");
    for (const auto& name : table_.names()) {
        for (double v : table_.col(name)) {
            if (!std::isfinite(v))
                throw InvalidData("non-finite value in column " + name);
        }
    }
    auto a = table_.col(exposure_column_);
    (void)table_.col(outcome_column_);
    for (double v : a) {
        if (v == 1.0) {
            ++n_exposed_;
        } else if (v != 0.0) {
            throw InvalidData("exposure column " + exposure_column_ +
                              " is not binary");
        }
    }
    if (n_exposed_ == 0 || n_exposed_ == table_.rows())
        throw EmptyArm("exposure column " + exposure_column_ +
                       " has an empty arm");
}

}  // namespace care
