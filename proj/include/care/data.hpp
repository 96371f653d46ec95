#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "care/errors.hpp"

namespace care {

// Rectangular table of named double columns. Column order is insertion order.
class DataTable {
public:
    DataTable() = default;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return names_.size(); }

    bool has(std::string_view name) const { return find(name) >= 0; }

    std::span<const double> col(std::string_view name) const {
        int i = find(name);
        if (i < 0) throw MissingColumn(std::string(name));
        return cols_[static_cast<std::size_t>(i)];
    }

    // Adds a column; every column must have the same length.
    void add(std::string name, std::vector<double> values) {
        if (!names_.empty() && values.size() != rows_)
            throw InvalidData("column " + name + " has " +
                              std::to_string(values.size()) + " rows, expected " +
                              std::to_string(rows_));
        if (has(name)) throw InvalidData("duplicate column: " + name);
        rows_ = values.size();
        names_.push_back(std::move(name));
        cols_.push_back(std::move(values));
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    int find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    std::vector<std::string> names_;
    std::vector<std::vector<double>> cols_;
    std::size_t rows_ = 0;
};

// Analysis-ready unit-level data: covariate columns plus a binary exposure
// and a numeric outcome, all held in one table. Construction validates that
// the exposure is strictly {0,1} with both arms occupied and that no value
// anywhere is missing or non-finite.
class ClusterDataset {
public:
    ClusterDataset(DataTable table, std::string exposure_column,
                   std::string outcome_column);

    const DataTable& table() const { return table_; }
    const std::string& exposure_column() const { return exposure_column_; }
    const std::string& outcome_column() const { return outcome_column_; }

    std::span<const double> outcome() const {
        return table_.col(outcome_column_);
    }
    // exposure as doubles (0.0 / 1.0), convenient for weighting arithmetic
    std::span<const double> exposure() const {
        return table_.col(exposure_column_);
    }

    std::size_t n() const { return table_.rows(); }
    std::size_t n_exposed() const { return n_exposed_; }
    std::size_t n_unexposed() const { return n() - n_exposed_; }

private:
    DataTable table_;
    std::string exposure_column_;
    std::string outcome_column_;
    std::size_t n_exposed_ = 0;
};

}  // namespace care
