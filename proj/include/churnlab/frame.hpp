#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "churnlab/common.hpp"

namespace churnlab {

enum class ColumnKind {
    NumericContinuous,
    NumericDiscrete,
    Categorical,
    BinaryTarget,
    Identifier,
};

std::string column_kind_name(ColumnKind kind);
ColumnKind column_kind_from_name(const std::string& name);

inline bool is_numeric_kind(ColumnKind kind) {
    return kind == ColumnKind::NumericContinuous || kind == ColumnKind::NumericDiscrete;
}

struct ColumnSchema {
    std::string name;
    ColumnKind kind = ColumnKind::NumericContinuous;
    std::vector<std::string> allowed_categories;  // non-empty iff kind == Categorical
};

// Validates the schema-level invariants: unique names, exactly one binary
// target, categories present exactly for categorical columns.
void validate_schema(const std::vector<ColumnSchema>& schema);

std::vector<ColumnSchema> load_schema_json(const std::string& path);
void save_schema_json(const std::vector<ColumnSchema>& schema, const std::string& path);

// Typed column store. Numeric and target cells live in `values`, categorical
// and identifier cells in `labels`; a set missing flag makes the cell value
// meaningless to every consumer.
class Frame {
  public:
    Frame() = default;
    explicit Frame(std::vector<ColumnSchema> schema);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return schema_.size(); }

    const std::vector<ColumnSchema>& schema() const { return schema_; }
    const ColumnSchema& schema(std::size_t col) const { return schema_[col]; }

    // -1 when absent
    int column_index(const std::string& name) const;
    // throws SchemaError when absent
    std::size_t require_column(const std::string& name) const;

    bool is_missing(std::size_t row, std::size_t col) const { return columns_[col].missing[row] != 0; }
    double numeric(std::size_t row, std::size_t col) const { return columns_[col].values[row]; }
    const std::string& label(std::size_t row, std::size_t col) const { return columns_[col].labels[row]; }

    void append_rows(std::size_t count);
    void set_numeric(std::size_t row, std::size_t col, double value);
    void set_label(std::size_t row, std::size_t col, std::string value);
    void set_missing(std::size_t row, std::size_t col);

    // Checks per-cell invariants (categorical membership, binary target
    // domain); throws DataError on violation.
    void validate() const;

    Frame select_rows(const std::vector<std::size_t>& rows) const;

    int target_index() const;  // the unique binary-target column
    // all numeric/target-free modeling columns, in schema order
    std::vector<std::size_t> modeling_columns() const;

    // numeric column as dense vector; missing cells are NaN
    std::vector<double> numeric_column(std::size_t col) const;

    // modeling matrix + target vector + names, for the model stage
    struct Design {
        Matrix x;
        std::vector<double> y;
        std::vector<std::string> feature_names;
    };
    Design design_matrix() const;

  private:
    struct Column {
        std::vector<double> values;
        std::vector<std::string> labels;
        std::vector<std::uint8_t> missing;
    };

    std::vector<ColumnSchema> schema_;
    std::vector<Column> columns_;
    std::size_t n_rows_ = 0;
};

// CSV ingestion: RFC-4180 quoting, UTF-8, mandatory header. Header names
// must match the schema set exactly (order-insensitive). Empty string and
// the literal `NA` (case-sensitive) mark missing cells.
Frame read_csv(const std::string& path, const std::vector<ColumnSchema>& schema);

// Inverse of read_csv; numeric cells use shortest round-trip formatting so
// read_csv(write_csv(f)) reproduces f exactly.
void write_csv(const Frame& frame, const std::string& path);

// Collapses rows identical on all non-identifier columns (missing flags
// included) to their first occurrence, preserving relative order.
Frame deduplicate(const Frame& frame);

}  // namespace churnlab
