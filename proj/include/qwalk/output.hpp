#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

enum class OutputFormat { Csv, Json };

/// A named table of numbers. Missing cells are empty in CSV and null in JSON.
struct OutputRecord {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    void add_row(std::vector<std::optional<double>> row);
};

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double v);

/// Header row, then one line per row; ',' separated, '\n' terminated.
std::string to_csv(const OutputRecord& rec);
/// {"schema": ..., "columns": [...], "rows": [[...], ...]}
std::string to_json(const OutputRecord& rec);
std::string render(const OutputRecord& rec, OutputFormat fmt);

}  // namespace qwalk
