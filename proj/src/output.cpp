#include "qwalk/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qwalk {

void OutputRecord::add_row(std::vector<std::optional<double>> row) {
    if (row.size() != columns.size())
        throw std::logic_error("output row width " + std::to_string(row.size()) + " does not match " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    // to_chars ignores the global locale, unlike printf.
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return {buf, end};
}

std::string to_csv(const OutputRecord& rec) {
    std::string out;
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) out += ',';
        out += rec.columns[i];
    }
    out += '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (row[i]) out += format_number(*row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::ordered_json json_number(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    // Round to the same 12 significant digits as CSV; the JSON writer then
    // prints the shortest string that reads back as that value.
    const std::string text = format_number(*v);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    if (std::abs(rounded) < 1e15 && rounded == std::trunc(rounded)) return static_cast<long long>(rounded);
    return rounded;
}

}  // namespace

std::string to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["schema"] = rec.schema;
    j["columns"] = rec.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        auto jr = nlohmann::ordered_json::array();
        for (const auto& cell : row) jr.push_back(json_number(cell));
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render(const OutputRecord& rec, OutputFormat fmt) {
    return fmt == OutputFormat::Json ? to_json(rec) : to_csv(rec);
}

}  // namespace qwalk
