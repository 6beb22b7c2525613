#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cheblab/bv.hpp"
#include "cheblab/modforms.hpp"
#include "cheblab/tuples.hpp"

// Tabular reports and their CSV / JSON / SVG renderings.
//
// CSV: one header line per table, reals in fixed notation with 6 decimals,
// tables separated by a blank line, an optional summary line
// "<prefix>,<v1>,<v2>,..." at the end. JSON mirrors the column names.
namespace cheblab::report {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Summary {
  std::string name;    // JSON key
  std::string prefix;  // CSV line prefix, e.g. "#TOTAL"
  std::vector<std::string> fields;
  std::vector<Cell> values;
};

struct Report {
  std::string kind;
  std::vector<std::pair<std::string, Cell>> params;  // JSON only
  std::vector<Table> tables;
  std::optional<Summary> summary;
};

enum class Format { Csv, Json };

std::string render(const Report& r, Format format);

// Writes to a temporary file in the target directory, then renames over path.
void write_atomic(const std::filesystem::path& path, const std::string& contents);
void emit_report(const Report& r, Format format, const std::filesystem::path& path);

// Polyline chart of ys against xs.
std::string render_svg(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& title,
                       const std::string& x_label, const std::string& y_label);

Report from_bv(const bv::BVReport& rep);
Report from_bv_scan(const std::vector<bv::BVReport>& reps);
Report from_clusters(const tuples::ClusterReport& rep);
Report from_disc(const modforms::DiscReport& rep);
Report from_hypothesis(const tuples::HypothesisReport& rep);

}  // namespace cheblab::report
