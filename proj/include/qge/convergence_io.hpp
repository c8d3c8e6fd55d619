#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qge/analysis.hpp"

namespace qge {

inline constexpr const char* kCsvHeader =
    "H,h,dofs_H,dofs_h,e_L2,order_L2,e_H1,order_H1,e_H2,order_H2,time_s";

/// Reals at 17 significant digits; undefined orders are empty cells.
void write_csv(std::ostream& os, const std::vector<ConvergenceRecord>& rows);

/// Throws IoFailure on a malformed header or row.
std::vector<ConvergenceRecord> read_csv(std::istream& is);

nlohmann::json record_to_json(const ConvergenceRecord& row);
ConvergenceRecord record_from_json(const nlohmann::json& j);

/// {"rows": [...], "row_info": [...]}; undefined orders are null.
nlohmann::json table_to_json(const ConvergenceTable& table);
ConvergenceTable table_from_json(const nlohmann::json& j);

/// Two-column files per method: <stem>_time_vs_dofs_<method>.dat (dofs_h, time_s)
/// and <stem>_error_vs_time_<method>.dat (time_s, e_H2). Returns the paths written.
std::vector<std::filesystem::path> write_gnuplot(const std::filesystem::path& stem,
                                                 const ConvergenceTable& table);

/// Writes text to path, creating parent directories. Throws IoFailure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qge
