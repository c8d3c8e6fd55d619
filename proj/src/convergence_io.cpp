#include "qge/convergence_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "qge/errors.hpp"

namespace qge {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw IoFailure("trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw IoFailure("not a number: '" + s + "'");
  }
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_real(s);
}

long parse_integer(const std::string& s) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw IoFailure("not an integer: '" + s + "'");
  return v;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ConvergenceRecord>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << fmt(r.H) << ',' << fmt(r.h) << ',' << r.dofs_H << ',' << r.dofs_h << ',' << fmt(r.e_L2)
       << ',' << fmt(r.order_L2) << ',' << fmt(r.e_H1) << ',' << fmt(r.order_H1) << ','
       << fmt(r.e_H2) << ',' << fmt(r.order_H2) << ',' << fmt(r.time_s) << '\n';
  }
}

std::vector<ConvergenceRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw IoFailure("unexpected CSV header");
  std::vector<ConvergenceRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 11) throw IoFailure("CSV row does not have 11 columns");
    ConvergenceRecord r;
    r.H = parse_real(c[0]);
    r.h = parse_real(c[1]);
    r.dofs_H = parse_integer(c[2]);
    r.dofs_h = parse_integer(c[3]);
    r.e_L2 = parse_real(c[4]);
    r.order_L2 = parse_optional(c[5]);
    r.e_H1 = parse_real(c[6]);
    r.order_H1 = parse_optional(c[7]);
    r.e_H2 = parse_real(c[8]);
    r.order_H2 = parse_optional(c[9]);
    r.time_s = parse_real(c[10]);
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json record_to_json(const ConvergenceRecord& r) {
  return {{"H", r.H},
          {"h", r.h},
          {"dofs_H", r.dofs_H},
          {"dofs_h", r.dofs_h},
          {"e_L2", r.e_L2},
          {"order_L2", optional_json(r.order_L2)},
          {"e_H1", r.e_H1},
          {"order_H1", optional_json(r.order_H1)},
          {"e_H2", r.e_H2},
          {"order_H2", optional_json(r.order_H2)},
          {"time_s", r.time_s}};
}

ConvergenceRecord record_from_json(const nlohmann::json& j) {
  ConvergenceRecord r;
  r.H = j.at("H").get<double>();
  r.h = j.at("h").get<double>();
  r.dofs_H = j.at("dofs_H").get<long>();
  r.dofs_h = j.at("dofs_h").get<long>();
  r.e_L2 = j.at("e_L2").get<double>();
  r.order_L2 = optional_from(j.at("order_L2"));
  r.e_H1 = j.at("e_H1").get<double>();
  r.order_H1 = optional_from(j.at("order_H1"));
  r.e_H2 = j.at("e_H2").get<double>();
  r.order_H2 = optional_from(j.at("order_H2"));
  r.time_s = j.at("time_s").get<double>();
  return r;
}

nlohmann::json table_to_json(const ConvergenceTable& table) {
  nlohmann::json rows = nlohmann::json::array(), info = nlohmann::json::array();
  for (const auto& r : table.rows) rows.push_back(record_to_json(r));
  for (const auto& m : table.info) {
    info.push_back({{"method", m.method}, {"converged", m.converged}, {"iterations", m.iterations}});
  }
  return {{"rows", rows}, {"row_info", info}};
}

ConvergenceTable table_from_json(const nlohmann::json& j) {
  ConvergenceTable t;
  for (const auto& r : j.at("rows")) t.rows.push_back(record_from_json(r));
  for (const auto& m : j.at("row_info")) {
    t.info.push_back({m.at("method").get<std::string>(), m.at("converged").get<bool>(),
                      m.at("iterations").get<int>()});
  }
  return t;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("cannot open '" + path.string() + "' for writing");
  os << text;
  if (!os) throw IoFailure("write to '" + path.string() + "' failed");
}

std::vector<std::filesystem::path> write_gnuplot(const std::filesystem::path& stem,
                                                 const ConvergenceTable& table) {
  std::map<std::string, std::pair<std::string, std::string>> series;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    const std::string method = i < table.info.size() ? table.info[i].method : "rows";
    auto& [tvd, evt] = series[method];
    tvd += std::to_string(r.dofs_h) + ' ' + fmt(r.time_s) + '\n';
    evt += fmt(r.time_s) + ' ' + fmt(r.e_H2) + '\n';
  }
  std::vector<std::filesystem::path> written;
  for (const auto& [method, data] : series) {
    const auto base = stem.string();
    written.emplace_back(base + "_time_vs_dofs_" + method + ".dat");
    write_text_file(written.back(), "# dofs_h time_s\n" + data.first);
    written.emplace_back(base + "_error_vs_time_" + method + ".dat");
    write_text_file(written.back(), "# time_s e_H2\n" + data.second);
  }
  return written;
}

}  // namespace qge
