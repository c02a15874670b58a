#include "fabry/series_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fabry {

namespace {

SeriesFormat detect(const std::string& path, SeriesFormat format) {
  if (format != SeriesFormat::auto_detect) return format;
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return ext == ".csv" ? SeriesFormat::csv : SeriesFormat::jsonl;
}

// Shared row reader; `index_field` is "n" (series) or "k" (polynomial).
std::map<long, cx> read_rows(std::istream& in, SeriesFormat format,
                             const std::string& index_field) {
  std::map<long, cx> rows;
  std::string line;
  long lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    // Trim whitespace-only lines.
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    long idx = 0;
    double re = 0.0, im = 0.0;
    if (format == SeriesFormat::jsonl) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
      }
      if (!j.contains(index_field)) {
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": missing field '" + index_field + "'");
      }
      idx = j.at(index_field).get<long>();
      re = j.value("re", 0.0);
      im = j.value("im", 0.0);
    } else {
      if (!saw_header) {
        saw_header = true;
        const std::string expect = index_field + ",re,im";
        std::string got = line;
        got.erase(got.find_last_not_of(" \t\r") + 1);
        if (got != expect) {
          throw std::runtime_error("csv header must be '" + expect + "', got '" + got + "'");
        }
        continue;
      }
      std::istringstream ss(line);
      std::string cell;
      try {
        if (!std::getline(ss, cell, ',')) throw std::invalid_argument("row");
        idx = std::stol(cell);
        if (!std::getline(ss, cell, ',')) throw std::invalid_argument("row");
        re = std::stod(cell);
        if (!std::getline(ss, cell, ',')) throw std::invalid_argument("row");
        im = std::stod(cell);
      } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": malformed csv row");
      }
    }
    if (rows.count(idx)) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate index " +
                               std::to_string(idx));
    }
    rows.emplace(idx, cx{re, im});
  }
  if (rows.empty()) throw std::runtime_error("no coefficients in input");
  return rows;
}

}  // namespace

CoeffSeq read_coeff_seq(const std::string& path, SeriesFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coeff_seq(in, detect(path, format));
}

CoeffSeq read_coeff_seq(std::istream& in, SeriesFormat format) {
  if (format == SeriesFormat::auto_detect) format = SeriesFormat::jsonl;
  const auto rows = read_rows(in, format, "n");
  if (rows.begin()->first < 0) {
    throw std::runtime_error("series index n must be >= 0");
  }
  const long lo = rows.begin()->first;
  const long hi = rows.rbegin()->first;
  std::vector<cx> coeffs(static_cast<std::size_t>(hi - lo + 1), cx{0.0, 0.0});
  for (const auto& [n, a] : rows) coeffs[static_cast<std::size_t>(n - lo)] = a;
  return {lo, std::move(coeffs)};
}

TrigPoly read_trig_poly(const std::string& path, SeriesFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_trig_poly(in, detect(path, format));
}

TrigPoly read_trig_poly(std::istream& in, SeriesFormat format) {
  if (format == SeriesFormat::auto_detect) format = SeriesFormat::jsonl;
  const auto rows = read_rows(in, format, "k");
  long deg = 0;
  for (const auto& [k, c] : rows) deg = std::max(deg, std::abs(k));
  TrigPoly p(static_cast<int>(deg));
  for (const auto& [k, c] : rows) p.set_coeff(static_cast<int>(k), c);
  return p;
}

}  // namespace fabry
