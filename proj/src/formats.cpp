#include "argrev/formats.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace argrev {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void save_matrix(std::ostream& out, const FeatureMatrix& matrix) {
  if (matrix.labels.size() != matrix.rows.size())
    throw std::invalid_argument("save_matrix: labels/rows size mismatch");
  out << "sparse-matrix 1 " << matrix.dimension << ' ' << matrix.rows.size()
      << '\n';
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    out << static_cast<int>(matrix.labels[i]);
    for (const auto& [index, value] : matrix.rows[i].entries())
      out << ' ' << index << ':' << format_double(value);
    out << '\n';
  }
}

FeatureMatrix load_matrix(std::istream& in) {
  std::string keyword;
  int version = 0;
  std::size_t rows = 0;
  FeatureMatrix matrix;
  if (!(in >> keyword >> version >> matrix.dimension >> rows) ||
      keyword != "sparse-matrix" || version != 1)
    throw std::runtime_error("feature matrix: bad header");
  std::string line;
  std::getline(in, line);  // finish the header line
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line))
      throw std::runtime_error("feature matrix: truncated at row " +
                               std::to_string(r));
    std::istringstream fields(line);
    int label_value = 0;
    if (!(fields >> label_value))
      throw std::runtime_error("feature matrix: missing label");
    if (label_value != 1 && label_value != -1)
      throw std::runtime_error("feature matrix: label must be +1 or -1");
    matrix.labels.push_back(static_cast<std::int8_t>(label_value));
    SparseVector row;
    std::string entry;
    while (fields >> entry) {
      const std::size_t colon = entry.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("feature matrix: bad entry '" + entry + "'");
      row.push_back(static_cast<std::uint32_t>(std::stoul(entry.substr(0, colon))),
                    std::stod(entry.substr(colon + 1)));
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

void save_manifest(std::ostream& out, std::span<const ManifestEntry> entries) {
  out << "manifest 1\n";
  for (const auto& entry : entries)
    out << entry.fold << '\t' << family_name(entry.family) << '\t' << entry.dim
        << '\t' << entry.name << '\t' << format_double(entry.ig) << '\t'
        << format_double(entry.threshold) << '\n';
}

std::vector<ManifestEntry> load_manifest(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "manifest 1")
    throw std::runtime_error("manifest: bad header");
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 6)
      throw std::runtime_error("manifest: expected 6 fields on line " +
                               std::to_string(line_no));
    ManifestEntry entry;
    entry.fold = static_cast<std::uint32_t>(std::stoul(fields[0]));
    const auto family = family_from_name(fields[1]);
    if (!family)
      throw std::runtime_error("manifest: unknown family '" + fields[1] + "'");
    entry.family = *family;
    entry.dim = static_cast<std::uint32_t>(std::stoul(fields[2]));
    entry.name = fields[3];
    entry.ig = std::stod(fields[4]);
    entry.threshold = std::stod(fields[5]);
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace argrev
