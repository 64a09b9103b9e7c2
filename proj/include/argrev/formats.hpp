#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "argrev/feature_selection.hpp"
#include "argrev/feature_vector.hpp"

namespace argrev {

// Sparse matrix with labels, one row per line:
//   label dim:value dim:value ...
// Doubles print with %.17g so a save/load round trip is bit exact.
struct FeatureMatrix {
  std::uint32_t dimension = 0;
  std::vector<std::int8_t> labels;  // +1 / -1
  std::vector<SparseVector> rows;
};

void save_matrix(std::ostream& out, const FeatureMatrix& matrix);
FeatureMatrix load_matrix(std::istream& in);

// Selected-feature manifest, one entry per line:
//   fold TAB family TAB dim TAB dimension_name TAB ig TAB threshold
void save_manifest(std::ostream& out, std::span<const ManifestEntry> entries);
std::vector<ManifestEntry> load_manifest(std::istream& in);

// %.17g formatting used by every text format in this project.
std::string format_double(double value);

}  // namespace argrev
