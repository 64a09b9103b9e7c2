#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "argrev/feature_vector.hpp"

namespace argrev {

enum class KernelKind : std::uint8_t { Linear = 0, Rbf = 1 };

struct KernelSpec {
  KernelKind kind = KernelKind::Rbf;
  double gamma = 0.0;  // > 0 required for rbf
};

double kernel_value(const KernelSpec& kernel, const SparseVector& a,
                    const SparseVector& b);

struct SvmParams {
  KernelSpec kernel;
  double c = 1.0;
  double tol = 1e-3;  // KKT violation tolerance
  std::uint64_t max_kernel_evals = 10'000'000;
};

// Per-dimension min/max over the training matrix, for [0, 1] scaling.
// Implicit zeros of sparse rows count toward min/max. Constant dimensions map
// to 0; transforms clamp to [0, 1].
struct ScalingStats {
  std::uint32_t dimension = 0;
  std::vector<double> min;
  std::vector<double> max;
};

ScalingStats scale_fit(std::span<const SparseVector> train, std::uint32_t dimension);
SparseVector scale_transform(const ScalingStats& stats, const SparseVector& x);
std::vector<SparseVector> scale_transform(const ScalingStats& stats,
                                          std::span<const SparseVector> rows);

class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& message)
      : std::runtime_error(message) {}
};

struct SvmModel {
  KernelSpec kernel;
  double c = 1.0;
  double bias = 0.0;
  std::vector<SparseVector> support_vectors;   // scaled feature space
  std::vector<double> dual_coefficients;       // alpha_i * y_i, nonzero
  ScalingStats scaling;
  double dual_objective = 0.0;  // sum(alpha) - 1/2 sum alpha_i alpha_j y_i y_j K_ij
};

// Soft-margin SMO with maximal-violating-pair working-set selection and a
// fixed scan order, so training is deterministic. Inputs must already be
// scaled; `scaling` is stored in the model for later transforms. Labels are
// +1 / -1 and both classes must be present. Throws TrainingError when the
// kernel-evaluation budget runs out before reaching tol.
SvmModel train_svm(std::span<const SparseVector> x, std::span<const std::int8_t> y,
                   const SvmParams& params, const ScalingStats& scaling);

double decision_value(const SvmModel& model, const SparseVector& x_scaled);

// Decision values for a whole batch of pre-scaled rows. Equivalent to
// decision_value on each row, but lays the support vectors out densely when
// that is profitable, which is much faster for wide, mostly-dense features.
std::vector<double> decision_values(const SvmModel& model,
                                    std::span<const SparseVector> x_scaled);

// Sign of the decision value; an exact 0 maps to the positive class.
bool predict(const SvmModel& model, const SparseVector& x_scaled);

// Versioned text format; reloading reproduces decision values bit-for-bit on
// the same platform.
void save_model(std::ostream& out, const SvmModel& model);
SvmModel load_model(std::istream& in);

}  // namespace argrev
