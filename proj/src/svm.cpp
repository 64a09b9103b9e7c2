#include "argrev/svm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "argrev/formats.hpp"

namespace argrev {

double kernel_value(const KernelSpec& kernel, const SparseVector& a,
                    const SparseVector& b) {
  switch (kernel.kind) {
    case KernelKind::Linear:
      return a.dot(b);
    case KernelKind::Rbf: {
      const double d2 = a.squared_norm() + b.squared_norm() - 2.0 * a.dot(b);
      return std::exp(-kernel.gamma * std::max(d2, 0.0));
    }
  }
  return 0.0;
}

ScalingStats scale_fit(std::span<const SparseVector> train,
                       std::uint32_t dimension) {
  ScalingStats stats;
  stats.dimension = dimension;
  stats.min.assign(dimension, std::numeric_limits<double>::infinity());
  stats.max.assign(dimension, -std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> seen(dimension, 0);
  for (const auto& row : train) {
    for (const auto& [index, value] : row.entries()) {
      if (index >= dimension)
        throw std::invalid_argument("scale_fit: index beyond dimension");
      stats.min[index] = std::min(stats.min[index], value);
      stats.max[index] = std::max(stats.max[index], value);
      ++seen[index];
    }
  }
  const auto rows = static_cast<std::uint32_t>(train.size());
  for (std::uint32_t d = 0; d < dimension; ++d) {
    if (seen[d] < rows || rows == 0) {  // implicit zeros participate
      stats.min[d] = std::min(stats.min[d], 0.0);
      stats.max[d] = std::max(stats.max[d], 0.0);
    }
    if (stats.min[d] < 0.0)
      throw std::invalid_argument(
          "scale_fit: negative feature values are not supported");
  }
  return stats;
}

SparseVector scale_transform(const ScalingStats& stats, const SparseVector& x) {
  // With nonnegative features an absent entry scales to
  // clamp((0 - min) / range) = 0, so only stored entries need transforming.
  SparseVector out;
  for (const auto& [index, value] : x.entries()) {
    if (index >= stats.dimension) continue;  // unseen trailing dims drop to 0
    const double range = stats.max[index] - stats.min[index];
    if (range <= 0.0) continue;
    const double scaled = std::clamp((value - stats.min[index]) / range, 0.0, 1.0);
    out.push_back(index, scaled);
  }
  return out;
}

std::vector<SparseVector> scale_transform(const ScalingStats& stats,
                                          std::span<const SparseVector> rows) {
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(scale_transform(stats, row));
  return out;
}

namespace {

double dense_dot(const double* a, const double* b, std::size_t m) {
  // Four independent accumulators keep the FP pipeline busy.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  for (; k < m; ++k) s0 += a[k] * b[k];
  return (s0 + s1) + (s2 + s3);
}

// Lazily computed kernel rows with FIFO eviction under a fixed memory budget.
// When the training matrix is small enough and dense enough, rows are
// materialised into a contiguous buffer so kernel rows become straight-line
// dense dot products instead of branchy sparse merges.
class KernelCache {
 public:
  KernelCache(std::span<const SparseVector> x, const KernelSpec& kernel,
              std::uint64_t max_evals)
      : x_(x), kernel_(kernel), max_evals_(max_evals) {
    const std::size_t n = x.size();
    if (kernel_.kind == KernelKind::Rbf) {
      norms_.resize(n);
      for (std::size_t i = 0; i < n; ++i) norms_[i] = x[i].squared_norm();
    }
    constexpr std::size_t kBudgetBytes = 256u << 20;
    max_rows_ = std::max<std::size_t>(2, kBudgetBytes / (sizeof(double) * n + 1));

    std::size_t nnz = 0;
    std::uint32_t dim = 0;
    for (const auto& row : x) {
      nnz += row.nnz();
      if (!row.empty()) dim = std::max(dim, row.entries().back().first + 1);
    }
    constexpr std::size_t kDenseBudgetBytes = 192u << 20;
    const std::size_t cells = n * static_cast<std::size_t>(dim);
    if (dim > 0 && cells * sizeof(double) <= kDenseBudgetBytes &&
        nnz * 8 >= cells) {
      dim_ = dim;
      dense_.assign(cells, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [index, value] : x[i].entries())
          dense_[i * dim_ + index] = value;
    }
  }

  const std::vector<double>& row(std::size_t i) {
    auto it = rows_.find(i);
    if (it != rows_.end()) return it->second;
    const std::size_t n = x_.size();
    evals_ += n;
    if (evals_ > max_evals_)
      throw TrainingError("kernel evaluation budget exhausted (" +
                          std::to_string(max_evals_) + ")");
    std::vector<double> values(n);
    if (dim_ > 0) {
      const double* a = dense_.data() + i * dim_;
      for (std::size_t j = 0; j < n; ++j)
        values[j] = dense_dot(a, dense_.data() + j * dim_, dim_);
    } else {
      for (std::size_t j = 0; j < n; ++j) values[j] = x_[i].dot(x_[j]);
    }
    if (kernel_.kind == KernelKind::Rbf) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d2 = norms_[i] + norms_[j] - 2.0 * values[j];
        values[j] = std::exp(-kernel_.gamma * std::max(d2, 0.0));
      }
    }
    if (rows_.size() >= max_rows_) {
      rows_.erase(order_.front());
      order_.pop_front();
    }
    order_.push_back(i);
    return rows_.emplace(i, std::move(values)).first->second;
  }

 private:
  std::span<const SparseVector> x_;
  KernelSpec kernel_;
  std::uint64_t max_evals_;
  std::uint64_t evals_ = 0;
  std::size_t max_rows_ = 2;
  std::uint32_t dim_ = 0;  // nonzero selects the dense fast path
  std::vector<double> dense_;
  std::vector<double> norms_;
  std::unordered_map<std::size_t, std::vector<double>> rows_;
  std::deque<std::size_t> order_;
};

}  // namespace

SvmModel train_svm(std::span<const SparseVector> x,
                   std::span<const std::int8_t> y, const SvmParams& params,
                   const ScalingStats& scaling) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n)
    throw std::invalid_argument("train_svm: empty input or size mismatch");
  bool has_pos = false, has_neg = false;
  for (std::int8_t label : y) {
    if (label == 1) has_pos = true;
    else if (label == -1) has_neg = true;
    else throw std::invalid_argument("train_svm: labels must be +1 or -1");
  }
  if (!has_pos || !has_neg)
    throw std::invalid_argument("train_svm: both classes required");
  if (params.kernel.kind == KernelKind::Rbf && params.kernel.gamma <= 0.0)
    throw std::invalid_argument("train_svm: rbf kernel needs gamma > 0");
  if (params.c <= 0.0) throw std::invalid_argument("train_svm: c must be positive");

  const double c = params.c;
  KernelCache cache(x, params.kernel, params.max_kernel_evals);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // (Q alpha)_i - 1 at alpha = 0

  const std::uint64_t max_iterations =
      200 * std::max<std::uint64_t>(n, 1000);
  constexpr double kTau = 1e-12;
  double m_value = 0.0, big_m_value = 0.0;

  for (std::uint64_t iter = 0;; ++iter) {
    if (iter >= max_iterations)
      throw TrainingError("SMO iteration limit reached");

    // Maximal violating pair over -y_i grad_i.
    std::ptrdiff_t i = -1, j = -1;
    m_value = -std::numeric_limits<double>::infinity();
    big_m_value = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      const bool in_up = (y[t] == 1 && alpha[t] < c) || (y[t] == -1 && alpha[t] > 0);
      const bool in_low = (y[t] == 1 && alpha[t] > 0) || (y[t] == -1 && alpha[t] < c);
      if (in_up && v > m_value) {
        m_value = v;
        i = static_cast<std::ptrdiff_t>(t);
      }
      if (in_low && v < big_m_value) {
        big_m_value = v;
        j = static_cast<std::ptrdiff_t>(t);
      }
    }
    if (i < 0 || j < 0 || m_value - big_m_value <= params.tol) break;

    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    const std::vector<double>& ki = cache.row(ui);
    const std::vector<double>& kj = cache.row(uj);

    const double old_ai = alpha[ui], old_aj = alpha[uj];
    double quad = ki[ui] + kj[uj] - 2.0 * ki[uj];
    if (quad <= 0.0) quad = kTau;

    if (y[ui] != y[uj]) {
      const double delta = (-grad[ui] - grad[uj]) / quad;
      const double diff = alpha[ui] - alpha[uj];
      alpha[ui] += delta;
      alpha[uj] += delta;
      if (diff > 0.0) {
        if (alpha[uj] < 0.0) { alpha[uj] = 0.0; alpha[ui] = diff; }
      } else {
        if (alpha[ui] < 0.0) { alpha[ui] = 0.0; alpha[uj] = -diff; }
      }
      if (diff > 0.0) {
        if (alpha[ui] > c) { alpha[ui] = c; alpha[uj] = c - diff; }
      } else {
        if (alpha[uj] > c) { alpha[uj] = c; alpha[ui] = c + diff; }
      }
    } else {
      const double delta = (grad[ui] - grad[uj]) / quad;
      const double sum = alpha[ui] + alpha[uj];
      alpha[ui] -= delta;
      alpha[uj] += delta;
      if (sum > c) {
        if (alpha[ui] > c) { alpha[ui] = c; alpha[uj] = sum - c; }
      } else {
        if (alpha[uj] < 0.0) { alpha[uj] = 0.0; alpha[ui] = sum; }
      }
      if (sum > c) {
        if (alpha[uj] > c) { alpha[uj] = c; alpha[ui] = sum - c; }
      } else {
        if (alpha[ui] < 0.0) { alpha[ui] = 0.0; alpha[uj] = sum; }
      }
    }

    const double dai = alpha[ui] - old_ai;
    const double daj = alpha[uj] - old_aj;
    if (dai == 0.0 && daj == 0.0)
      throw TrainingError("SMO made no progress");
    for (std::size_t t = 0; t < n; ++t)
      grad[t] += y[t] * (y[ui] * ki[t] * dai + y[uj] * kj[t] * daj);
  }

  SvmModel model;
  model.kernel = params.kernel;
  model.c = c;
  model.scaling = scaling;

  // Bias from free support vectors, else the midpoint of the violating gap.
  double free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0 && alpha[t] < c) {
      free_sum += -y[t] * grad[t];
      ++free_count;
    }
  }
  model.bias = free_count > 0 ? free_sum / static_cast<double>(free_count)
                              : (m_value + big_m_value) / 2.0;

  double objective = 0.0;
  for (std::size_t t = 0; t < n; ++t)
    objective += 0.5 * alpha[t] * (1.0 - grad[t]);
  model.dual_objective = objective;

  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] <= 0.0) continue;
    model.support_vectors.push_back(x[t]);
    model.dual_coefficients.push_back(alpha[t] * y[t]);
  }
  return model;
}

double decision_value(const SvmModel& model, const SparseVector& x_scaled) {
  double sum = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i)
    sum += model.dual_coefficients[i] *
           kernel_value(model.kernel, model.support_vectors[i], x_scaled);
  return sum;
}

std::vector<double> decision_values(const SvmModel& model,
                                    std::span<const SparseVector> x_scaled) {
  const std::size_t m = model.support_vectors.size();
  std::vector<double> out;
  out.reserve(x_scaled.size());

  std::size_t nnz = 0;
  std::uint32_t dim = 0;
  for (const auto& sv : model.support_vectors) {
    nnz += sv.nnz();
    if (!sv.empty()) dim = std::max(dim, sv.entries().back().first + 1);
  }
  constexpr std::size_t kDenseBudgetBytes = 192u << 20;
  const std::size_t cells = static_cast<std::size_t>(dim) * m;
  if (dim == 0 || cells * sizeof(double) > kDenseBudgetBytes ||
      nnz * 8 < cells) {
    for (const auto& x : x_scaled) out.push_back(decision_value(model, x));
    return out;
  }

  // Column-major layout: coordinate index selects a contiguous run over the
  // support vectors, so each input entry becomes one sequential pass.
  std::vector<double> columns(cells, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [index, value] : model.support_vectors[j].entries())
      columns[static_cast<std::size_t>(index) * m + j] = value;
  std::vector<double> sv_norms;
  if (model.kernel.kind == KernelKind::Rbf) {
    sv_norms.reserve(m);
    for (const auto& sv : model.support_vectors)
      sv_norms.push_back(sv.squared_norm());
  }

  std::vector<double> dots(m);
  for (const auto& x : x_scaled) {
    std::fill(dots.begin(), dots.end(), 0.0);
    for (const auto& [index, value] : x.entries()) {
      if (index >= dim) continue;  // every support vector is zero there
      const double* column = columns.data() + static_cast<std::size_t>(index) * m;
      for (std::size_t j = 0; j < m; ++j) dots[j] += column[j] * value;
    }
    double sum = model.bias;
    if (model.kernel.kind == KernelKind::Rbf) {
      const double x_norm = x.squared_norm();
      for (std::size_t j = 0; j < m; ++j) {
        const double d2 = x_norm + sv_norms[j] - 2.0 * dots[j];
        sum += model.dual_coefficients[j] *
               std::exp(-model.kernel.gamma * std::max(d2, 0.0));
      }
    } else {
      for (std::size_t j = 0; j < m; ++j)
        sum += model.dual_coefficients[j] * dots[j];
    }
    out.push_back(sum);
  }
  return out;
}

bool predict(const SvmModel& model, const SparseVector& x_scaled) {
  return decision_value(model, x_scaled) >= 0.0;
}

namespace {

void save_sparse(std::ostream& out, const SparseVector& v) {
  out << v.nnz();
  for (const auto& [index, value] : v.entries())
    out << ' ' << index << ':' << format_double(value);
  out << '\n';
}

SparseVector load_sparse(std::istream& in) {
  std::size_t nnz = 0;
  if (!(in >> nnz)) throw std::runtime_error("svm model: bad sparse vector");
  SparseVector v;
  for (std::size_t i = 0; i < nnz; ++i) {
    std::uint32_t index;
    char colon;
    double value;
    if (!(in >> index >> colon >> value) || colon != ':')
      throw std::runtime_error("svm model: bad sparse entry");
    v.push_back(index, value);
  }
  return v;
}

}  // namespace

void save_model(std::ostream& out, const SvmModel& model) {
  out << "svm-model 1\n";
  out << "kernel " << (model.kernel.kind == KernelKind::Rbf ? "rbf" : "linear")
      << '\n';
  out << "gamma " << format_double(model.kernel.gamma) << '\n';
  out << "c " << format_double(model.c) << '\n';
  out << "bias " << format_double(model.bias) << '\n';
  out << "objective " << format_double(model.dual_objective) << '\n';
  out << "scaling " << model.scaling.dimension << '\n';
  for (std::uint32_t d = 0; d < model.scaling.dimension; ++d)
    out << format_double(model.scaling.min[d]) << ' '
        << format_double(model.scaling.max[d]) << '\n';
  out << "support " << model.support_vectors.size() << '\n';
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    out << format_double(model.dual_coefficients[i]) << ' ';
    save_sparse(out, model.support_vectors[i]);
  }
}

SvmModel load_model(std::istream& in) {
  auto expect = [&](const char* keyword) {
    std::string word;
    if (!(in >> word) || word != keyword)
      throw std::runtime_error(std::string("svm model: expected '") + keyword +
                               "', got '" + word + "'");
  };
  SvmModel model;
  expect("svm-model");
  int version = 0;
  in >> version;
  if (version != 1) throw std::runtime_error("svm model: unsupported version");
  expect("kernel");
  std::string kind;
  in >> kind;
  if (kind == "rbf") model.kernel.kind = KernelKind::Rbf;
  else if (kind == "linear") model.kernel.kind = KernelKind::Linear;
  else throw std::runtime_error("svm model: unknown kernel: " + kind);
  expect("gamma");
  in >> model.kernel.gamma;
  expect("c");
  in >> model.c;
  expect("bias");
  in >> model.bias;
  expect("objective");
  in >> model.dual_objective;
  expect("scaling");
  in >> model.scaling.dimension;
  model.scaling.min.resize(model.scaling.dimension);
  model.scaling.max.resize(model.scaling.dimension);
  for (std::uint32_t d = 0; d < model.scaling.dimension; ++d)
    in >> model.scaling.min[d] >> model.scaling.max[d];
  expect("support");
  std::size_t count = 0;
  in >> count;
  if (!in) throw std::runtime_error("svm model: truncated header");
  for (std::size_t i = 0; i < count; ++i) {
    double coefficient;
    if (!(in >> coefficient)) throw std::runtime_error("svm model: truncated");
    model.dual_coefficients.push_back(coefficient);
    model.support_vectors.push_back(load_sparse(in));
  }
  return model;
}

}  // namespace argrev
