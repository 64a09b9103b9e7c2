#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oracles {
namespace {

constexpr std::uint32_t kTypes = argrev::kComponentTypeCount;

struct Moments {
  double total = 0.0, min = 0.0, max = 0.0, mean = 0.0, variance = 0.0;
};

Moments moments(const std::vector<double>& values) {
  Moments m;
  if (values.empty()) return m;
  m.min = *std::min_element(values.begin(), values.end());
  m.max = *std::max_element(values.begin(), values.end());
  for (double v : values) m.total += v;
  m.mean = m.total / static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - m.mean) * (v - m.mean);
  m.variance = acc / static_cast<double>(values.size());
  return m;
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

std::vector<double> af_dense(std::span<const argrev::ArgumentComponent> components) {
  // Per-type raw value lists, in component input order.
  std::vector<std::vector<double>> tokens(kTypes), letters(kTypes), positions(kTypes);
  for (const auto& c : components) {
    auto t = static_cast<std::size_t>(c.component_type);
    tokens[t].push_back(static_cast<double>(c.token_count));
    letters[t].push_back(static_cast<double>(c.letter_count));
    positions[t].push_back(c.position);
  }

  // Per-type sums and counts, then per-subset aggregates folded in canonical
  // type order (that fold order is part of the feature definition).
  std::vector<double> type_count(kTypes), type_tok(kTypes), type_let(kTypes),
      type_pos(kTypes);
  for (std::size_t t = 0; t < kTypes; ++t) {
    type_count[t] = static_cast<double>(tokens[t].size());
    type_tok[t] = std::accumulate(tokens[t].begin(), tokens[t].end(), 0.0);
    type_let[t] = std::accumulate(letters[t].begin(), letters[t].end(), 0.0);
    type_pos[t] = std::accumulate(positions[t].begin(), positions[t].end(), 0.0);
  }
  std::vector<double> sub_count(128, 0.0), sub_tok(128, 0.0), sub_let(128, 0.0),
      sub_pos(128, 0.0);
  for (std::uint32_t mask = 1; mask <= 127; ++mask) {
    for (std::size_t t = 0; t < kTypes; ++t) {
      if ((mask >> t) & 1u) {
        sub_count[mask] += type_count[t];
        sub_tok[mask] += type_tok[t];
        sub_let[mask] += type_let[t];
        sub_pos[mask] += type_pos[t];
      }
    }
  }

  std::vector<double> out;
  out.reserve(16002 + 3 * 32039);

  // Component level: count ratios over ordered distinct subset pairs.
  for (std::uint32_t a = 1; a <= 127; ++a)
    for (std::uint32_t b = 1; b <= 127; ++b)
      if (b != a) out.push_back(ratio(sub_count[a], sub_count[b]));

  // Token and letter levels: 5 stats per type, ratio of totals, ratio of means.
  for (const auto* series : {&tokens, &letters}) {
    const auto& sub_total = (series == &tokens) ? sub_tok : sub_let;
    for (std::size_t t = 0; t < kTypes; ++t) {
      Moments m = moments((*series)[t]);
      out.push_back(m.total);
      out.push_back(m.min);
      out.push_back(m.max);
      out.push_back(m.mean);
      out.push_back(m.variance);
    }
    for (std::uint32_t a = 1; a <= 127; ++a)
      for (std::uint32_t b = 1; b <= 127; ++b)
        if (b != a) out.push_back(ratio(sub_total[a], sub_total[b]));
    for (std::uint32_t a = 1; a <= 127; ++a)
      for (std::uint32_t b = 1; b <= 127; ++b)
        if (b != a)
          out.push_back(ratio(ratio(sub_total[a], sub_count[a]),
                              ratio(sub_total[b], sub_count[b])));
  }

  // Position level: min, max, mean, variance, sum per type, then ratios.
  for (std::size_t t = 0; t < kTypes; ++t) {
    Moments m = moments(positions[t]);
    out.push_back(m.min);
    out.push_back(m.max);
    out.push_back(m.mean);
    out.push_back(m.variance);
    out.push_back(m.total);
  }
  for (std::uint32_t a = 1; a <= 127; ++a)
    for (std::uint32_t b = 1; b <= 127; ++b)
      if (b != a) out.push_back(ratio(sub_pos[a], sub_pos[b]));
  for (std::uint32_t a = 1; a <= 127; ++a)
    for (std::uint32_t b = 1; b <= 127; ++b)
      if (b != a)
        out.push_back(ratio(ratio(sub_pos[a], sub_count[a]),
                            ratio(sub_pos[b], sub_count[b])));
  return out;
}

namespace {

double entropy_bits(std::uint64_t positives, std::uint64_t total) {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (std::uint64_t part : {positives, total - positives}) {
    if (part == 0) continue;
    double p = static_cast<double>(part) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

std::uint32_t classes_present(std::uint64_t positives, std::uint64_t total) {
  std::uint32_t k = 0;
  if (positives > 0) ++k;
  if (total - positives > 0) ++k;
  return k;
}

}  // namespace

argrev::IgScore information_gain(std::span<const double> column,
                                 std::span<const std::uint8_t> labels) {
  const std::size_t n = column.size();
  std::vector<std::pair<double, std::uint8_t>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {column[i], labels[i]};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::uint64_t pos_total = 0;
  for (auto& [v, l] : pairs) pos_total += l;
  const double h = entropy_bits(pos_total, n);

  double best_gain = 0.0;
  double best_threshold = 0.0;
  double best_left_h = 0.0, best_right_h = 0.0;
  std::uint64_t best_left_n = 0, best_left_pos = 0;
  bool found = false;

  std::uint64_t left_pos = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    left_pos += pairs[i].second;
    if (pairs[i].first == pairs[i + 1].first) continue;
    const std::uint64_t nl = i + 1, nr = n - nl;
    const double hl = entropy_bits(left_pos, nl);
    const double hr = entropy_bits(pos_total - left_pos, nr);
    const double gain = h - (static_cast<double>(nl) / n) * hl -
                        (static_cast<double>(nr) / n) * hr;
    if (!found || gain > best_gain) {
      found = true;
      best_gain = gain;
      best_threshold = (pairs[i].first + pairs[i + 1].first) / 2.0;
      best_left_h = hl;
      best_right_h = hr;
      best_left_n = nl;
      best_left_pos = left_pos;
    }
  }
  if (!found || best_gain <= 0.0) return {};

  // Fayyad-Irani MDL acceptance.
  const std::uint32_t k = classes_present(pos_total, n);
  const std::uint32_t k1 = classes_present(best_left_pos, best_left_n);
  const std::uint32_t k2 =
      classes_present(pos_total - best_left_pos, n - best_left_n);
  const double delta = std::log2(std::pow(3.0, k) - 2.0) -
                       (k * h - k1 * best_left_h - k2 * best_right_h);
  const double bound =
      (std::log2(static_cast<double>(n) - 1.0) + delta) / static_cast<double>(n);
  if (best_gain <= bound) return {};
  return {best_gain, best_threshold};
}

std::optional<QpSolution> svm_dual(const std::vector<std::vector<double>>& kernel,
                                   std::span<const std::int8_t> labels, double c) {
  const std::size_t n = labels.size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q[i][j] = labels[i] * labels[j] * kernel[i][j];

  constexpr double kEps = 1e-9;
  std::optional<QpSolution> best;

  std::uint64_t patterns = 1;
  for (std::size_t i = 0; i < n; ++i) patterns *= 3;

  for (std::uint64_t code = 0; code < patterns; ++code) {
    std::vector<int> state(n);  // 0: alpha=0, 1: alpha=C, 2: free
    {
      std::uint64_t rem = code;
      for (std::size_t i = 0; i < n; ++i) {
        state[i] = static_cast<int>(rem % 3);
        rem /= 3;
      }
    }
    std::vector<std::size_t> free_idx;
    std::vector<double> alpha(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] == 1) alpha[i] = c;
      if (state[i] == 2) free_idx.push_back(i);
    }

    double beta = 0.0;
    if (free_idx.empty()) {
      double balance = 0.0;
      for (std::size_t i = 0; i < n; ++i) balance += labels[i] * alpha[i];
      if (std::abs(balance) > kEps) continue;
    } else {
      // Solve for the free alphas and the equality multiplier beta:
      //   sum_{j free} Q_ij a_j + beta y_i = 1 - sum_{j bound} Q_ij a_j
      //   sum_{i free} y_i a_i = -sum_{j bound} y_j a_j
      const std::size_t f = free_idx.size();
      std::vector<std::vector<double>> m(f + 1, std::vector<double>(f + 2, 0.0));
      for (std::size_t r = 0; r < f; ++r) {
        const std::size_t i = free_idx[r];
        for (std::size_t s = 0; s < f; ++s) m[r][s] = q[i][free_idx[s]];
        m[r][f] = labels[i];
        double rhs = 1.0;
        for (std::size_t j = 0; j < n; ++j)
          if (state[j] == 1) rhs -= q[i][j] * c;
        m[r][f + 1] = rhs;
      }
      for (std::size_t s = 0; s < f; ++s) m[f][s] = labels[free_idx[s]];
      double rhs = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (state[j] == 1) rhs -= labels[j] * c;
      m[f][f + 1] = rhs;

      // Gaussian elimination with partial pivoting.
      const std::size_t dim = f + 1;
      bool singular = false;
      for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r)
          if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-12) {
          singular = true;
          break;
        }
        std::swap(m[col], m[pivot]);
        for (std::size_t r = 0; r < dim; ++r) {
          if (r == col) continue;
          const double factor = m[r][col] / m[col][col];
          for (std::size_t col2 = col; col2 <= dim; ++col2)
            m[r][col2] -= factor * m[col][col2];
        }
      }
      if (singular) continue;
      bool in_box = true;
      for (std::size_t r = 0; r < f; ++r) {
        const double v = m[r][f + 1] / m[r][r];
        if (v < -kEps || v > c + kEps) {
          in_box = false;
          break;
        }
        alpha[free_idx[r]] = std::clamp(v, 0.0, c);
      }
      if (!in_box) continue;
      beta = m[f][f + 1] / m[f][f];
    }

    // KKT check over the full vector.
    std::vector<double> grad(n, -1.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grad[i] += q[i][j] * alpha[j];

    if (free_idx.empty()) {
      // Any beta in the feasible interval certifies optimality.
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        // alpha=0 needs grad_i + beta y_i >= 0; alpha=C needs <= 0.
        const double edge = -grad[i] * labels[i];
        if ((state[i] == 0) == (labels[i] > 0))
          lo = std::max(lo, edge);
        else
          hi = std::min(hi, edge);
      }
      if (lo > hi + 1e-7) continue;
      beta = 0.0;
      if (std::isfinite(lo) && beta < lo) beta = lo;
      if (std::isfinite(hi) && beta > hi) beta = hi;
    }

    bool kkt = true;
    for (std::size_t i = 0; i < n && kkt; ++i) {
      const double slack = grad[i] + beta * labels[i];
      if (state[i] == 0 && slack < -1e-7) kkt = false;
      if (state[i] == 1 && slack > 1e-7) kkt = false;
      if (state[i] == 2 && std::abs(slack) > 1e-7) kkt = false;
    }
    if (!kkt) continue;

    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      obj += alpha[i];
      for (std::size_t j = 0; j < n; ++j) obj -= 0.5 * alpha[i] * q[i][j] * alpha[j];
    }
    if (!best || obj > best->objective + 1e-12) {
      best = QpSolution{alpha, beta, obj};
    }
  }
  return best;
}

double fleiss_kappa(const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t items = table.size();
  const std::size_t categories = table[0].size();
  std::uint64_t raters = 0;
  for (std::uint32_t v : table[0]) raters += v;

  double pbar = 0.0;
  std::vector<double> category_share(categories, 0.0);
  for (const auto& row : table) {
    std::uint64_t same = 0;
    for (std::size_t j = 0; j < categories; ++j) {
      same += static_cast<std::uint64_t>(row[j]) * row[j];
      category_share[j] += row[j];
    }
    pbar += static_cast<double>(same - raters) /
            static_cast<double>(raters * (raters - 1));
  }
  pbar /= static_cast<double>(items);

  double pe = 0.0;
  for (double share : category_share) {
    const double p = share / static_cast<double>(items * raters);
    pe += p * p;
  }
  if (pe == 1.0) return std::numeric_limits<double>::quiet_NaN();
  return (pbar - pe) / (1.0 - pe);
}

}  // namespace oracles
