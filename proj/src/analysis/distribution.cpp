#include "qline/analysis/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qline::analysis {

Distribution Distribution::exact(std::vector<std::string> labels, std::vector<double> probabilities) {
  Distribution d{std::move(labels), std::move(probabilities), std::nullopt, 0};
  d.validate();
  return d;
}

Distribution Distribution::from_counts(std::vector<std::string> labels, std::vector<std::uint64_t> counts) {
  if (labels.size() != counts.size()) throw std::invalid_argument("Distribution: one count per label");
  const std::uint64_t n = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (n == 0) throw std::invalid_argument("Distribution: no counts");
  std::vector<double> p;
  for (auto c : counts) p.push_back(static_cast<double>(c) / static_cast<double>(n));
  Distribution d{std::move(labels), std::move(p), std::move(counts), n};
  d.validate();
  return d;
}

void Distribution::validate() const {
  if (labels.empty() || labels.size() != probabilities.size()) {
    throw std::invalid_argument("Distribution: one probability per label");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("Distribution: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("Distribution: probabilities must sum to 1");
}

std::vector<double> Distribution::sigma() const {
  std::vector<double> s(size(), 0.0);
  if (!counts) return s;
  for (std::size_t i = 0; i < size(); ++i) {
    s[i] = std::sqrt(static_cast<double>((*counts)[i])) / static_cast<double>(shots);
  }
  return s;
}

const std::vector<std::string>& two_bit_labels() {
  static const std::vector<std::string> labels{"00", "01", "10", "11"};
  return labels;
}

double avg_distance(const Distribution& p, const Distribution& q) {
  if (p.labels != q.labels) throw std::invalid_argument("avg_distance: label sets differ");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += std::abs(p.probabilities[i] - q.probabilities[i]);
  return total / static_cast<double>(p.size());
}

double distance_from_uniform(const Distribution& p) {
  const auto u = Distribution::exact(p.labels, std::vector<double>(p.size(), 1.0 / static_cast<double>(p.size())));
  return avg_distance(p, u);
}

}  // namespace qline::analysis
