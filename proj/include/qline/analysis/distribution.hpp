#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qline::analysis {

/// A distribution over labelled outcomes, either exact or estimated from counts.
struct Distribution {
  std::vector<std::string> labels;
  std::vector<double> probabilities;
  std::optional<std::vector<std::uint64_t>> counts;
  std::uint64_t shots = 0;

  /// Throws std::invalid_argument unless probabilities are nonnegative and
  /// sum to 1 within 1e-9.
  static Distribution exact(std::vector<std::string> labels, std::vector<double> probabilities);
  /// Frequencies count/N. Throws if N is 0.
  static Distribution from_counts(std::vector<std::string> labels, std::vector<std::uint64_t> counts);

  void validate() const;
  std::size_t size() const { return labels.size(); }
  /// 1 sigma Poisson error sqrt(count)/N per outcome; zeros for exact distributions.
  std::vector<double> sigma() const;
};

/// The four two-bit outcome labels "00", "01", "10", "11" (m1 m2).
const std::vector<std::string>& two_bit_labels();

/// Mean absolute difference sum_i |p_i - q_i| / N. Throws on label mismatch.
double avg_distance(const Distribution& p, const Distribution& q);

/// avg_distance to the uniform distribution on the same labels.
double distance_from_uniform(const Distribution& p);

}  // namespace qline::analysis
