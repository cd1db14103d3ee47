#pragma once

#include <optional>
#include <span>

namespace swarmnet {

double mean(std::span<const double> values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_stddev(std::span<const double> values);

struct ConfidenceInterval {
  double low = 0.0;
  double high = 0.0;
  // Set when fewer than two samples were available; low == high == mean.
  bool degenerate = false;
};

// Two-sided Student-t interval for the mean at the given confidence level.
ConfidenceInterval t_interval(std::span<const double> values, double confidence = 0.95);

// Pearson product-moment correlation. Empty when the lengths differ, fewer
// than three pairs are given, or either series has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation: Pearson over ranks, ties share their mean rank.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

}  // namespace swarmnet
