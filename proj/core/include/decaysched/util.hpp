#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace decaysched {

/// Pairwise (cascade) summation. Order-independent of evaluation context:
/// the result is a pure function of the input sequence.
double pairwise_sum(std::span<const double> xs);

/// Sample mean and standard error of the mean (0 for n <= 1).
struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};
MeanStderr mean_stderr(std::span<const double> xs);

/// Visit every k-subset of `items` in lexicographic order.
void for_each_combination(const std::vector<int>& items, int k,
                          const std::function<void(const std::vector<int>&)>& visit);

/// Visit every subset of `items` of size <= max_size, in lexicographic
/// order of the (sorted) id sequence: {}, {a}, {a,b}, ..., {b}, ...
void for_each_subset_upto(const std::vector<int>& items, int max_size,
                          const std::function<void(const std::vector<int>&)>& visit);

/// printf-style %.9g / %.12g, used everywhere a float goes into a CSV or
/// report so that reruns are byte-identical.
std::string format_g9(double x);
std::string format_g12(double x);

}  // namespace decaysched
