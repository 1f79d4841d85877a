#include "decaysched/util.hpp"

#include <cmath>
#include <cstdio>

namespace decaysched {

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

MeanStderr mean_stderr(std::span<const double> xs) {
  MeanStderr out;
  const std::size_t n = xs.size();
  if (n == 0) return out;
  out.mean = pairwise_sum(xs) / static_cast<double>(n);
  if (n == 1) return out;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = xs[i] - out.mean;
    sq[i] = d * d;
  }
  const double ss = pairwise_sum(sq);
  out.stderr_ = std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)));
  return out;
}

namespace {

void combinations_rec(const std::vector<int>& items, int k, std::size_t start,
                      std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == k) {
    visit(current);
    return;
  }
  const int missing = k - static_cast<int>(current.size());
  for (std::size_t i = start; i + missing <= items.size(); ++i) {
    current.push_back(items[i]);
    combinations_rec(items, k, i + 1, current, visit);
    current.pop_back();
  }
}

void subsets_rec(const std::vector<int>& items, int max_size, std::size_t start,
                 std::vector<int>& current,
                 const std::function<void(const std::vector<int>&)>& visit) {
  visit(current);
  if (static_cast<int>(current.size()) == max_size) return;
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    subsets_rec(items, max_size, i + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_combination(const std::vector<int>& items, int k,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > static_cast<int>(items.size())) return;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(k));
  combinations_rec(items, k, 0, current, visit);
}

void for_each_subset_upto(const std::vector<int>& items, int max_size,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (max_size < 0) return;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(max_size));
  subsets_rec(items, max_size, 0, current, visit);
}

std::string format_g9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string format_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace decaysched
