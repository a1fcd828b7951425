#ifndef KERRLAB_SRC_SERIES_DETAIL_HPP
#define KERRLAB_SRC_SERIES_DETAIL_HPP

#include <algorithm>
#include <vector>

#include "kerrlab/series.hpp"
#include "kerrlab/special_functions.hpp"

namespace kerrlab::detail {

/// ln n! for n = 0..4095, built once.
inline double log_fact(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> v(4096);
    for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = log_factorial(i);
    return v;
  }();
  return n < static_cast<int>(table.size()) ? table[n] : log_factorial(n);
}

template <typename T>
struct ShellSum {
  T value;
  double shell;  // absolute size of the outermost shell
};

/// Re-evaluates eval(order) with order doubling from control.initial_order until the shell
/// bound drops below control.shell_tolerance.
template <typename Eval>
auto sum_until_converged(const SeriesControl& control, const char* what, Eval&& eval) {
  int order = std::max(2, control.initial_order);
  for (;;) {
    const auto result = eval(order);
    if (result.shell < control.shell_tolerance) return result.value;
    if (order >= control.max_order) throw TruncationError(what, result.shell, order);
    order = std::min(2 * order, control.max_order);
  }
}

}  // namespace kerrlab::detail

#endif  // KERRLAB_SRC_SERIES_DETAIL_HPP
