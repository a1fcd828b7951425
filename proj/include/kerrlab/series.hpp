#ifndef KERRLAB_SERIES_HPP
#define KERRLAB_SERIES_HPP

#include <stdexcept>
#include <string>

namespace kerrlab {

/// Truncation policy for the double series over (n1, n2). Both indices are capped at a common
/// order N, starting at initial_order and doubling until the outermost shell
/// (max(n1, n2) = N - 1) contributes less than shell_tolerance in absolute value.
struct SeriesControl {
  int initial_order = 32;
  int max_order = 512;
  double shell_tolerance = 1e-12;

  bool operator==(const SeriesControl&) const = default;
};

/// The series did not meet its tolerance at the order cap.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_bound, int order)
      : std::runtime_error(what + " (achieved shell bound " + std::to_string(achieved_bound) + " at order " +
                           std::to_string(order) + ")"),
        achieved_bound_(achieved_bound),
        order_(order) {}

  double achieved_bound() const { return achieved_bound_; }
  int order() const { return order_; }

 private:
  double achieved_bound_;
  int order_;
};

/// A closed-form evaluator was called outside the parameter region where it holds.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kerrlab

#endif  // KERRLAB_SERIES_HPP
