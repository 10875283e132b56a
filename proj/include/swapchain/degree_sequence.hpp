#pragma once

#include <cstddef>
#include <vector>

namespace swapchain {

/// Degrees of the two vertex classes, U (size k) and V (size l).
///
/// Both lists are stored non-increasing and bounded by the opposite class
/// size; construction rejects anything else with InvalidDegreeSequence.
/// Equal sums are required for graphicality but are not checked here.
class BipartiteDegreeSequence {
 public:
  BipartiteDegreeSequence() = default;
  BipartiteDegreeSequence(std::vector<int> a, std::vector<int> b);

  const std::vector<int>& a() const noexcept { return a_; }
  const std::vector<int>& b() const noexcept { return b_; }
  std::size_t k() const noexcept { return a_.size(); }
  std::size_t l() const noexcept { return b_.size(); }

  long sum_a() const noexcept;
  long sum_b() const noexcept;
  bool sums_agree() const noexcept { return sum_a() == sum_b(); }

  /// One class has all degrees equal.
  bool is_semi_regular() const noexcept;

  friend bool operator==(const BipartiteDegreeSequence&,
                         const BipartiteDegreeSequence&) = default;

 private:
  std::vector<int> a_;
  std::vector<int> b_;
};

}  // namespace swapchain
