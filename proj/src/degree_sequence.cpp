#include "swapchain/degree_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "swapchain/errors.hpp"

namespace swapchain {

namespace {

void validate(const std::vector<int>& xs, std::size_t bound, const char* name) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) {
      throw Error(ErrorCode::InvalidDegreeSequence,
                  std::string(name) + " has a negative entry");
    }
    if (static_cast<std::size_t>(xs[i]) > bound) {
      throw Error(ErrorCode::InvalidDegreeSequence,
                  std::string(name) + "[" + std::to_string(i) + "] = " +
                      std::to_string(xs[i]) + " exceeds the other class size " +
                      std::to_string(bound));
    }
    if (i > 0 && xs[i] > xs[i - 1]) {
      throw Error(ErrorCode::InvalidDegreeSequence,
                  std::string(name) + " is not non-increasing");
    }
  }
}

}  // namespace

BipartiteDegreeSequence::BipartiteDegreeSequence(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  validate(a_, b_.size(), "a");
  validate(b_, a_.size(), "b");
}

long BipartiteDegreeSequence::sum_a() const noexcept {
  return std::accumulate(a_.begin(), a_.end(), 0L);
}

long BipartiteDegreeSequence::sum_b() const noexcept {
  return std::accumulate(b_.begin(), b_.end(), 0L);
}

bool BipartiteDegreeSequence::is_semi_regular() const noexcept {
  auto constant = [](const std::vector<int>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
  };
  return constant(a_) || constant(b_);
}

}  // namespace swapchain
