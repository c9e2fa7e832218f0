#pragma once

#include <cstddef>
#include <vector>

namespace expratio {

// A validated sample of strictly positive observations, n >= 2.
// Both test statistics depend on the data only through ratios X_i / X_j,
// so zeros are rejected at construction (they have probability zero under
// any continuous null anyway). Ties are allowed.
class Sample {
  public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

  private:
    std::vector<double> values_;
};

}  // namespace expratio
