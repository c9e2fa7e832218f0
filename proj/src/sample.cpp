#include "expratio/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace expratio {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("Sample: need at least 2 observations, got " +
                                    std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v))
            throw std::invalid_argument("Sample: non-finite value at index " + std::to_string(i));
        if (!(v > 0.0))
            throw std::invalid_argument("Sample: non-positive value " + std::to_string(v) +
                                        " at index " + std::to_string(i));
    }
}

}  // namespace expratio
