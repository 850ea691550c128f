#pragma once

#include <span>
#include <vector>

namespace deplen {

// Probability mass over dependency lengths d = 1..d_max(). mass[d - 1] = p(d).
struct LengthPmf {
  std::vector<double> mass;

  int d_max() const { return static_cast<int>(mass.size()); }

  double at(int d) const {
    return d >= 1 && d <= d_max() ? mass[static_cast<std::size_t>(d - 1)] : 0.0;
  }

  double total() const {
    double s = 0.0;
    for (double p : mass) s += p;
    return s;
  }

  double mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i) s += static_cast<double>(i + 1) * mass[i];
    return s;
  }
};

}  // namespace deplen
