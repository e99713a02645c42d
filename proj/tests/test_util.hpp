#pragma once

#include <algorithm>
#include <cmath>

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
