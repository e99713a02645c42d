#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <string>
#include <type_traits>

namespace smt {

/// 50-digit binary float. Used where a formula cancels too much for double.
using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

template <class T>
T from_decimal(const std::string& s) {
  if constexpr (std::is_same_v<T, double>) {
    return std::stod(s);
  } else {
    return T(s);
  }
}

template <class T>
T pi_v() {
  if constexpr (std::is_same_v<T, double>) {
    return 3.14159265358979323846;
  } else {
    return boost::math::constants::pi<T>();
  }
}

template <class T>
T eps_v() {
  return std::numeric_limits<T>::epsilon();
}

}  // namespace smt
