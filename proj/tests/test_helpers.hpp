#pragma once

// Shared test utilities. taylor_expm is the slow independent oracle for the
// production exponential: a plain 120-term series with Kahan-compensated
// entrywise accumulation and no scaling/squaring, so it shares no code path
// with expm().

#include <Eigen/Dense>

#include "cusphere/rng.hpp"

namespace cusphere::testing {

template <typename Mat>
Mat taylor_expm(const Mat& m, int terms = 120) {
  Mat sum = Mat::Identity();
  Mat carry = Mat::Zero();
  Mat term = Mat::Identity();
  for (int n = 1; n <= terms; ++n) {
    term = (term * m / static_cast<double>(n)).eval();
    const Mat y = term - carry;
    const Mat t = sum + y;
    carry = ((t - sum) - y).eval();
    sum = t;
  }
  return sum;
}

}  // namespace cusphere::testing
