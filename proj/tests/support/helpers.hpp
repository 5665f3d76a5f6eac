#pragma once

#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "z2mem/pauli.hpp"

namespace testing_support {

inline z2mem::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<z2mem::Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {g(rng), g(rng)};
  z2mem::StateVector s(n, std::move(amps));
  s.normalize();
  return s;
}

inline oracle::Vec to_eigen(const z2mem::StateVector& s) {
  oracle::Vec v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

inline z2mem::StateVector from_eigen(int n, const oracle::Vec& v) {
  return z2mem::StateVector(n, std::vector<z2mem::Complex>(v.data(), v.data() + v.size()));
}

inline double max_abs_diff(const oracle::Mat& a, const oracle::Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testing_support
