#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "clutter_algebra/integer.hpp"

#ifndef CLUTTER_ALGEBRA_DATA_DIR
#define CLUTTER_ALGEBRA_DATA_DIR "data"
#endif

namespace testing {

inline clutter_algebra::IntVector iv(std::initializer_list<long> xs) {
  clutter_algebra::IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline clutter_algebra::RatVector rv(std::initializer_list<const char*> xs) {
  clutter_algebra::RatVector v;
  for (auto x : xs) v.push_back(clutter_algebra::parse_rational(x));
  return v;
}

inline std::string data_file_at(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string data_file(const std::string& name) {
  return data_file_at(std::string(CLUTTER_ALGEBRA_DATA_DIR) + "/" + name);
}

// Laplace expansion; only for tiny matrices.
inline clutter_algebra::Integer laplace_det(const std::vector<clutter_algebra::IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  clutter_algebra::Integer sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<clutter_algebra::IntVector> sub;
    for (std::size_t i = 1; i < n; ++i) {
      clutter_algebra::IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    clutter_algebra::Integer t = m[0][j] * laplace_det(sub);
    sum += (j % 2 ? -t : t);
  }
  return sum;
}

}  // namespace testing
