#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "jshapes/curve.hpp"
#include "jshapes/error.hpp"

namespace testing {

using jshapes::Complex;

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(JSHAPES_DATA_DIR) / name; }

inline jshapes::JordanCurve circle(Complex center, double radius, std::size_t n = 512) {
  std::vector<Complex> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back(center + std::polar(radius, 2 * std::numbers::pi * k / n));
  return jshapes::JordanCurve(pts);
}

inline jshapes::JordanCurve square(std::size_t per_side = 16) {
  const Complex c[5] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
  std::vector<Complex> pts;
  for (int s = 0; s < 4; ++s) {
    for (std::size_t k = 0; k < per_side; ++k) pts.push_back(c[s] + (c[s + 1] - c[s]) * (double(k) / per_side));
  }
  return jshapes::JordanCurve(pts);
}

template <typename F>
jshapes::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const jshapes::Error& e) {
    return e.code();
  }
  return static_cast<jshapes::ErrorCode>(-1);  // nothing thrown
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("jshapes_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
