#pragma once

#include <doctest.h>

#include <cmath>
#include <functional>

#include "hspec/error.hpp"
#include "hspec/tensor.hpp"

// Runs fn and checks that it throws hspec::Error with the given code.
inline void check_throws_code(const std::function<void()>& fn, hspec::ErrorCode code) {
  bool thrown = false;
  try {
    fn();
  } catch (const hspec::Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.code() == code, "got " << hspec::to_string(e.code()) << ": " << e.what());
  }
  CHECK_MESSAGE(thrown, "expected " << hspec::to_string(code));
}

#define CHECK_THROWS_CODE(expr, code) check_throws_code([&] { (void)(expr); }, code)

inline double max_diff(const hspec::Vector& a, const hspec::Vector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Scales x to unit k-norm.
inline hspec::Vector unit_k(hspec::Vector x, int k) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), k);
  s = std::pow(s, 1.0 / k);
  for (double& v : x) v /= s;
  return x;
}
