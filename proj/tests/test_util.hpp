#pragma once

#include <functional>
#include <string>

#include "doctest.h"
#include "circnet/error.hpp"

#include "circnet/scalar.hpp"

inline circnet::Rational R(const std::string& text) { return circnet::parse_rational(text); }
inline circnet::Rational R(long long p, long long q = 1) { return circnet::Rational(p, q); }

// Row-major exact matrix from a list of rows.
inline circnet::Matrix<circnet::Rational> rmat(std::initializer_list<std::initializer_list<circnet::Rational>> rows) {
  const auto nr = static_cast<circnet::Index>(rows.size());
  const auto nc = static_cast<circnet::Index>(rows.begin()->size());
  circnet::Matrix<circnet::Rational> m(nr, nc);
  circnet::Index i = 0;
  for (const auto& row : rows) {
    circnet::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Kind of the circnet::Error thrown by f; fails the test if nothing is thrown.
inline circnet::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const circnet::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return circnet::ErrorKind::Parse;
}
