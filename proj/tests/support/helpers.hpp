#pragma once

#include <gtest/gtest.h>

#include <albert/error.hpp>
#include <albert/hermitian.hpp>
#include <albert/octonion.hpp>
#include <random>

namespace testing_support {

// Expects `stmt` to throw albert::Error with the given code.
#define EXPECT_ALBERT_ERROR(stmt, errc)                                     \
  do {                                                                      \
    try {                                                                   \
      (void)(stmt);                                                         \
      ADD_FAILURE() << "expected albert::Error(" #errc ")";                 \
    } catch (const albert::Error& e) {                                      \
      EXPECT_EQ(e.code(), errc) << e.what();                                \
    }                                                                       \
  } while (0)

class Sampler {
 public:
  explicit Sampler(unsigned seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  albert::Octonion octonion() {
    albert::Octonion a;
    for (std::size_t n = 0; n < 8; ++n) a[n] = uniform();
    return a;
  }
  albert::Octonion imaginary_unit() {
    albert::Octonion a = octonion();
    a[0] = 0.0;
    return a / a.norm();
  }
  albert::Hermitian3 hermitian() {
    albert::Hermitian3 m;
    for (double& d : m.diag) d = uniform();
    m.o12 = octonion();
    m.o13 = octonion();
    m.o23 = octonion();
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

inline albert::Octonion u(albert::Unit x) { return albert::Octonion::unit(x); }

}  // namespace testing_support
