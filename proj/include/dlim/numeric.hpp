// Exact scalar types and Eigen aliases shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace dlim {

// Expression templates are disabled so that the numbers compose with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for malformed external input (files, command-line values).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parses "a", "-a", "a/b" (optionally surrounded by blanks) into a reduced rational.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

/// Identity matrix over an arbitrary scalar.
template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Scalar>
bool is_zero(const Matrix<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Exact rational embedding of an integer matrix.
RatMatrix to_rational(const IntMatrix& m);

/// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace dlim
