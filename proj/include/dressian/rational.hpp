#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace dressian {

/// Exact rational scalar used for every height, coordinate and LP entry.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

/// Parses "p/q", "p" or a decimal-free integer literal. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string format_rational(const Rational& value);

}  // namespace dressian
