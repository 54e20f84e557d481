#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace syncwalk {

// Exact rational scalar used for every probability in the library.
// Entropies and redundancies are the only floating-point quantities.
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Vector of exact rationals over the state set; entries >= 0, sum exactly 1.
using ProbabilityVector = RationalVector;

/// Parses "a/b", an integer, or a terminating decimal ("0.25") into a rational.
Rational parse_rational(std::string_view text);

/// Renders a rational as "a/b", or just "a" when the denominator is 1.
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace syncwalk

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
