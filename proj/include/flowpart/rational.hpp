#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace flowpart {

/// Exact rational scalar. All certification arithmetic runs on this type;
/// there is no floating point anywhere on a verdict path.
using Rat = mpq_class;
using Int = mpz_class;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_zero_one(const Rat& q) { return q == 0 || q == 1; }

/// Canonical "p/q" rendering; integers render without the "/1" suffix.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  }
  q.canonicalize();
  if (q.get_den() < 0) q = -q;
  return q;
}

}  // namespace flowpart

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
