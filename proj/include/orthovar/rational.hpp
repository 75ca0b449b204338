#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>

#include "orthovar/rng.hpp"

namespace orthovar {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

inline double to_double(const Rational& q) { return q.get_d(); }

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

// Exact square root when the argument is a perfect square of a rational;
// empty otherwise. Nonnegative root is returned.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  Integer num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// Uniform rational with numerator in [num_lo, num_hi] and denominator in
// [1, den_hi], before canonicalization.
inline Rational random_rational(Rng& rng, long num_lo, long num_hi,
                                long den_hi) {
  Rational q(rng.range(num_lo, num_hi), rng.range(1, den_hi));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace orthovar

namespace Eigen {

// Exact rational scalar for dense kernels (LU rank/solve, matrix products).
template <>
struct NumTraits<orthovar::Rational> : GenericNumTraits<orthovar::Rational> {
  typedef orthovar::Rational Real;
  typedef orthovar::Rational NonInteger;
  typedef orthovar::Rational Nested;

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
    MulCost = 100
  };
};

}  // namespace Eigen
