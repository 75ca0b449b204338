#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>

#include "orthovar/rational.hpp"
#include "orthovar/rng.hpp"

namespace orthovar {

// Scalar policy: exact types compare against literal zero, floating types
// against an entrywise tolerance. The orthogonality / stochasticity
// tolerance (1e-12) is deliberately tighter than the membership tolerance
// used by the variety checks (1e-9), so the two error budgets stay apart.
template <typename Scalar>
struct ScalarPolicy;

template <>
struct ScalarPolicy<Rational> {
  static constexpr bool exact = true;
  static bool near_zero(const Rational& x) { return sgn(x) == 0; }
  static bool nonnegative(const Rational& x) { return sgn(x) >= 0; }
};

template <>
struct ScalarPolicy<double> {
  static constexpr bool exact = false;
  static constexpr double tol = 1e-12;
  static bool near_zero(double x) { return x <= tol && x >= -tol; }
  static bool nonnegative(double x) { return x >= -tol; }
};

// n x n matrix V with V V^T = I (exactly, or entrywise within 1e-12).
template <typename Scalar>
class OrthogonalMatrix {
 public:
  explicit OrthogonalMatrix(DenseMatrix<Scalar> entries)
      : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
      throw std::invalid_argument("orthogonal matrix must be square");
    DenseMatrix<Scalar> g = m_ * m_.transpose();
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        Scalar want = (i == j) ? Scalar(1) : Scalar(0);
        if (!ScalarPolicy<Scalar>::near_zero(g(i, j) - want))
          throw std::invalid_argument("matrix is not orthogonal");
      }
  }

  int n() const { return static_cast<int>(m_.rows()); }
  const DenseMatrix<Scalar>& entries() const { return m_; }

 private:
  DenseMatrix<Scalar> m_;
};

// Nonnegative n x n matrix with unit row and column sums.
template <typename Scalar>
class DoublyStochasticMatrix {
 public:
  explicit DoublyStochasticMatrix(DenseMatrix<Scalar> entries)
      : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
      throw std::invalid_argument("doubly stochastic matrix must be square");
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
      for (Eigen::Index j = 0; j < m_.cols(); ++j)
        if (!ScalarPolicy<Scalar>::nonnegative(m_(i, j)))
          throw std::invalid_argument("negative entry in stochastic matrix");
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      Scalar rs(0), cs(0);
      for (Eigen::Index j = 0; j < m_.cols(); ++j) {
        rs += m_(i, j);
        cs += m_(j, i);
      }
      if (!ScalarPolicy<Scalar>::near_zero(rs - Scalar(1)) ||
          !ScalarPolicy<Scalar>::near_zero(cs - Scalar(1)))
        throw std::invalid_argument("row/column sums are not 1");
    }
  }

  int n() const { return static_cast<int>(m_.rows()); }
  const DenseMatrix<Scalar>& entries() const { return m_; }

 private:
  DenseMatrix<Scalar> m_;
};

// Point of P^{(n-1)^2} in coordinates (y_(1,1), ..., y_(n-1,n-1), s), the
// y block stored row major. Coordinates are defined up to one global
// nonzero scalar.
template <typename Scalar>
class ProjectivePoint {
 public:
  ProjectivePoint(int n, DenseVector<Scalar> coords)
      : n_(n), coords_(std::move(coords)) {
    const Eigen::Index want = static_cast<Eigen::Index>(n - 1) * (n - 1) + 1;
    if (n < 2 || coords_.size() != want)
      throw std::invalid_argument("projective point has wrong length");
    bool all_zero = true;
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
      if (!(coords_[i] == Scalar(0))) all_zero = false;
    if (all_zero)
      throw std::invalid_argument("projective point cannot be all zero");
  }

  int n() const { return n_; }
  const DenseVector<Scalar>& coords() const { return coords_; }
  Scalar y(int i, int j) const {  // 1-indexed block entry
    return coords_[(i - 1) * (n_ - 1) + (j - 1)];
  }
  Scalar s() const { return coords_[coords_.size() - 1]; }

  // Equality as points of projective space (exact cross-ratio test).
  bool same_point(const ProjectivePoint& o) const {
    if (n_ != o.n_) return false;
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
      for (Eigen::Index j = i + 1; j < coords_.size(); ++j)
        if (!(coords_[i] * o.coords_[j] == coords_[j] * o.coords_[i]))
          return false;
    return true;
  }

 private:
  int n_;
  DenseVector<Scalar> coords_;
};

// Cayley transform (I - B)(I + B)^{-1} of a skew-symmetric B; lands in
// SO(n). Throws std::domain_error when I + B is singular.
template <typename Scalar>
OrthogonalMatrix<Scalar> cayley(const DenseMatrix<Scalar>& skew) {
  const Eigen::Index n = skew.rows();
  if (skew.cols() != n)
    throw std::invalid_argument("cayley: matrix must be square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!ScalarPolicy<Scalar>::near_zero(skew(i, j) + skew(j, i)))
        throw std::invalid_argument("cayley: matrix is not skew-symmetric");

  DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(n, n);
  Eigen::FullPivLU<DenseMatrix<Scalar>> lu(id + skew);
  if constexpr (ScalarPolicy<Scalar>::exact) {
    if (lu.determinant() == Scalar(0))
      throw std::domain_error("cayley: I + B is singular");
  } else {
    if (!lu.isInvertible()) throw std::domain_error("cayley: I + B is singular");
  }
  // (I - B) and (I + B)^{-1} commute, so either composition order works.
  DenseMatrix<Scalar> v = lu.solve(id - skew);
  return OrthogonalMatrix<Scalar>(std::move(v));
}

// Entrywise squaring followed by projection to the leading (n-1) x (n-1)
// block, with s = 1.
template <typename Scalar>
ProjectivePoint<Scalar> squaring_project(const OrthogonalMatrix<Scalar>& v) {
  const int n = v.n();
  DenseVector<Scalar> c((n - 1) * (n - 1) + 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      c[i * (n - 1) + j] = v.entries()(i, j) * v.entries()(i, j);
  c[(n - 1) * (n - 1)] = Scalar(1);
  return ProjectivePoint<Scalar>(n, std::move(c));
}

template <typename Scalar>
struct EmbeddedMatrix {
  DenseMatrix<Scalar> entries;
  bool nonnegative = false;

  DoublyStochasticMatrix<Scalar> to_doubly_stochastic() const {
    return DoublyStochasticMatrix<Scalar>(entries);
  }
};

// Dehomogenize (divide by s) and complete the last row and column by the
// unit row/column sum relations. Rejects points at infinity.
template <typename Scalar>
EmbeddedMatrix<Scalar> embed_full(const ProjectivePoint<Scalar>& p) {
  const int n = p.n();
  if (p.s() == Scalar(0))
    throw std::domain_error("embed_full: point at infinity (s = 0)");
  DenseMatrix<Scalar> a(n, n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      a(i, j) = p.coords()[i * (n - 1) + j] / p.s();
  for (int i = 0; i < n - 1; ++i) {
    Scalar rs(0);
    for (int j = 0; j < n - 1; ++j) rs += a(i, j);
    a(i, n - 1) = Scalar(1) - rs;
  }
  for (int j = 0; j < n; ++j) {
    Scalar cs(0);
    for (int i = 0; i < n - 1; ++i) cs += a(i, j);
    a(n - 1, j) = Scalar(1) - cs;
  }
  EmbeddedMatrix<Scalar> out{std::move(a), true};
  for (int i = 0; i < n && out.nonnegative; ++i)
    for (int j = 0; j < n; ++j)
      if (!ScalarPolicy<Scalar>::nonnegative(out.entries(i, j))) {
        out.nonnegative = false;
        break;
      }
  return out;
}

// Skew-symmetric matrix with independent rational entries, numerators
// uniform in [-50, 50] and denominators in [1, 20]. The bounds cap
// coefficient growth in the exact kernels downstream.
inline RationalMatrix random_skew(int n, Rng& rng, long num_bound = 50,
                                  long den_bound = 20) {
  RationalMatrix b = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational q = random_rational(rng, -num_bound, num_bound, den_bound);
      b(i, j) = q;
      b(j, i) = -q;
    }
  return b;
}

// Random exact point of Z_n: skew draw, Cayley, square, project. Resamples
// internally on singular I + B; the seed fully determines the output.
ProjectivePoint<Rational> sample_point(int n, std::uint64_t seed);
ProjectivePoint<double> sample_point_float(int n, std::uint64_t seed);

// Batch helper: point i of a batch uses the mixed seed (seed, i), so
// parallel workers can partition index ranges.
std::vector<ProjectivePoint<Rational>> sample_points(int n, std::uint64_t seed,
                                                     std::size_t count);
std::vector<ProjectivePoint<double>> sample_points_float(int n,
                                                         std::uint64_t seed,
                                                         std::size_t count);

// Primitive integer representative of an exact projective point (clears
// denominators, divides by the content). Speeds up exact vanishing tests.
std::vector<Integer> integer_coordinates(const ProjectivePoint<Rational>& p);

// --- text I/O ---------------------------------------------------------------
// Matrices: one row per line, entries as exact fractions p/q or decimals.
// Points: all (n-1)^2 + 1 coordinates on one line.
void write_matrix(std::ostream& os, const RationalMatrix& m);
void write_matrix(std::ostream& os, const DenseMatrix<double>& m);
RationalMatrix read_rational_matrix(std::istream& is);
DenseMatrix<double> read_double_matrix(std::istream& is);
bool matrix_file_is_exact(const std::string& path);

void write_point(std::ostream& os, const ProjectivePoint<Rational>& p);
void write_point(std::ostream& os, const ProjectivePoint<double>& p);
ProjectivePoint<Rational> read_rational_point(std::istream& is, int n);

}  // namespace orthovar
