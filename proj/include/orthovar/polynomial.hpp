#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthovar/modular.hpp"
#include "orthovar/monomial.hpp"
#include "orthovar/rational.hpp"

namespace orthovar {

// Ordered variable list shared by all polynomials of one ring. Rings are
// compared by their variable names, so independently constructed rings with
// the same names interoperate (e.g. after file round trips).
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const PolyRing& o) const { return names_ == o.names_; }

  // Homogeneous coordinates of P^{(n-1)^2}: y_(1,1), ..., y_(n-1,n-1)
  // (row major), then s.
  static std::shared_ptr<const PolyRing> projective(int n);
  // t_1, ..., t_n.
  static std::shared_ptr<const PolyRing> signs(int n);
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names);
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Sparse exact multivariate polynomial over the rationals. Terms are kept
// in descending grevlex order; no stored coefficient is zero. Immutable in
// spirit: all operations return new values, so instances can be shared
// freely across threads.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(RingPtr ring);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool uses_variable(std::size_t index) const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  // Accumulate c * m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

  // Canonical form: coprime integer coefficients, positive leading
  // coefficient. Idempotent; the zero polynomial is already canonical.
  Polynomial normalized() const;
  bool is_normalized() const;

  // True when o == c * this for some positive rational c (both nonzero), or
  // both are zero.
  bool proportional(const Polynomial& o, Rational* scalar = nullptr) const;

  // Exact evaluation; the point length must equal the ring arity.
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  // Evaluation at an integer point (exact, fast path for vanishing checks
  // on scaled projective points).
  Rational evaluate(std::span<const Integer> point) const;
  // Modular evaluation; the point is in the Montgomery domain. Empty when
  // the modulus divides a coefficient denominator.
  std::optional<std::uint64_t> evaluate(std::span<const std::uint64_t> point,
                                        const Mod64& field) const;
  // Float value together with the largest absolute single-term
  // contribution, for relative residual tests.
  std::pair<double, double> evaluate_with_scale(
      std::span<const double> point) const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

// Image of p under the ring map sending assigned variables (by name) to the
// given polynomials and every other variable to its namesake in the target
// ring. All images must share one ring; when the assignment is empty the
// target defaults to p's ring.
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment,
                      RingPtr target = nullptr);

// Multiply each term by hvar^(deg p - deg term). hvar must not occur in p.
Polynomial homogenize(const Polynomial& p, std::size_t hvar);
Polynomial homogenize(const Polynomial& p, const std::string& hvar);

// Substitute hvar -> 1 (stays in the same ring).
Polynomial dehomogenize(const Polynomial& p, std::size_t hvar);

// --- text format ----------------------------------------------------------
//
//   # orthovar-poly v1
//   vars: <name> <name> ...
//   <integer coefficient> <e1> ... <ek>     (one term per line, descending)
//
// Writers emit canonical form only; readers reject unnormalized input.
void write_polynomial(std::ostream& os, const Polynomial& p);
Polynomial read_polynomial(std::istream& is);
std::string polynomial_to_string(const Polynomial& p);
Polynomial polynomial_from_string(const std::string& text);

// Human-readable rendering ("3*y_(1,1)^2*s - ..."), for logs and the CLI.
std::string pretty(const Polynomial& p);

}  // namespace orthovar
