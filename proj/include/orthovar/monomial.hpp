#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace orthovar {

// Exponent vector over a fixed variable list. The ambient arity is the
// vector length; the owning ring context checks it at construction.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::size_t arity() const { return exponents.size(); }

  int degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  bool is_unit() const {
    for (auto e : exponents)
      if (e) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      r.exponents[i] += o.exponents[i];
    return r;
  }

  bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic order, descending. Variables are ranked in
// declaration order with the LAST declared variable largest, so for the
// projective ring y_(1,1) < ... < y_(3,3) < s. Ties after total degree are
// broken at the first differing exponent slot: the smaller exponent on the
// smaller variable wins.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
      if (a.exponents[i] != b.exponents[i])
        return a.exponents[i] < b.exponents[i];
    }
    return false;
  }
};

}  // namespace orthovar
