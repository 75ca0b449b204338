#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orthovar/rational.hpp"
#include "orthovar/rng.hpp"

namespace orthovar {

// Montgomery arithmetic modulo an odd prime p < 2^63. All mul/add/sub/inv
// operate on values in the Montgomery domain; to()/from() convert.
class Mod64 {
 public:
  explicit Mod64(std::uint64_t p);

  std::uint64_t prime() const { return p_; }

  std::uint64_t to(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from(std::uint64_t x) const {
    return reduce(static_cast<unsigned __int128>(x));
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t one() const { return one_; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = one_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // Inverse in the Montgomery domain; a must be nonzero mod p.
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  // Reduce an arbitrary-precision integer / rational into the Montgomery
  // domain. reduce_rational fails (nullopt) when p divides the denominator.
  std::uint64_t to_mod(const Integer& z) const;
  std::optional<std::uint64_t> to_mod(const Rational& q) const;

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_ = 0;
  std::uint64_t ninv_ = 0;  // -p^{-1} mod 2^64
  std::uint64_t r2_ = 0;    // 2^128 mod p
  std::uint64_t one_ = 0;   // 2^64 mod p
};

// Random prime in (2^61, 2^62), distinct from `avoid`.
std::uint64_t random_prime_62(Rng& rng, const std::vector<std::uint64_t>& avoid);

// Chinese remainders: value mod (prod moduli), residues given per modulus.
Integer crt(const std::vector<std::uint64_t>& residues,
            const std::vector<std::uint64_t>& moduli, Integer& modulus_out);

// Wang rational reconstruction: find n/d with |n|, d <= sqrt(m/2),
// n = a*d mod m, gcd(n, d) = 1. Empty on failure.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

// Dense matrix over F_p in the Montgomery domain, row major.
class ModMatrix {
 public:
  ModMatrix(const Mod64& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Mod64& field() const { return field_; }

  std::uint64_t* row(std::size_t r) { return a_.data() + r * cols_; }
  const std::uint64_t* row(std::size_t r) const { return a_.data() + r * cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

 private:
  Mod64 field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

struct ModNullspace {
  std::vector<std::size_t> pivots;  // pivot column indices, ascending
  // One basis vector per free column, in standard (non-Montgomery) domain.
  // Vector for free column f has entry 1 at f and -rref(r, f) at pivot r.
  std::vector<std::vector<std::uint64_t>> basis;
};

// Destructive reduced row echelon form; returns rank.
std::size_t rref_mod(ModMatrix& m, std::vector<std::size_t>& pivots);

// Destructive; canonical nullspace basis from the RREF.
ModNullspace nullspace_mod(ModMatrix& m);

// Destructive rank.
std::size_t rank_mod(ModMatrix& m);

}  // namespace orthovar
