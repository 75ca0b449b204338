#include "orthovar/modular.hpp"

#include <algorithm>
#include <cstddef>

namespace orthovar {

namespace {

// unsigned long is 64-bit on the supported targets.
static_assert(sizeof(unsigned long) == 8, "64-bit target required");

Integer u64_to_mpz(std::uint64_t x) {
  return Integer(static_cast<unsigned long>(x));
}

std::uint64_t mpz_to_u64(const Integer& z) {
  return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

}  // namespace

Mod64::Mod64(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || p >= (1ULL << 63))
    throw std::invalid_argument("Mod64: modulus must be odd, in [3, 2^63)");
  // Newton iteration for p^{-1} mod 2^64.
  std::uint64_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  ninv_ = ~inv + 1;  // -p^{-1} mod 2^64
  r2_ = mpz_to_u64((Integer(1) << 128) % u64_to_mpz(p));
  one_ = to(1);
}

std::uint64_t Mod64::to_mod(const Integer& z) const {
  Integer r = z % u64_to_mpz(p_);
  if (sgn(r) < 0) r += u64_to_mpz(p_);
  return to(mpz_to_u64(r));
}

std::optional<std::uint64_t> Mod64::to_mod(const Rational& q) const {
  std::uint64_t den = to_mod(Integer(q.get_den()));
  if (den == 0) return std::nullopt;
  return mul(to_mod(Integer(q.get_num())), inv(den));
}

std::uint64_t random_prime_62(Rng& rng,
                              const std::vector<std::uint64_t>& avoid) {
  for (;;) {
    std::uint64_t start = (1ULL << 61) + rng.below((1ULL << 61) - (1ULL << 33));
    Integer p;
    mpz_nextprime(p.get_mpz_t(), u64_to_mpz(start).get_mpz_t());
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) continue;
    std::uint64_t candidate = mpz_to_u64(p);
    if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end())
      return candidate;
  }
}

Integer crt(const std::vector<std::uint64_t>& residues,
            const std::vector<std::uint64_t>& moduli, Integer& modulus_out) {
  if (residues.size() != moduli.size() || residues.empty())
    throw std::invalid_argument("crt: mismatched or empty inputs");
  Integer x = u64_to_mpz(residues[0]);
  Integer m = u64_to_mpz(moduli[0]);
  for (std::size_t i = 1; i < residues.size(); ++i) {
    Integer mi = u64_to_mpz(moduli[i]);
    Integer ri = u64_to_mpz(residues[i]);
    Integer diff = (ri - x) % mi;
    if (sgn(diff) < 0) diff += mi;
    Integer minv;
    if (mpz_invert(minv.get_mpz_t(), Integer(m % mi).get_mpz_t(),
                   mi.get_mpz_t()) == 0)
      throw std::invalid_argument("crt: moduli not coprime");
    x += m * ((diff * minv) % mi);
    m *= mi;
  }
  modulus_out = m;
  return x % m;
}

std::optional<Rational> rational_reconstruct(const Integer& a_in,
                                             const Integer& m) {
  Integer a = a_in % m;
  if (sgn(a) < 0) a += m;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());

  Integer r0 = m, r1 = a;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (sgn(t1) == 0) return std::nullopt;
  Integer den = abs(t1);
  Integer num = sgn(t1) < 0 ? Integer(-r1) : r1;
  if (den > bound) return std::nullopt;
  if (num == 0) return Rational(0);
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::size_t rref_mod(ModMatrix& m, std::vector<std::size_t>& pivots) {
  const Mod64& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  pivots.clear();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(rank));
    std::uint64_t pinv = f.inv(m.at(rank, col));
    std::uint64_t* pr = m.row(rank);
    for (std::size_t j = col; j < cols; ++j) pr[j] = f.mul(pr[j], pinv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t factor = m.at(r, col);
      if (factor == 0) continue;
      std::uint64_t* rr = m.row(r);
      rr[col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j)
        rr[j] = f.sub(rr[j], f.mul(factor, pr[j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i-- > 0;) {
    std::size_t col = pivots[i];
    const std::uint64_t* pr = m.row(i);
    for (std::size_t r = 0; r < i; ++r) {
      std::uint64_t factor = m.at(r, col);
      if (factor == 0) continue;
      std::uint64_t* rr = m.row(r);
      rr[col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j)
        rr[j] = f.sub(rr[j], f.mul(factor, pr[j]));
    }
  }
  return rank;
}

ModNullspace nullspace_mod(ModMatrix& m) {
  ModNullspace out;
  std::size_t rank = rref_mod(m, out.pivots);
  const Mod64& f = m.field();
  const std::size_t cols = m.cols();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivots) is_pivot[c] = true;

  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < rank; ++i)
      v[out.pivots[i]] = f.from(f.neg(m.at(i, fcol)));
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_mod(ModMatrix& m) {
  std::vector<std::size_t> pivots;
  // Forward elimination is enough for the rank; reuse the full routine for
  // simplicity (back substitution cost is negligible at our sizes).
  return rref_mod(m, pivots);
}

}  // namespace orthovar
