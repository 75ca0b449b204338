#include "orthovar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace orthovar {

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::projective(int n) {
  if (n < 2) throw std::invalid_argument("projective ring needs n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      names.push_back("y_(" + std::to_string(i) + "," + std::to_string(j) + ")");
  names.push_back("s");
  return std::make_shared<const PolyRing>(std::move(names));
}

RingPtr PolyRing::signs(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t_" + std::to_string(i));
  return std::make_shared<const PolyRing>(std::move(names));
}

RingPtr PolyRing::make(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.emplace(Monomial(p.ring_->arity()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(std::move(ring));
  if (index >= p.ring_->arity())
    throw std::out_of_range("variable index out of range");
  Monomial m(p.ring_->arity());
  m.exponents[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("no variable named " + name);
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.ring_->arity())
    throw std::invalid_argument("monomial arity does not match ring");
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Leading term has maximal total degree under grevlex.
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool Polynomial::uses_variable(std::size_t index) const {
  for (const auto& [m, c] : terms_)
    if (m.exponents[index] != 0) return true;
  return false;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no terms");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no terms");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.arity() != ring_->arity())
    throw std::invalid_argument("monomial arity does not match ring");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  // Iterate over the smaller operand's terms in the outer loop.
  const Polynomial& outer = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& inner = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.ring());
  if (sgn(c) == 0) return r;
  for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(terms_.begin()->second) < 0) scale = -scale;
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scale);
  return r;
}

bool Polynomial::is_normalized() const {
  if (terms_.empty()) return true;
  if (sgn(terms_.begin()->second) < 0) return false;
  Integer num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) return false;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
  }
  return num_gcd == 1;
}

bool Polynomial::proportional(const Polynomial& o, Rational* scalar) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (is_zero() && o.is_zero()) {
    if (scalar) *scalar = 1;
    return true;
  }
  if (is_zero() || o.is_zero()) return false;
  if (term_count() != o.term_count()) return false;
  Rational ratio = o.leading_coefficient() / leading_coefficient();
  if (sgn(ratio) <= 0) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (it->second * ratio != jt->second) return false;
  }
  if (scalar) *scalar = ratio;
  return true;
}

namespace {

// Largest exponent of each variable over all terms; sizes the power tables.
std::vector<std::uint32_t> max_exponents(const Polynomial& p) {
  std::vector<std::uint32_t> mx(p.ring()->arity(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < mx.size(); ++i)
      mx[i] = std::max(mx[i], m.exponents[i]);
  return mx;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("point length does not match ring arity");
  auto mx = max_exponents(*this);
  std::vector<std::vector<Rational>> pw(mx.size());
  for (std::size_t i = 0; i < mx.size(); ++i) {
    pw[i].resize(mx[i] + 1);
    pw[i][0] = 1;
    for (std::uint32_t e = 1; e <= mx[i]; ++e) pw[i][e] = pw[i][e - 1] * point[i];
  }
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i]) t *= pw[i][m.exponents[i]];
    acc += t;
  }
  return acc;
}

Rational Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("point length does not match ring arity");
  auto mx = max_exponents(*this);
  std::vector<std::vector<Integer>> pw(mx.size());
  for (std::size_t i = 0; i < mx.size(); ++i) {
    pw[i].resize(mx[i] + 1);
    pw[i][0] = 1;
    for (std::uint32_t e = 1; e <= mx[i]; ++e) pw[i][e] = pw[i][e - 1] * point[i];
  }
  Integer num_acc = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [m, c] : terms_) {
    Integer t = c.get_num() * (den_lcm / c.get_den());
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i]) t *= pw[i][m.exponents[i]];
    num_acc += t;
  }
  Rational r(num_acc, den_lcm);
  r.canonicalize();
  return r;
}

double Polynomial::evaluate(std::span<const double> point) const {
  return evaluate_with_scale(point).first;
}

std::pair<double, double> Polynomial::evaluate_with_scale(
    std::span<const double> point) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("point length does not match ring arity");
  auto mx = max_exponents(*this);
  std::vector<std::vector<double>> pw(mx.size());
  for (std::size_t i = 0; i < mx.size(); ++i) {
    pw[i].resize(mx[i] + 1);
    pw[i][0] = 1.0;
    for (std::uint32_t e = 1; e <= mx[i]; ++e) pw[i][e] = pw[i][e - 1] * point[i];
  }
  double acc = 0.0, scale = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i]) t *= pw[i][m.exponents[i]];
    acc += t;
    scale = std::max(scale, std::fabs(t));
  }
  return {acc, scale};
}

std::optional<std::uint64_t> Polynomial::evaluate(
    std::span<const std::uint64_t> point, const Mod64& field) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("point length does not match ring arity");
  auto mx = max_exponents(*this);
  std::vector<std::vector<std::uint64_t>> pw(mx.size());
  for (std::size_t i = 0; i < mx.size(); ++i) {
    pw[i].resize(mx[i] + 1);
    pw[i][0] = field.one();
    for (std::uint32_t e = 1; e <= mx[i]; ++e)
      pw[i][e] = field.mul(pw[i][e - 1], point[i]);
  }
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    auto cm = field.to_mod(c);
    if (!cm) return std::nullopt;
    std::uint64_t t = *cm;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i]) t = field.mul(t, pw[i][m.exponents[i]]);
    acc = field.add(acc, t);
  }
  return acc;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment,
                      RingPtr target) {
  // Resolve the target ring.
  for (const auto& [name, image] : assignment) {
    if (!target) {
      target = image.ring();
    } else if (!same_ring(target, image.ring())) {
      throw std::invalid_argument("substitution images live in mixed rings");
    }
  }
  if (!target) target = p.ring();

  const std::size_t arity = p.ring()->arity();
  std::vector<Polynomial> images;
  images.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    auto it = assignment.find(p.ring()->name(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      images.push_back(Polynomial::variable(target, p.ring()->name(i)));
    }
  }

  auto mx = max_exponents(p);
  std::vector<std::vector<Polynomial>> pw(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    pw[i].push_back(Polynomial::constant(target, 1));
    for (std::uint32_t e = 1; e <= mx[i]; ++e)
      pw[i].push_back(pw[i].back() * images[i]);
  }

  Polynomial acc(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < arity; ++i)
      if (m.exponents[i]) t = t * pw[i][m.exponents[i]];
    acc += t;
  }
  return acc;
}

Polynomial homogenize(const Polynomial& p, std::size_t hvar) {
  if (hvar >= p.ring()->arity())
    throw std::out_of_range("homogenization variable out of range");
  if (p.uses_variable(hvar))
    throw std::invalid_argument("homogenization variable occurs in polynomial");
  const int d = p.degree();
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Monomial hm = m;
    hm.exponents[hvar] = static_cast<std::uint32_t>(d - m.degree());
    r.add_term(hm, c);
  }
  return r;
}

Polynomial homogenize(const Polynomial& p, const std::string& hvar) {
  auto idx = p.ring()->index_of(hvar);
  if (!idx) throw std::invalid_argument("no variable named " + hvar);
  return homogenize(p, *idx);
}

Polynomial dehomogenize(const Polynomial& p, std::size_t hvar) {
  if (hvar >= p.ring()->arity())
    throw std::out_of_range("dehomogenization variable out of range");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Monomial dm = m;
    dm.exponents[hvar] = 0;
    r.add_term(dm, c);
  }
  return r;
}

void write_polynomial(std::ostream& os, const Polynomial& p) {
  if (!p.is_normalized())
    throw std::invalid_argument("refusing to write unnormalized polynomial");
  os << "# orthovar-poly v1\n";
  os << "vars:";
  for (const auto& name : p.ring()->names()) os << ' ' << name;
  os << '\n';
  for (const auto& [m, c] : p.terms()) {
    os << c.get_num().get_str();
    for (auto e : m.exponents) os << ' ' << e;
    os << '\n';
  }
}

Polynomial read_polynomial(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "# orthovar-poly v1")
    throw std::runtime_error("poly file: bad header");
  if (!std::getline(is, line) || line.rfind("vars:", 0) != 0)
    throw std::runtime_error("poly file: missing vars line");
  std::vector<std::string> names;
  {
    std::istringstream ls(line.substr(5));
    std::string tok;
    while (ls >> tok) names.push_back(tok);
  }
  if (names.empty()) throw std::runtime_error("poly file: empty variable list");
  Polynomial p(PolyRing::make(names));

  GrevlexGreater before;
  Monomial prev;
  bool have_prev = false;
  Integer num_gcd = 0;
  bool first_term = true;
  while (std::getline(is, line)) {
    if (line.empty()) break;  // blank line ends the block (multi-block files)
    std::istringstream ls(line);
    std::string coeff_str;
    if (!(ls >> coeff_str)) throw std::runtime_error("poly file: bad term line");
    Integer coeff;
    if (mpz_set_str(coeff.get_mpz_t(), coeff_str.c_str(), 10) != 0)
      throw std::runtime_error("poly file: bad integer coefficient");
    if (coeff == 0) throw std::runtime_error("poly file: zero coefficient");
    Monomial m(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      long long e;
      if (!(ls >> e) || e < 0)
        throw std::runtime_error("poly file: bad exponent list");
      m.exponents[i] = static_cast<std::uint32_t>(e);
    }
    std::string extra;
    if (ls >> extra) throw std::runtime_error("poly file: trailing data on term");
    if (have_prev && !before(prev, m))
      throw std::runtime_error("poly file: terms not in descending order");
    if (first_term && sgn(coeff) < 0)
      throw std::runtime_error("poly file: negative leading coefficient");
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.get_mpz_t());
    p.add_term(m, Rational(coeff));
    prev = m;
    have_prev = true;
    first_term = false;
  }
  if (have_prev && num_gcd != 1)
    throw std::runtime_error("poly file: coefficients not coprime");
  return p;
}

std::string polynomial_to_string(const Polynomial& p) {
  std::ostringstream os;
  write_polynomial(os, p);
  return os.str();
}

Polynomial polynomial_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_polynomial(is);
}

std::string pretty(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool printed = false;
    if (a != 1 || m.is_unit()) {
      os << a.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (!m.exponents[i]) continue;
      if (printed) os << "*";
      os << p.ring()->name(i);
      if (m.exponents[i] > 1) os << "^" << m.exponents[i];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace orthovar
