#include "orthovar/matrices.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace orthovar {

namespace {

// Shared draw for both modes: the float sampler reuses the exact integer
// stream, so a fixed seed pins down both representations of "the same"
// random matrix.
RationalMatrix draw_skew_with_retry(int n, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    RationalMatrix b = random_skew(n, rng);
    RationalMatrix ipb = RationalMatrix::Identity(n, n) + b;
    Eigen::FullPivLU<RationalMatrix> lu(ipb);
    if (lu.determinant() != Rational(0)) return b;
  }
}

}  // namespace

ProjectivePoint<Rational> sample_point(int n, std::uint64_t seed) {
  RationalMatrix b = draw_skew_with_retry(n, seed);
  return squaring_project(cayley<Rational>(b));
}

ProjectivePoint<double> sample_point_float(int n, std::uint64_t seed) {
  RationalMatrix b = draw_skew_with_retry(n, seed);
  DenseMatrix<double> bf(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bf(i, j) = b(i, j).get_d();
  return squaring_project(cayley<double>(bf));
}

std::vector<ProjectivePoint<Rational>> sample_points(int n, std::uint64_t seed,
                                                     std::size_t count) {
  std::vector<ProjectivePoint<Rational>> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(sample_point(n, mix_seed(seed, 0x5a5a0000ULL + i)));
  return pts;
}

std::vector<ProjectivePoint<double>> sample_points_float(int n,
                                                         std::uint64_t seed,
                                                         std::size_t count) {
  std::vector<ProjectivePoint<double>> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(sample_point_float(n, mix_seed(seed, 0x5a5a0000ULL + i)));
  return pts;
}

std::vector<Integer> integer_coordinates(const ProjectivePoint<Rational>& p) {
  const auto& c = p.coords();
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c[i].get_den().get_mpz_t());
  std::vector<Integer> out(c.size());
  Integer content = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    out[i] = c[i].get_num() * (den_lcm / c[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& z : out) z /= content;
  return out;
}

void write_matrix(std::ostream& os, const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const DenseMatrix<double>& m) {
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      os << buf;
    }
    os << '\n';
  }
}

namespace {

std::vector<std::vector<std::string>> read_tokens(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.empty()) throw std::runtime_error("matrix file: no data");
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw std::runtime_error("matrix file: ragged rows");
  return rows;
}

Rational parse_rational(const std::string& tok) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), tok.c_str(), 10) != 0)
    throw std::runtime_error("matrix file: bad rational entry '" + tok + "'");
  q.canonicalize();
  return q;
}

}  // namespace

RationalMatrix read_rational_matrix(std::istream& is) {
  auto rows = read_tokens(is);
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_rational(rows[i][j]);
  return m;
}

DenseMatrix<double> read_double_matrix(std::istream& is) {
  auto rows = read_tokens(is);
  DenseMatrix<double> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::stod(rows[i][j]);
  return m;
}

bool matrix_file_is_exact(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    // Decimal points or exponents mark floating data; plain integers and
    // p/q fractions are exact.
    if (line.find('.') != std::string::npos ||
        line.find('e') != std::string::npos ||
        line.find('E') != std::string::npos)
      return false;
  }
  return true;
}

void write_point(std::ostream& os, const ProjectivePoint<Rational>& p) {
  for (Eigen::Index i = 0; i < p.coords().size(); ++i) {
    if (i) os << ' ';
    os << p.coords()[i].get_str();
  }
  os << '\n';
}

void write_point(std::ostream& os, const ProjectivePoint<double>& p) {
  char buf[64];
  for (Eigen::Index i = 0; i < p.coords().size(); ++i) {
    if (i) os << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", p.coords()[i]);
    os << buf;
  }
  os << '\n';
}

ProjectivePoint<Rational> read_rational_point(std::istream& is, int n) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<Rational> vals;
    std::string tok;
    while (ls >> tok) vals.push_back(parse_rational(tok));
    DenseVector<Rational> c(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
      c[static_cast<Eigen::Index>(i)] = vals[i];
    return ProjectivePoint<Rational>(n, std::move(c));
  }
  throw std::runtime_error("point file: no data");
}

}  // namespace orthovar
