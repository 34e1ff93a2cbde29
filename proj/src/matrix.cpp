#include "squad/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace squad {

bool is_unitary(const ComplexMatrix& m, double tol) {
  const int n = m.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> s = 0;
      for (int k = 0; k < n; ++k) s += m.at(i, k) * std::conj(m.at(j, k));
      if (i == j) s -= 1.0;
      if (std::abs(s) > tol) return false;
    }
  return true;
}

Digraph digraph_of_matrix(const ComplexMatrix& m, double tol) {
  Digraph d(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (std::abs(m.at(i, j)) > tol) d.add_arc(i, j);
  return d;
}

ComplexMatrix dft_matrix(int n) {
  ComplexMatrix m(n);
  const double s = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double ang = 2.0 * M_PI * double((std::int64_t(j) * k) % n) / double(n);
      m.at(j, k) = std::polar(s, ang);
    }
  return m;
}

ComplexMatrix sylvester_matrix(int k) {
  if (k < 0 || (1 << k) > kMaxVertices)
    throw std::invalid_argument("sylvester order 2^k must be in [1, 64]");
  const int n = 1 << k;
  ComplexMatrix m(n);
  const double s = 1.0 / std::sqrt(double(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = (std::popcount(unsigned(i & j)) & 1) ? -s : s;
  return m;
}

ComplexMatrix weighing43_matrix() {
  static const int w[4][4] = {
      {0, 1, 1, 1}, {1, 0, 1, -1}, {1, -1, 0, 1}, {1, 1, -1, 0}};
  ComplexMatrix m(4);
  const double s = 1.0 / std::sqrt(3.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = s * w[i][j];
  return m;
}

ComplexMatrix permutation_matrix(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  ComplexMatrix m(n);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (p[i] < 0 || p[i] >= n || hit[p[i]])
      throw std::invalid_argument("not a permutation of 0..n-1");
    hit[p[i]] = true;
    m.at(i, p[i]) = 1.0;
  }
  return m;
}

namespace {

// One standard complex Gaussian per call, Box-Muller on raw engine words.
std::complex<double> gaussian(std::mt19937_64& rng) {
  double u1 = double((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  double u2 = double(rng() >> 11) * 0x1.0p-53;        // [0, 1)
  double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

}  // namespace

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  ComplexMatrix m(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = gaussian(rng);

  // Modified Gram-Schmidt on columns, two projection passes.
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        std::complex<double> dot = 0;
        for (int r = 0; r < n; ++r) dot += std::conj(m.at(r, i)) * m.at(r, j);
        for (int r = 0; r < n; ++r) m.at(r, j) -= dot * m.at(r, i);
      }
    double norm = 0;
    for (int r = 0; r < n; ++r) norm += std::norm(m.at(r, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      // Degenerate column (essentially never happens): redraw and redo.
      for (int r = 0; r < n; ++r) m.at(r, j) = gaussian(rng);
      --j;
      continue;
    }
    for (int r = 0; r < n; ++r) m.at(r, j) /= norm;
  }
  return m;
}

ComplexMatrix kronecker_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n() * b.n() > kMaxVertices)
    throw CapacityError("kronecker product exceeds order 64");
  ComplexMatrix m(a.n() * b.n());
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k)
      for (int j = 0; j < b.n(); ++j)
        for (int l = 0; l < b.n(); ++l)
          m.at(i * b.n() + j, k * b.n() + l) = a.at(i, k) * b.at(j, l);
  return m;
}

namespace {

void format_entry(std::string& out, std::complex<double> z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    out += buf;
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    out += buf;
    out += z.imag() < 0 ? '-' : '+';
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(z.imag()));
    out += buf;
    out += 'j';
  }
}

std::complex<double> parse_entry(const std::string& tok, int lineno) {
  auto fail = [&] {
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": bad matrix entry '" + tok + "'");
  };
  std::size_t pos = 0;
  if (tok.empty()) fail();
  if (tok.back() != 'j') {
    double re;
    try {
      re = std::stod(tok, &pos);
    } catch (...) {
      fail();
      return {};
    }
    if (pos != tok.size()) fail();
    return {re, 0.0};
  }
  std::string body = tok.substr(0, tok.size() - 1);
  // Split at the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) fail();
  double re, im;
  try {
    re = std::stod(body.substr(0, split), &pos);
    if (pos != split) fail();
    std::string ims = body.substr(split);
    im = std::stod(ims, &pos);
    if (pos != ims.size()) fail();
  } catch (...) {
    fail();
    return {};
  }
  return {re, im};
}

}  // namespace

std::string write_matrix(const ComplexMatrix& m) {
  std::string out = "matrix " + std::to_string(m.n()) + "\n";
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out += ' ';
      format_entry(out, m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, row = 0;
  ComplexMatrix m(1);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (n < 0) {
      if (tok != "matrix")
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'matrix <n>' header");
      if (!(ls >> n) || n < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad matrix order");
      if (n > kMaxVertices) throw CapacityError("matrix order exceeds 64");
      m = ComplexMatrix(n);
      continue;
    }
    if (row >= n)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": extra matrix row");
    for (int j = 0; j < n; ++j) {
      if (j > 0 && !(ls >> tok))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": row has fewer than n entries");
      m.at(row, j) = parse_entry(tok, lineno);
    }
    if (ls >> tok)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": row has more than n entries");
    ++row;
  }
  if (n < 0) throw std::invalid_argument("missing 'matrix <n>' header");
  if (row != n) throw std::invalid_argument("matrix has too few rows");
  return m;
}

}  // namespace squad
