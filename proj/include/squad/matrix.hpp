#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "squad/digraph.hpp"

namespace squad {

// Dense square complex matrix, row-major, order <= 64.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int n) : n_(checked_order(n)) {
    a_.resize(static_cast<std::size_t>(n_) * n_);
  }

  int n() const { return n_; }

  std::complex<double>& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a_[std::size_t(i) * n_ + j];
  }

 private:
  static int checked_order(int n) {
    if (n < 1) throw std::invalid_argument("matrix order must be positive");
    if (n > kMaxVertices) throw CapacityError("matrix order exceeds 64");
    return n;
  }

  int n_;
  std::vector<std::complex<double>> a_;
};

// max |(U U^dagger - I)_{ij}| <= tol
bool is_unitary(const ComplexMatrix& m, double tol);

// Arc i->j iff |m(i,j)| > tol; diagonal entries give loops.
Digraph digraph_of_matrix(const ComplexMatrix& m, double tol);

// m(j,k) = exp(2*pi*i*j*k/n) / sqrt(n)
ComplexMatrix dft_matrix(int n);

// Normalized Sylvester-Hadamard of order 2^k (0 <= k <= 6).
ComplexMatrix sylvester_matrix(int k);

// (1/sqrt(3)) * [[0,1,1,1],[1,0,1,-1],[1,-1,0,1],[1,1,-1,0]]: a weighing
// matrix of order 4 and weight 3, scaled to be orthogonal.
ComplexMatrix weighing43_matrix();

// m(i, p[i]) = 1, zero elsewhere.
ComplexMatrix permutation_matrix(const std::vector<int>& p);

// Haar-ish random unitary: complex Gaussian entries orthonormalized by
// modified Gram-Schmidt. Gaussians come from Box-Muller applied directly to
// mt19937_64 output words, so the result is reproducible bit-for-bit for a
// given (n, seed) on any platform with IEEE doubles and the same libm.
ComplexMatrix random_unitary(int n, std::uint64_t seed);

ComplexMatrix kronecker_matrix(const ComplexMatrix& a, const ComplexMatrix& b);

// Text format: header "matrix <n>", then n rows of n entries, each either
// "re" or "re+imj" / "re-imj".
std::string write_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(const std::string& text);

}  // namespace squad
