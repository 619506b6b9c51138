#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbm {

using cplx = std::complex<double>;

/// Largest site count for which dense 2^n x 2^n operators are materialized.
inline constexpr int kDefaultDenseLimit = 12;

/// Site/bit convention: site 0 is the leftmost letter of a Pauli word and the
/// most significant bit of a computational-basis index.
inline uint64_t site_bit(int n_sites, int site) {
  return uint64_t{1} << (n_sites - 1 - site);
}

inline cplx i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// An n-site word over {I,X,Y,Z} acting as a sparse operator on 2^n
/// amplitudes. Action on a basis state:
///
///   P|s> = i^y * (-1)^popcount(s & z_mask) |s ^ x_mask>
///
/// where x_mask marks sites with X or Y, z_mask marks sites with Z or Y and
/// y is the number of Y letters (so Y|0> = i|1>, Y|1> = -i|0>).
class PauliString {
 public:
  /// Parses a letter word such as "XIZ". Throws std::invalid_argument on an
  /// empty word, a character outside {I,X,Y,Z} or more than 32 sites.
  explicit PauliString(std::string_view word);

  int n_sites() const { return n_; }
  char letter(int site) const { return word_[static_cast<size_t>(site)]; }
  const std::string& str() const { return word_; }

  bool is_identity() const { return (x_mask_ | z_mask_) == 0; }
  /// True when every letter is I or Z (diagonal in the computational basis).
  bool is_diagonal() const { return x_mask_ == 0; }
  int y_count() const { return y_count_; }
  uint64_t x_mask() const { return x_mask_; }
  uint64_t z_mask() const { return z_mask_; }
  uint64_t dim() const { return uint64_t{1} << n_; }

  /// Phase picked up by |s> before the bit flip, i^y * (-1)^popcount(s & z).
  cplx phase(uint64_t s) const {
    cplx base = i_pow(y_count_);
    return (std::popcount(s & z_mask_) & 1) ? -base : base;
  }

  /// P * v.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  /// out += coeff * P * in.
  void apply_add(cplx coeff, const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  /// Re <v|P|v> for normalized v; throws if the imaginary part exceeds 1e-10.
  double expectation(const Eigen::VectorXcd& v) const;
  /// Tr(rho * P).
  cplx trace_with(const Eigen::MatrixXcd& rho) const;
  /// Kronecker product of the per-site 2x2 factors, site 0 first.
  Eigen::MatrixXcd to_dense(int dense_limit = kDefaultDenseLimit) const;

  bool operator==(const PauliString& other) const { return word_ == other.word_; }

 private:
  std::string word_;
  int n_ = 0;
  int y_count_ = 0;
  uint64_t x_mask_ = 0;
  uint64_t z_mask_ = 0;
};

/// out = sum_i theta_i P_i * in. Linear in both theta and in.
void apply_hamiltonian(const std::vector<PauliString>& terms, std::span<const double> theta,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out);

/// True when every term carrying a nonzero coefficient has an even number of
/// Y letters, i.e. the weighted sum is a real symmetric matrix.
bool hamiltonian_is_real(const std::vector<PauliString>& terms, std::span<const double> theta);

Eigen::MatrixXcd hamiltonian_dense(const std::vector<PauliString>& terms,
                                   std::span<const double> theta,
                                   int dense_limit = kDefaultDenseLimit);

/// Real-path variant; requires hamiltonian_is_real(terms, theta).
Eigen::MatrixXd hamiltonian_dense_real(const std::vector<PauliString>& terms,
                                       std::span<const double> theta,
                                       int dense_limit = kDefaultDenseLimit);

}  // namespace qbm
