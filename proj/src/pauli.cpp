#include "qbm/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qbm {

PauliString::PauliString(std::string_view word) : word_(word) {
  if (word_.empty()) throw std::invalid_argument("Pauli word must be nonempty");
  if (word_.size() > 32) throw std::invalid_argument("Pauli word longer than 32 sites");
  n_ = static_cast<int>(word_.size());
  for (int site = 0; site < n_; ++site) {
    const uint64_t bit = site_bit(n_, site);
    switch (word_[static_cast<size_t>(site)]) {
      case 'I': break;
      case 'X': x_mask_ |= bit; break;
      case 'Y': x_mask_ |= bit; z_mask_ |= bit; ++y_count_; break;
      case 'Z': z_mask_ |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" +
                                    std::string(1, word_[static_cast<size_t>(site)]) +
                                    "' in word \"" + word_ + "\"");
    }
  }
}

Eigen::VectorXcd PauliString::apply(const Eigen::VectorXcd& v) const {
  if (static_cast<uint64_t>(v.size()) != dim())
    throw std::invalid_argument("state dimension does not match Pauli word");
  Eigen::VectorXcd out(v.size());
  const cplx base = i_pow(y_count_);
  for (uint64_t t = 0; t < dim(); ++t) {
    const uint64_t s = t ^ x_mask_;
    out[static_cast<Eigen::Index>(t)] =
        ((std::popcount(s & z_mask_) & 1) ? -base : base) * v[static_cast<Eigen::Index>(s)];
  }
  return out;
}

void PauliString::apply_add(cplx coeff, const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  if (in.size() != out.size() || static_cast<uint64_t>(in.size()) != dim())
    throw std::invalid_argument("state dimension does not match Pauli word");
  const cplx base = coeff * i_pow(y_count_);
  for (uint64_t t = 0; t < dim(); ++t) {
    const uint64_t s = t ^ x_mask_;
    out[static_cast<Eigen::Index>(t)] +=
        ((std::popcount(s & z_mask_) & 1) ? -base : base) * in[static_cast<Eigen::Index>(s)];
  }
}

double PauliString::expectation(const Eigen::VectorXcd& v) const {
  if (static_cast<uint64_t>(v.size()) != dim())
    throw std::invalid_argument("state dimension does not match Pauli word");
  const cplx base = i_pow(y_count_);
  cplx acc(0.0, 0.0);
  for (uint64_t t = 0; t < dim(); ++t) {
    const uint64_t s = t ^ x_mask_;
    const cplx ph = (std::popcount(s & z_mask_) & 1) ? -base : base;
    acc += std::conj(v[static_cast<Eigen::Index>(t)]) * ph * v[static_cast<Eigen::Index>(s)];
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw std::runtime_error("Pauli expectation has a non-negligible imaginary part");
  return acc.real();
}

cplx PauliString::trace_with(const Eigen::MatrixXcd& rho) const {
  if (static_cast<uint64_t>(rho.rows()) != dim() || rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix dimension does not match Pauli word");
  const cplx base = i_pow(y_count_);
  cplx acc(0.0, 0.0);
  for (uint64_t s = 0; s < dim(); ++s) {
    const cplx ph = (std::popcount(s & z_mask_) & 1) ? -base : base;
    acc += ph * rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s ^ x_mask_));
  }
  return acc;
}

Eigen::MatrixXcd PauliString::to_dense(int dense_limit) const {
  if (n_ > dense_limit) throw std::domain_error("Pauli word exceeds the dense limit");
  const Eigen::Index d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const cplx base = i_pow(y_count_);
  for (uint64_t s = 0; s < dim(); ++s) {
    const cplx ph = (std::popcount(s & z_mask_) & 1) ? -base : base;
    m(static_cast<Eigen::Index>(s ^ x_mask_), static_cast<Eigen::Index>(s)) = ph;
  }
  return m;
}

void apply_hamiltonian(const std::vector<PauliString>& terms, std::span<const double> theta,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  if (terms.size() != theta.size())
    throw std::invalid_argument("term list and parameter vector differ in length");
  out.setZero(in.size());
  for (size_t i = 0; i < terms.size(); ++i) {
    if (theta[i] == 0.0) continue;
    terms[i].apply_add(cplx(theta[i], 0.0), in, out);
  }
}

bool hamiltonian_is_real(const std::vector<PauliString>& terms, std::span<const double> theta) {
  if (terms.size() != theta.size())
    throw std::invalid_argument("term list and parameter vector differ in length");
  for (size_t i = 0; i < terms.size(); ++i)
    if (theta[i] != 0.0 && (terms[i].y_count() & 1)) return false;
  return true;
}

Eigen::MatrixXcd hamiltonian_dense(const std::vector<PauliString>& terms,
                                   std::span<const double> theta, int dense_limit) {
  if (terms.size() != theta.size())
    throw std::invalid_argument("term list and parameter vector differ in length");
  if (terms.empty()) throw std::invalid_argument("empty term list");
  const int n = terms.front().n_sites();
  if (n > dense_limit) throw std::domain_error("system size exceeds the dense limit");
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (size_t i = 0; i < terms.size(); ++i) {
    const PauliString& p = terms[i];
    if (p.n_sites() != n) throw std::invalid_argument("mixed site counts in term list");
    const cplx base = cplx(theta[i], 0.0) * i_pow(p.y_count());
    for (uint64_t s = 0; s < p.dim(); ++s) {
      const cplx ph = (std::popcount(s & p.z_mask()) & 1) ? -base : base;
      h(static_cast<Eigen::Index>(s ^ p.x_mask()), static_cast<Eigen::Index>(s)) += ph;
    }
  }
  return h;
}

Eigen::MatrixXd hamiltonian_dense_real(const std::vector<PauliString>& terms,
                                       std::span<const double> theta, int dense_limit) {
  if (!hamiltonian_is_real(terms, theta))
    throw std::invalid_argument("Hamiltonian has weighted odd-Y terms; not real");
  if (terms.empty()) throw std::invalid_argument("empty term list");
  const int n = terms.front().n_sites();
  if (n > dense_limit) throw std::domain_error("system size exceeds the dense limit");
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (size_t i = 0; i < terms.size(); ++i) {
    if (theta[i] == 0.0) continue;
    const PauliString& p = terms[i];
    if (p.n_sites() != n) throw std::invalid_argument("mixed site counts in term list");
    // i^y is +-1 for even y.
    const double base = theta[i] * ((p.y_count() & 2) ? -1.0 : 1.0);
    for (uint64_t s = 0; s < p.dim(); ++s) {
      const double ph = (std::popcount(s & p.z_mask()) & 1) ? -base : base;
      h(static_cast<Eigen::Index>(s ^ p.x_mask()), static_cast<Eigen::Index>(s)) += ph;
    }
  }
  return h;
}

}  // namespace qbm
