#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "qbm/hamiltonian.hpp"

namespace qbm {

using MatVec = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

/// Hermitian matrix-vector callback for sum_i theta_i P_i.
MatVec make_matvec(const HamiltonianSpec& spec, std::vector<double> theta);

/// Lanczos tridiagonalization with full reorthogonalization. basis holds the
/// achieved number of orthonormal vectors (early termination once the
/// residual norm drops below 1e-12, i.e. an invariant subspace was found).
struct LanczosResult {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<Eigen::VectorXcd> basis;

  int dimension() const { return static_cast<int>(alphas.size()); }
};

LanczosResult lanczos(const MatVec& matvec, const Eigen::VectorXcd& v0, int krylov_dim);

struct RitzPairs {
  Eigen::VectorXd values;                // ascending
  std::vector<Eigen::VectorXcd> vectors; // matching Ritz vectors in full space
};

RitzPairs ritz_pairs(const LanczosResult& lz);

/// Krylov approximation of exp(-tau H) v: ||v|| * V exp(-tau T) e1. Exact
/// when the iteration terminates on an invariant subspace.
Eigen::VectorXcd expm_apply(const MatVec& matvec, const Eigen::VectorXcd& v, double tau,
                            int krylov_dim);

/// Low-rank Gibbs diagonal: Ritz pairs are collected from n_probes Lanczos
/// runs started from independent seeded random states, deduplicated
/// (|dE| < 1e-8 and |<va|vb>| > 0.99) and combined into
/// q(s) proportional to sum_k exp(-beta E_k) |<s|v_k>|^2.
std::vector<double> approx_gibbs_diag(const HamiltonianSpec& spec, std::span<const double> theta,
                                      double beta, int krylov_dim, int n_probes, uint64_t seed);

/// Normalized Gaussian random state, the generic Lanczos start vector.
Eigen::VectorXcd random_gaussian_state(int n_sites, uint64_t seed);

}  // namespace qbm
