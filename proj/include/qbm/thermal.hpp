#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qbm/hamiltonian.hpp"

namespace qbm {

/// Dense Gibbs state exp(-beta H) / Tr(exp(-beta H)) together with its
/// eigensystem (probs are the eigenvalues of rho, basis the matching
/// eigenvectors), which downstream entropy / likelihood code reuses.
struct ThermalState {
  int n_sites = 0;
  double beta = 1.0;
  Eigen::MatrixXcd rho;
  Eigen::VectorXd probs;
  Eigen::MatrixXcd basis;

  Eigen::Index dim() const { return rho.rows(); }
};

/// Computes the Gibbs state by Hermitian eigendecomposition with a spectrum
/// shift so that the largest Boltzmann weight is exactly 1 before
/// normalization. When every weighted term has an even number of Y letters
/// the Hamiltonian is real symmetric and the decomposition runs in real
/// arithmetic, leaving rho with exactly zero imaginary parts.
ThermalState gibbs_state(const HamiltonianSpec& spec, std::span<const double> theta, double beta,
                         int dense_limit = kDefaultDenseLimit);

/// Diagonal of rho clamped at zero and renormalized: the model distribution
/// q_theta(s) over computational-basis strings.
std::vector<double> model_distribution(const ThermalState& state);

/// Tr(rho P_i) for each term, clamped to [-1, 1].
std::vector<double> expectation_set(const ThermalState& state,
                                    const std::vector<PauliString>& terms);

/// -sum lambda log lambda in nats; eigenvalues <= 1e-15 contribute zero.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double von_neumann_entropy(const ThermalState& state);

/// Tr(rho^2).
double purity(const Eigen::MatrixXcd& rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(eta) rho sqrt(eta)))^2.
double fidelity(const Eigen::MatrixXcd& eta, const Eigen::MatrixXcd& rho);
/// Shortcut for pure eta = |psi><psi|: <psi|rho|psi>.
double fidelity_pure(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& rho);

/// Reduced density matrix over the kept sites (ascending site order defines
/// the reduced index layout). Throws on an empty keep set.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, int n_sites,
                               std::vector<int> keep);

}  // namespace qbm
