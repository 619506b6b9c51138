#include "qbm/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbm {

ThermalState gibbs_state(const HamiltonianSpec& spec, std::span<const double> theta, double beta,
                         int dense_limit) {
  validate_parameters(spec, theta);
  if (!(beta > 0.0)) throw std::invalid_argument("gibbs_state requires beta > 0");
  if (spec.n_sites() > dense_limit)
    throw std::domain_error("system size " + std::to_string(spec.n_sites()) +
                            " exceeds the dense limit " + std::to_string(dense_limit));

  ThermalState state;
  state.n_sites = spec.n_sites();
  state.beta = beta;

  const auto boltzmann = [beta](const Eigen::VectorXd& evals) {
    const double shift = evals.minCoeff();
    Eigen::VectorXd w = (-beta * (evals.array() - shift)).exp();
    return Eigen::VectorXd(w / w.sum());
  };

  if (hamiltonian_is_real(spec.terms, theta)) {
    const Eigen::MatrixXd h = hamiltonian_dense_real(spec.terms, theta, dense_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    state.probs = boltzmann(eig.eigenvalues());
    const Eigen::MatrixXd rho_real =
        eig.eigenvectors() * state.probs.asDiagonal() * eig.eigenvectors().transpose();
    state.rho = rho_real.cast<cplx>();
    state.basis = eig.eigenvectors().cast<cplx>();
  } else {
    const Eigen::MatrixXcd h = hamiltonian_dense(spec.terms, theta, dense_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    state.probs = boltzmann(eig.eigenvalues());
    state.rho = eig.eigenvectors() * state.probs.asDiagonal() * eig.eigenvectors().adjoint();
    state.basis = eig.eigenvectors();
  }
  return state;
}

std::vector<double> model_distribution(const ThermalState& state) {
  std::vector<double> q(static_cast<size_t>(state.dim()));
  double sum = 0.0;
  for (Eigen::Index s = 0; s < state.dim(); ++s) {
    q[static_cast<size_t>(s)] = std::max(0.0, state.rho(s, s).real());
    sum += q[static_cast<size_t>(s)];
  }
  if (sum <= 0.0) throw std::runtime_error("density matrix has non-positive trace");
  for (double& v : q) v /= sum;
  return q;
}

std::vector<double> expectation_set(const ThermalState& state,
                                    const std::vector<PauliString>& terms) {
  std::vector<double> out;
  out.reserve(terms.size());
  for (const PauliString& p : terms) {
    if (p.n_sites() != state.n_sites)
      throw std::invalid_argument("term site count does not match state");
    const double v = p.trace_with(state.rho).real();
    out.push_back(std::clamp(v, -1.0, 1.0));
  }
  return out;
}

namespace {

double entropy_from_eigenvalues(const Eigen::VectorXd& evals) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    const double lam = evals[k];
    if (lam > 1e-15) s -= lam * std::log(lam);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
  return entropy_from_eigenvalues(eig.eigenvalues());
}

double von_neumann_entropy(const ThermalState& state) {
  return entropy_from_eigenvalues(state.probs);
}

double purity(const Eigen::MatrixXcd& rho) {
  // Tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.squaredNorm();
}

double fidelity(const Eigen::MatrixXcd& eta, const Eigen::MatrixXcd& rho) {
  if (eta.rows() != rho.rows() || eta.cols() != rho.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig_eta(eta);
  Eigen::VectorXd mu = eig_eta.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd sqrt_eta =
      eig_eta.eigenvectors() * mu.asDiagonal() * eig_eta.eigenvectors().adjoint();
  const Eigen::MatrixXcd m = sqrt_eta * rho * sqrt_eta;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig_m(m, Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (Eigen::Index k = 0; k < eig_m.eigenvalues().size(); ++k)
    tr += std::sqrt(std::max(0.0, eig_m.eigenvalues()[k]));
  return tr * tr;
}

double fidelity_pure(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& rho) {
  if (psi.size() != rho.rows()) throw std::invalid_argument("fidelity: dimension mismatch");
  return (psi.adjoint() * rho * psi).value().real();
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, int n_sites,
                               std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int site : keep)
    if (site < 0 || site >= n_sites) throw std::invalid_argument("partial_trace: site out of range");
  if (rho.rows() != (Eigen::Index{1} << n_sites))
    throw std::invalid_argument("partial_trace: dimension mismatch");

  const int m = static_cast<int>(keep.size());
  std::vector<int> env;
  {
    std::vector<bool> kept(static_cast<size_t>(n_sites), false);
    for (int site : keep) kept[static_cast<size_t>(site)] = true;
    for (int site = 0; site < n_sites; ++site)
      if (!kept[static_cast<size_t>(site)]) env.push_back(site);
  }

  const auto scatter = [n_sites](const std::vector<int>& sites, uint64_t packed) {
    uint64_t full = 0;
    const int k = static_cast<int>(sites.size());
    for (int j = 0; j < k; ++j)
      if (packed & (uint64_t{1} << (k - 1 - j))) full |= site_bit(n_sites, sites[static_cast<size_t>(j)]);
    return full;
  };

  const uint64_t dk = uint64_t{1} << m;
  const uint64_t de = uint64_t{1} << env.size();
  std::vector<uint64_t> keep_idx(dk), env_idx(de);
  for (uint64_t a = 0; a < dk; ++a) keep_idx[a] = scatter(keep, a);
  for (uint64_t e = 0; e < de; ++e) env_idx[e] = scatter(env, e);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (uint64_t a = 0; a < dk; ++a)
    for (uint64_t b = 0; b < dk; ++b) {
      cplx acc(0.0, 0.0);
      for (uint64_t e = 0; e < de; ++e)
        acc += rho(static_cast<Eigen::Index>(keep_idx[a] | env_idx[e]),
                   static_cast<Eigen::Index>(keep_idx[b] | env_idx[e]));
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  return out;
}

}  // namespace qbm
