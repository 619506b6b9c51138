#include "qbm/topology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qbm {

namespace {

void canonicalize(ConnectivityGraph& g) {
  for (auto& [i, j] : g.edges) {
    if (i == j) throw std::invalid_argument("self-loop in connectivity graph");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= g.n_sites) throw std::invalid_argument("edge site out of range");
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw std::invalid_argument("duplicate edge in connectivity graph");
}

}  // namespace

ConnectivityGraph all_to_all(int n) {
  if (n < 1) throw std::invalid_argument("all_to_all requires n >= 1");
  ConnectivityGraph g{n, {}, "all_to_all"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

ConnectivityGraph chain_nn(int n) {
  if (n < 2) throw std::invalid_argument("chain_nn requires n >= 2");
  ConnectivityGraph g{n, {}, "chain_nn"};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

ConnectivityGraph chain_next_nn(int n) {
  if (n < 3) throw std::invalid_argument("chain_next_nn requires n >= 3");
  ConnectivityGraph g{n, {}, "chain_next_nn"};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  for (int i = 0; i + 2 < n; ++i) g.edges.emplace_back(i, i + 2);
  canonicalize(g);
  g.kind = "chain_next_nn";
  return g;
}

ConnectivityGraph nn_particle(int particles, int sites_per_particle) {
  if (particles < 2 || sites_per_particle < 1)
    throw std::invalid_argument("nn_particle requires particles >= 2 and sites_per_particle >= 1");
  const int n = particles * sites_per_particle;
  ConnectivityGraph g{n, {}, "nn_particle"};
  std::set<std::pair<int, int>> edges;
  for (int k = 0; k < particles; ++k) {
    const int lo = k * sites_per_particle;
    const int hi = lo + sites_per_particle;
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) edges.emplace(i, j);
    if (k + 1 < particles) {
      for (int i = lo; i < hi; ++i)
        for (int j = hi; j < hi + sites_per_particle; ++j) edges.emplace(i, j);
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

ConnectivityGraph from_edge_list(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph requires n >= 1");
  ConnectivityGraph g{n, std::move(edges), "custom"};
  canonicalize(g);
  g.kind = "custom";
  return g;
}

int degree(const ConnectivityGraph& g, int site) {
  int d = 0;
  for (const auto& [i, j] : g.edges) d += (i == site) + (j == site);
  return d;
}

std::string graph_lines(const ConnectivityGraph& g) {
  std::ostringstream os;
  for (const auto& [i, j] : g.edges) os << i << ' ' << j << '\n';
  return os.str();
}

}  // namespace qbm
