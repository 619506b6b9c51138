#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qbm {

/// Undirected connectivity graph over lattice sites. Edges are stored as
/// (i, j) pairs with i < j, sorted lexicographically.
struct ConnectivityGraph {
  int n_sites = 0;
  std::vector<std::pair<int, int>> edges;
  std::string kind;  // all_to_all | chain_nn | chain_next_nn | nn_particle | custom
};

ConnectivityGraph all_to_all(int n);
/// Open-boundary chain, edges (i, i+1).
ConnectivityGraph chain_nn(int n);
/// Open-boundary chain with (i, i+1) and (i, i+2) edges.
ConnectivityGraph chain_next_nn(int n);
/// particles contiguous blocks of sites_per_particle sites each; complete
/// graph inside every block, full bipartite links between adjacent blocks
/// (open boundary).
ConnectivityGraph nn_particle(int particles, int sites_per_particle);
/// Escape hatch for arbitrary lattices; validates and canonicalizes edges.
ConnectivityGraph from_edge_list(int n, std::vector<std::pair<int, int>> edges);

int degree(const ConnectivityGraph& g, int site);
/// Sorted "i j" pair lines used in experiment dumps.
std::string graph_lines(const ConnectivityGraph& g);

}  // namespace qbm
