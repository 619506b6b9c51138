#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qbm/pauli.hpp"
#include "qbm/topology.hpp"

namespace qbm {

/// Two-local model families. Each family fixes the sets of one-site letters
/// (P1) and ordered two-site letter pairs (P2) placed on every site / edge.
enum class Family { ising, tfim, spin_glass, spin_glass_real, generic, generic_real };

Family family_from_name(std::string_view name);
std::string family_name(Family family);

struct FamilySets {
  std::vector<char> p1;
  std::vector<std::string> p2;
};

/// The (P1, P2) sets in their canonical listed order:
///   ising           Z        | ZZ
///   tfim            X,Z      | ZZ
///   spin_glass      X,Y,Z    | XX,YY,ZZ
///   spin_glass_real X,Z      | XX,YY,ZZ
///   generic         X,Y,Z    | XX,XY,XZ,YX,YY,YZ,ZX,ZY,ZZ
///   generic_real    X,Z      | XX,XZ,YY,ZX,ZZ
const FamilySets& family_sets(Family family);

/// A family instantiated on a connectivity graph. The term list is a pure
/// deterministic function of (family, graph): one-site terms first (site
/// ascending, letters in P1 order), then two-site terms (edges in sorted
/// (i, j) order, pairs in P2 order; for a pair "kl" letter k acts on site i
/// and l on site j).
struct HamiltonianSpec {
  Family family = Family::generic;
  ConnectivityGraph graph;
  std::vector<PauliString> terms;

  int n_sites() const { return graph.n_sites; }
  size_t n_terms() const { return terms.size(); }
};

HamiltonianSpec build_terms(Family family, ConnectivityGraph graph);

std::vector<double> zero_parameters(const HamiltonianSpec& spec);

/// Throws unless theta is finite and aligned with spec.terms.
void validate_parameters(const HamiltonianSpec& spec, std::span<const double> theta);

/// Parameter dump, one line per term: "index  pauli-word  sites  value" with
/// the non-identity letters, their comma-separated site indices and the value
/// in 17-significant-digit decimal. Header comments carry n, family and
/// connectivity so dumps round-trip.
std::string dump_parameters(const HamiltonianSpec& spec, std::span<const double> theta);
std::vector<double> parse_parameters(const HamiltonianSpec& spec, std::istream& in);

}  // namespace qbm
