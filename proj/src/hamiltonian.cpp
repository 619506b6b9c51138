#include "qbm/hamiltonian.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qbm/io.hpp"

namespace qbm {

Family family_from_name(std::string_view name) {
  std::string s(name);
  for (char& c : s)
    if (c == '-') c = '_';
  static const std::map<std::string, Family> table = {
      {"ising", Family::ising},
      {"tfim", Family::tfim},
      {"spin_glass", Family::spin_glass},
      {"spin_glass_real", Family::spin_glass_real},
      {"generic", Family::generic},
      {"generic_real", Family::generic_real},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown Hamiltonian family: " + s);
  return it->second;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::ising: return "ising";
    case Family::tfim: return "tfim";
    case Family::spin_glass: return "spin_glass";
    case Family::spin_glass_real: return "spin_glass_real";
    case Family::generic: return "generic";
    case Family::generic_real: return "generic_real";
  }
  throw std::logic_error("unreachable");
}

const FamilySets& family_sets(Family family) {
  static const FamilySets ising{{'Z'}, {"ZZ"}};
  static const FamilySets tfim{{'X', 'Z'}, {"ZZ"}};
  static const FamilySets spin_glass{{'X', 'Y', 'Z'}, {"XX", "YY", "ZZ"}};
  static const FamilySets spin_glass_real{{'X', 'Z'}, {"XX", "YY", "ZZ"}};
  static const FamilySets generic{
      {'X', 'Y', 'Z'}, {"XX", "XY", "XZ", "YX", "YY", "YZ", "ZX", "ZY", "ZZ"}};
  static const FamilySets generic_real{{'X', 'Z'}, {"XX", "XZ", "YY", "ZX", "ZZ"}};
  switch (family) {
    case Family::ising: return ising;
    case Family::tfim: return tfim;
    case Family::spin_glass: return spin_glass;
    case Family::spin_glass_real: return spin_glass_real;
    case Family::generic: return generic;
    case Family::generic_real: return generic_real;
  }
  throw std::logic_error("unreachable");
}

HamiltonianSpec build_terms(Family family, ConnectivityGraph graph) {
  const FamilySets& sets = family_sets(family);
  const int n = graph.n_sites;
  HamiltonianSpec spec{family, std::move(graph), {}};
  spec.terms.reserve(sets.p1.size() * static_cast<size_t>(n) +
                     sets.p2.size() * spec.graph.edges.size());
  for (int site = 0; site < n; ++site) {
    for (char k : sets.p1) {
      std::string word(static_cast<size_t>(n), 'I');
      word[static_cast<size_t>(site)] = k;
      spec.terms.emplace_back(word);
    }
  }
  for (const auto& [i, j] : spec.graph.edges) {
    for (const std::string& pair : sets.p2) {
      std::string word(static_cast<size_t>(n), 'I');
      word[static_cast<size_t>(i)] = pair[0];
      word[static_cast<size_t>(j)] = pair[1];
      spec.terms.emplace_back(word);
    }
  }
  for (const PauliString& p : spec.terms)
    if (p.is_identity()) throw std::logic_error("identity term in Hamiltonian");
  return spec;
}

std::vector<double> zero_parameters(const HamiltonianSpec& spec) {
  return std::vector<double>(spec.n_terms(), 0.0);
}

void validate_parameters(const HamiltonianSpec& spec, std::span<const double> theta) {
  if (theta.size() != spec.n_terms())
    throw std::invalid_argument("parameter vector length does not match term count");
  for (double t : theta)
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite parameter value");
}

namespace {

std::pair<std::string, std::string> compact_term(const PauliString& p) {
  std::string word, sites;
  for (int site = 0; site < p.n_sites(); ++site) {
    if (p.letter(site) == 'I') continue;
    word.push_back(p.letter(site));
    if (!sites.empty()) sites.push_back(',');
    sites += std::to_string(site);
  }
  return {word, sites};
}

}  // namespace

std::string dump_parameters(const HamiltonianSpec& spec, std::span<const double> theta) {
  validate_parameters(spec, theta);
  std::ostringstream os;
  os << "# n=" << spec.n_sites() << " family=" << family_name(spec.family)
     << " connectivity=" << spec.graph.kind << " terms=" << spec.n_terms() << '\n';
  os << "# index  pauli-word  sites  value\n";
  for (size_t i = 0; i < spec.n_terms(); ++i) {
    auto [word, sites] = compact_term(spec.terms[i]);
    os << i << "  " << word << "  " << sites << "  " << fmt17(theta[i]) << '\n';
  }
  return os.str();
}

std::vector<double> parse_parameters(const HamiltonianSpec& spec, std::istream& in) {
  std::vector<double> theta(spec.n_terms(),
                            std::numeric_limits<double>::quiet_NaN());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    size_t index;
    std::string word, sites;
    double value;
    if (!(ls >> index >> word >> sites >> value))
      throw std::invalid_argument("malformed parameter line: " + line);
    if (index >= spec.n_terms())
      throw std::invalid_argument("parameter index out of range: " + line);
    auto [want_word, want_sites] = compact_term(spec.terms[index]);
    if (word != want_word || sites != want_sites)
      throw std::invalid_argument("parameter line does not match term " +
                                  std::to_string(index) + " (" + want_word + " on " +
                                  want_sites + "): " + line);
    theta[index] = value;
  }
  for (size_t i = 0; i < theta.size(); ++i)
    if (std::isnan(theta[i]))
      throw std::invalid_argument("missing parameter for term " + std::to_string(i));
  return theta;
}

}  // namespace qbm
