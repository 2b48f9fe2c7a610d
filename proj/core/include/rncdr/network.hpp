#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rncdr/graph.hpp"
#include "rncdr/lp.hpp"
#include "rncdr/matrix.hpp"
#include "rncdr/rational.hpp"

namespace rncdr {

struct Reaction {
  size_t reactant = 0;
  size_t product = 0;
  std::string label;
};

struct ReactionSpec {
  std::string label;
  RVec reactant;  // coefficients over species
  RVec product;
};

// Species in declaration order, complexes in order of first appearance,
// reactions in declaration order.
class ReactionNetwork {
 public:
  ReactionNetwork() = default;
  static ReactionNetwork build(std::vector<std::string> species, const std::vector<ReactionSpec>& reactions);

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<RVec>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  size_t m() const { return species_.size(); }
  size_t n() const { return complexes_.size(); }
  size_t r() const { return reactions_.size(); }

  std::optional<size_t> species_index(const std::string& name) const;
  std::optional<size_t> complex_index(const RVec& c) const;
  std::optional<size_t> reaction_index(const std::string& label) const;

  RVec reaction_vector(size_t j) const;
  RMatrix stoichiometric_matrix() const;  // m x r
  RMatrix complex_matrix() const;         // m x n
  std::vector<size_t> reactant_complexes() const;
  Digraph graph() const;
  std::vector<ReactionSpec> specs() const;

  std::string complex_label(size_t c) const;
  std::string complex_label(const RVec& c) const;
  std::string reaction_label(size_t j) const;  // "R1: A1+2A2 -> 2A1+A2"

 private:
  std::vector<std::string> species_;
  std::vector<RVec> complexes_;
  std::vector<Reaction> reactions_;
};

struct NetworkNumbers {
  size_t m = 0, n = 0, n_r = 0, r = 0, r_irr = 0, l = 0, sl = 0, t = 0, s = 0, q = 0;
  long delta = 0, delta_rho = 0;
  bool operator==(const NetworkNumbers&) const = default;
};

struct StructuralFlags {
  bool weakly_reversible = false;
  bool t_minimal = false;
  bool cycle_terminal = false;
  bool point_terminal = false;
};

struct SubspaceBasis {
  size_t ambient = 0;
  std::vector<RVec> vectors;
  size_t dim() const { return vectors.size(); }
};

struct Verdict {
  bool holds = false;
  RVec witness;
};

struct ConcordanceResult {
  bool concordant = true;
  RVec alpha;  // over reactions
  RVec sigma;  // over species, in S
};

struct Regularity {
  bool regular = false;
  std::string violation;  // empty when regular
};

struct CutPair {
  size_t a = 0, b = 0;        // complex indices, a < b
  std::vector<size_t> side_a;  // complexes on a's side after removal
  std::vector<size_t> side_b;
};

// Linkage classes, strong components, terminal flags on the complex digraph.
struct GraphStructure {
  std::vector<size_t> linkage;  // per complex
  std::vector<size_t> strong;   // per complex
  std::vector<bool> terminal;   // per strong component
};

GraphStructure graph_structure(const ReactionNetwork& net);

NetworkNumbers network_numbers(const ReactionNetwork& net);
StructuralFlags structural_flags(const ReactionNetwork& net);
SubspaceBasis stoichiometric_subspace(const ReactionNetwork& net);
Verdict is_conservative(const ReactionNetwork& net);
Verdict is_positively_dependent(const ReactionNetwork& net);
ConcordanceResult concordance(const ReactionNetwork& net, size_t max_species = 12);
Regularity is_regular(const ReactionNetwork& net);
std::vector<CutPair> cut_pairs(const ReactionNetwork& net);
bool linkage_class_independence(const ReactionNetwork& net);

}  // namespace rncdr
