#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"
#include "rncdr/lp.hpp"
#include "rncdr/network.hpp"

namespace rncdr {

struct DoaOptions {
  bool union_terminal_condition = false;  // sum over all non-linkage terminal classes jointly
  size_t max_reactant_complexes = 12;
};

// Empty when the algorithm applies.
std::vector<std::string> doa_applicability(const KineticSystem& sys);

// h over complexes. Conditions: Y h = 0, zero sum on every linkage class,
// positive sum on every terminal strong class that is not a whole linkage class.
std::vector<RVec> confluence_vectors(const ReactionNetwork& net, const DoaOptions& opt = {});

enum class Part { U, M, L };
char part_name(Part p);

// Part per reactant complex, indexed like ReactionNetwork::reactant_complexes().
using UmlPartition = std::vector<Part>;
UmlPartition partition_from_index(unsigned long index, size_t n_r);  // digit 0 -> M, 1 -> U, 2 -> L

// Sum of h over the side of a cut pair containing `side` once the pair's edges are removed.
Rational side_sum(const ReactionNetwork& net, const RVec& h, size_t side, size_t other);

// Partitions/orientations that cannot carry two steady states: reactant
// complexes with an edge leaving their strong class must sit in M, each strong
// class must sit in one part, and every inter-class edge y -> y' must have
// h(W(y)) < 0.
bool orientation_admissible(const ReactionNetwork& net, const RVec& h);
bool partition_admissible(const ReactionNetwork& net, const UmlPartition& uml);

enum class Provenance { MEquality, CrossPart, CutPair };
const char* to_string(Provenance p);

struct Relation {
  RVec coeffs;    // over species (mu)
  bool strict = false;  // coeffs . mu > 0 when strict, == 0 otherwise
  Provenance provenance = Provenance::MEquality;
  std::string note;
};

struct LinearRelationSystem {
  size_t dim = 0;
  std::vector<Relation> relations;
};

LinearRelationSystem build_linear_system(const KineticSystem& sys, const RVec& h, const UmlPartition& uml);

struct SignCompatibleWitness {
  RVec mu;
  SignPattern pattern;
};

// Solution whose sign pattern is the first allowed one in base-3 order (all
// patterns realizable in S, or the given list).
std::optional<SignCompatibleWitness> solve_sign_compatible(const LinearRelationSystem& system, const SubspaceBasis& s);
std::optional<SignCompatibleWitness> solve_sign_compatible(const LinearRelationSystem& system,
                                                           const std::vector<SignPattern>& patterns);

struct DoaWitness {
  RVec h;
  UmlPartition uml;
  LinearRelationSystem system;
  RVec mu;
  SignPattern pattern;
};

struct DoaResult {
  std::optional<DoaWitness> witness;  // nullopt: no witness after exhaustive search
  size_t confluence_vectors = 0;
  size_t partitions_examined = 0;  // admissible partitions per confluence vector
};

DoaResult doa_search(const KineticSystem& sys, const DoaOptions& opt = {});

struct Realization {
  std::vector<double> rate_constants;  // per reaction
  std::vector<double> x1, x2;          // x* and x**
  RVec c;                              // x* as an exact vector
  double residual1 = 0, residual2 = 0;
};

// Rate constants and two positive steady states in one class with ln x** - ln x* = mu.
Realization realize_witness(const KineticSystem& sys, const RVec& mu);

// Copy of sys with purely numeric rate constants.
KineticSystem with_rate_constants(const KineticSystem& sys, const std::vector<double>& k);

}  // namespace rncdr
