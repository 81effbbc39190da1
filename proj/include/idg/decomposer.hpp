#ifndef IDG_DECOMPOSER_HPP
#define IDG_DECOMPOSER_HPP

#include "idg/descriptor.hpp"

#include <array>

namespace idg {

// Rewrite rules, in the order the engine tries them.
enum class Rule {
    TrivialFactor,            // kernel trivial: identity factor + the map itself
    ComponentSplit,           // step 1: peel the finite component group off the kernel
    RadicalSplit,             // step 2: radical vs semisimple quotient
    CenterSplit,              // step 3: finite center of a semisimple kernel
    CommutatorSplit,          // step 4: derived subgroup of a solvable kernel
    UnipotentTorusSplit,      // step 5: unipotent part vs torus quotient
    MinimalUnipotentSplit,    // step 6: peel a minimal unipotent piece
    SupplementSplit,          // step 7: frattini factor times split factor
    SemidirectHLift,          // step 8: split epi -> H-rigid H-split + finite kernel
    FrattiniHLift,            // step 9: frattini epi -> H-rigid frattini + finite kernel
};

const char* rule_name(Rule r);

enum class LeafClass {
    FiniteKernel = 1,
    HRigidFrattini = 2,
    SemisimpleCenterless = 3,
    Torus = 4,
    MinimalUnipotent = 5,
};

const char* leaf_class_name(LeafClass c);

// termination measure: (kernel dim, derived length, component order, finite
// kernel order, structure rank, flag deficit); every rewrite strictly
// decreases it on the children that remain to be decomposed
using Measure = std::array<long, 6>;
Measure epi_measure(const EpiDescriptor& e);

// leaf classification; empty when a rewrite is still pending
std::optional<LeafClass> classify_leaf(const EpiDescriptor& e);

struct DecompNode {
    EpiDescriptor epi;
    std::optional<Rule> rule;        // absent on leaves
    std::optional<LeafClass> leaf;   // present on leaves
    std::vector<std::string> annotations;
    // children as (outer, inner): the parent factors as outer after inner
    std::vector<std::unique_ptr<DecompNode>> children;
    int psi_kernel_dim = 0;   // kernel dimension of the pre-composed map in steps 7-9
};

struct DecompTree {
    std::unique_ptr<DecompNode> root;
    std::vector<std::string> warnings;

    std::vector<const DecompNode*> leaves() const;   // solution order: outer first
    std::size_t node_count() const;
};

// one rule application; (outer, inner) with parent = outer . inner
std::pair<EpiDescriptor, EpiDescriptor> elementary_decompose(const EpiDescriptor& e, Rule r);

DecompTree decompose(const EpiDescriptor& root);

// verify that composing the children of every internal node reproduces the
// parent; returns an error description or empty
std::string check_recomposition(const DecompTree& tree);

// torus or semisimple-centerless kernels of H-rigid H-split maps ride a
// direct-product decomposition of the source
EpiDescriptor subdirect_rewrite(const EpiDescriptor& e);

struct PlanStep {
    int order = 0;
    LeafClass leaf_class = LeafClass::FiniteKernel;
    std::string epi_name;
    std::string strategy;   // finite-kernel | frattini-lift | subdirect-product | unipotent-parameter
    std::string detail;
};

struct SolutionPlan {
    std::vector<PlanStep> steps;
    std::vector<std::string> external_axioms;
};

SolutionPlan build_solution_plan(const DecompTree& tree);

nlohmann::ordered_json tree_to_json(const DecompTree& tree);
nlohmann::ordered_json plan_to_json(const SolutionPlan& plan);

}   // namespace idg

#endif
