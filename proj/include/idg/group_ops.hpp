#ifndef IDG_GROUP_OPS_HPP
#define IDG_GROUP_OPS_HPP

#include "idg/group.hpp"

#include <optional>

namespace idg {

// view a subgroup (element list) as a group in its own right, with the
// element index map back into the parent
struct SubgroupView {
    FiniteGroup group;
    std::vector<int> elems;   // position -> parent element
};
SubgroupView subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems,
                               const std::string& name);

// intersection of all maximal subgroups
std::vector<int> frattini_subgroup(const FiniteGroup& G);

// no proper subgroup U with ker(phi) . U = G, decided exhaustively
bool is_frattini_epi(const GroupHom& phi);

// ker(phi) contained in the Frattini subgroup of the source
bool frattini_criterion(const GroupHom& phi);

// inclusion-minimal U with A . U = G; ties broken by smallest order, then
// lexicographically least element set. The induced map U -> G/A is verified
// to be a Frattini epimorphism.
std::vector<int> minimal_supplement(const FiniteGroup& G, const std::vector<int>& A);

struct SemidirectProduct {
    FiniteGroup group;        // pairs (n, h), index n * |H| + h
    GroupHom projection;      // onto H
    GroupHom section;         // H into the product
    int pair_index(int n, int h) const;
};

// action: one permutation of N's elements per element of H, a verified
// homomorphism H -> Aut(N)
SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                     const std::vector<std::vector<int>>& action);

std::vector<std::vector<int>> trivial_action(const FiniteGroup& N, const FiniteGroup& H);

struct FibreProduct {
    FiniteGroup group;   // pairs (a, b) with phi1(a) = phi2(b)
    std::vector<std::pair<int, int>> elems;
    GroupHom proj_left, proj_right;
};

FibreProduct fibre_product(const GroupHom& phi1, const GroupHom& phi2);

struct TypeMuResult {
    SemidirectProduct domain;       // N x| H with conjugation action
    GroupHom mu;                    // (n,h) -> n h in G
    std::vector<int> kernel;        // computed kernel in the domain
    bool kernel_matches_formula;    // equals {(g^-1, g) : g in N cap H}
};

// N normal, H a subgroup, N . H = G; mu is the product map
TypeMuResult type_mu_epi(const FiniteGroup& G, const std::vector<int>& N,
                         const std::vector<int>& H);

// backtracking isomorphism search on generator images (orders <= ~200)
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G1, const FiniteGroup& G2);

// every homomorphism G -> Q, enumerated over generator images
std::vector<GroupHom> all_homs(const FiniteGroup& G, const FiniteGroup& Q);
std::vector<GroupHom> surjective_homs(const FiniteGroup& G, const FiniteGroup& Q);

struct TripleProductReport {
    bool ok = true;
    int order = 0;
    std::string detail;   // names the failing pair when !ok
};

// builds G0 x| (A x| H), (G0 x A) x| H and A x| (G0 x| H) for H acting on
// both factors and G0 acting trivially on A, then checks pairwise isomorphism
TripleProductReport triple_product_isos(const FiniteGroup& G0, const FiniteGroup& A,
                                        const FiniteGroup& H,
                                        const std::vector<std::vector<int>>& h_on_g0,
                                        const std::vector<std::vector<int>>& h_on_a);

}   // namespace idg

#endif
