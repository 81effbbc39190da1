#ifndef IDG_DESCRIPTOR_HPP
#define IDG_DESCRIPTOR_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace idg {

struct DescriptorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural stand-in for a reduced linear algebraic group: flags, a
// dimension, the component group, and optional oracle data consumed by the
// decomposition rules. The engine validates and rewrites declarations; it
// never computes radicals or centers from equations.
struct GroupDescriptor {
    std::string name = "G";
    bool reduced = true;
    bool connected = false;
    bool finite = false;
    bool abelian = false;
    bool solvable = false;
    bool torus = false;
    bool unipotent = false;
    bool semisimple = false;
    bool centerless = false;
    bool minimal_normal = false;
    int dimension = 0;
    // "trivial", "catalogue:<name>", or a free-form name for unknown finite groups
    std::string component_group = "trivial";
    std::optional<int> order;   // for finite groups, when known

    // structure oracle
    std::optional<int> radical_dim;
    std::shared_ptr<GroupDescriptor> center;
    std::optional<std::vector<int>> derived_series_dims;
    std::optional<int> unipotent_part_dim;
    std::optional<int> minimal_split_dim;   // step-6 peel size, default 1
    std::optional<std::string> h_action;    // reference tag only
    bool semidirect_with_h = false;

    bool is_trivial() const { return finite && order && *order == 1; }
    bool component_trivial() const { return component_group == "trivial"; }
};

GroupDescriptor trivial_group_descriptor(const std::string& name = "1");

struct EpiDescriptor {
    std::string name = "beta";
    GroupDescriptor source, target, kernel;
    std::string H;   // "", "trivial", or "catalogue:<name>"
    bool split = false;
    bool H_split = false;
    bool H_rigid = false;
    bool frattini = false;
    bool subdirect_H_split = false;
    bool type_mu = false;
    bool embedding_epimorphism = false;
    // oracle for the supplement factorization: kernel of the restriction of
    // the map to a minimal supplement
    std::shared_ptr<GroupDescriptor> frattini_residual;
};

// flag deduction from oracle data; returns human-readable notes for every
// change it makes
std::vector<std::string> normalize_group(GroupDescriptor& g);
// consistency errors (empty = valid); warnings go to the second list
void validate_group(const GroupDescriptor& g, std::vector<std::string>& errors,
                    std::vector<std::string>& warnings);
void validate_epi(const EpiDescriptor& e, std::vector<std::string>& errors,
                  std::vector<std::string>& warnings);

nlohmann::ordered_json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const nlohmann::json& j);
nlohmann::ordered_json epi_to_json(const EpiDescriptor& e);
EpiDescriptor epi_from_json(const nlohmann::json& j);

}   // namespace idg

#endif
