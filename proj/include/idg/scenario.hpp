#ifndef IDG_SCENARIO_HPP
#define IDG_SCENARIO_HPP

#include "idg/equivariance.hpp"
#include "idg/group.hpp"

#include "json.hpp"

namespace idg {

// JSON file formats consumed by the command line front end. Matrices are
// row-major arrays of expression strings.

nlohmann::json load_json_file(const std::string& path);

Matrix matrix_from_json(const nlohmann::json& j, const FiniteField& K, char var);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
std::vector<Matrix> matrix_seq_from_json(const nlohmann::json& j, const FiniteField& K, char var);
nlohmann::ordered_json matrix_seq_to_json(const std::vector<Matrix>& ms);

// { "schema": "system/1", "field": "GF(3)", "extension": "kummer(m=2)"?,
//   "order_bound": 16?, "D": [ matrix, ... ] }
struct LoadedSystem {
    DiffField ctx;
    ProjectiveSystem sys;
};
LoadedSystem system_from_json(const nlohmann::json& j);
nlohmann::ordered_json system_to_json(const ProjectiveSystem& sys);

// { "schema": "scenario/1", "field", "extension"?, "order_bound"?, "shape"?,
//   "chi"?, "system"?, "Z"?, "Y"?, "U"?, "Uprime"?, "Ytilde"?, "alpha"?,
//   "seed"?, "level"? }
struct Scenario {
    DiffField arena;
    std::optional<GaloisSection> chi;
    std::optional<ProjectiveSystem> sys;
    std::optional<std::vector<Matrix>> Z, Y, U, Uprime, Ytilde;
    std::optional<Matrix> alpha;
    std::uint64_t seed = 1;
    int level = 0;
    GroupShape shape = GroupShape::FullGL;

    GaloisSection require_chi(const std::string& who) const;
    ProjectiveSystem require_sys(const std::string& who) const;
    EquivariantSystem equivariant_system(const std::string& who) const;
};
Scenario scenario_from_json(const nlohmann::json& j);

// groups: "catalogue:<name>" or a file path holding
// { "table": [[...]] } or { "perm_generators": ["(0 1 2)", ...], "degree": n }
FiniteGroup group_from_spec(const std::string& spec);
FiniteGroup group_table_from_json(const nlohmann::json& j, const std::string& name);

// { "source": <spec>, "target": <spec>, "images": [...] }
GroupHom hom_from_json(const nlohmann::json& j);

std::vector<int> parse_element_list(const std::string& text);

}   // namespace idg

#endif
