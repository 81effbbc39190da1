#include "idg/scenario.hpp"

#include "idg/parser.hpp"

#include <fstream>

namespace idg {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad json in '" + path + "': " + e.what(), 0);
    }
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j, const FiniteField& K, char var) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array", 0);
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& row : j) {
        std::vector<RatFunc> r;
        for (const auto& cell : row) r.push_back(parse_expr(cell.get<std::string>(), K, var));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(std::move(rows));
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::vector<Matrix> matrix_seq_from_json(const nlohmann::json& j, const FiniteField& K,
                                         char var) {
    std::vector<Matrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m, K, var));
    return out;
}

nlohmann::ordered_json matrix_seq_to_json(const std::vector<Matrix>& ms) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

namespace {

DiffField arena_from_json(const nlohmann::json& j) {
    FiniteField K = parse_field(j.at("field").get<std::string>());
    std::size_t bound = j.value("order_bound", 16);
    if (j.contains("extension"))
        return DiffField::extension(
            parse_extension(j.at("extension").get<std::string>(), K, bound));
    return DiffField::base(K, bound);
}

}   // namespace

LoadedSystem system_from_json(const nlohmann::json& j) {
    DiffField ctx = arena_from_json(j);
    ProjectiveSystem sys{ctx, matrix_seq_from_json(j.at("D"), ctx.constants(), ctx.variable())};
    return LoadedSystem{ctx, sys};
}

nlohmann::ordered_json system_to_json(const ProjectiveSystem& sys) {
    nlohmann::ordered_json j;
    j["schema"] = "system/1";
    j["field"] = sys.ctx.constants().designator();
    if (sys.ctx.is_extension()) j["extension"] = sys.ctx.ext().designator();
    j["order_bound"] = sys.ctx.order_bound();
    j["D"] = matrix_seq_to_json(sys.D);
    return j;
}

GaloisSection Scenario::require_chi(const std::string& who) const {
    if (!chi) throw ParseError(who + " needs a 'chi' section matrix", 0);
    return *chi;
}

ProjectiveSystem Scenario::require_sys(const std::string& who) const {
    if (!sys) throw ParseError(who + " needs a 'system' block", 0);
    return *sys;
}

EquivariantSystem Scenario::equivariant_system(const std::string& who) const {
    return EquivariantSystem{require_chi(who), require_sys(who)};
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario sc{arena_from_json(j), {}, {}, {}, {}, {}, {}, {}, {}, 1, 0, GroupShape::FullGL};
    const FiniteField& K = sc.arena.constants();
    char var = sc.arena.variable();
    if (j.contains("shape")) sc.shape = parse_group_shape(j.at("shape").get<std::string>());
    if (j.contains("chi"))
        sc.chi = GaloisSection(sc.arena, matrix_from_json(j.at("chi"), K, var), sc.shape);
    if (j.contains("system"))
        sc.sys = ProjectiveSystem{sc.arena,
                                  matrix_seq_from_json(j.at("system").at("D"), K, var)};
    auto seq = [&](const char* key) -> std::optional<std::vector<Matrix>> {
        if (!j.contains(key)) return std::nullopt;
        return matrix_seq_from_json(j.at(key), K, var);
    };
    sc.Z = seq("Z");
    sc.Y = seq("Y");
    sc.U = seq("U");
    sc.Uprime = seq("Uprime");
    sc.Ytilde = seq("Ytilde");
    if (j.contains("alpha")) sc.alpha = matrix_from_json(j.at("alpha"), K, var);
    sc.seed = j.value("seed", 1);
    sc.level = j.value("level", 0);
    return sc;
}

FiniteGroup group_from_spec(const std::string& spec) {
    const std::string prefix = "catalogue:";
    if (spec.rfind(prefix, 0) == 0) return catalogue_group(spec.substr(prefix.size()));
    nlohmann::json j = load_json_file(spec);
    return group_table_from_json(j, j.value("name", spec));
}

FiniteGroup group_table_from_json(const nlohmann::json& j, const std::string& name) {
    if (j.contains("table")) {
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
        return FiniteGroup(j.value("name", name), std::move(table));
    }
    if (j.contains("perm_generators")) {
        int degree = j.at("degree").get<int>();
        std::vector<std::vector<int>> gens;
        for (const auto& g : j.at("perm_generators"))
            gens.push_back(parse_cycles(g.get<std::string>(), degree));
        return FiniteGroup::from_permutations(j.value("name", name), gens);
    }
    throw ParseError("group file needs 'table' or 'perm_generators'", 0);
}

GroupHom hom_from_json(const nlohmann::json& j) {
    auto load_side = [&](const char* key) {
        const auto& side = j.at(key);
        if (side.is_string()) return group_from_spec(side.get<std::string>());
        return group_table_from_json(side, key);
    };
    FiniteGroup src = load_side("source");
    FiniteGroup dst = load_side("target");
    std::vector<int> images = j.at("images").get<std::vector<int>>();
    return GroupHom(std::move(src), std::move(dst), std::move(images));
}

std::vector<int> parse_element_list(const std::string& text) {
    std::vector<int> out;
    int cur = 0;
    bool have = false;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = cur * 10 + (c - '0');
            have = true;
        } else if (c == ',' || c == ' ') {
            if (have) out.push_back(cur);
            cur = 0;
            have = false;
        } else {
            throw ParseError("bad element list", 0);
        }
    }
    if (have) out.push_back(cur);
    return out;
}

}   // namespace idg
