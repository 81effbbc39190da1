#include "idg/descriptor.hpp"

namespace idg {

GroupDescriptor trivial_group_descriptor(const std::string& name) {
    GroupDescriptor g;
    g.name = name;
    g.connected = true;
    g.finite = true;
    g.abelian = true;
    g.solvable = true;
    g.dimension = 0;
    g.order = 1;
    return g;
}

std::vector<std::string> normalize_group(GroupDescriptor& g) {
    std::vector<std::string> notes;
    auto set = [&](bool& flag, bool value, const std::string& why) {
        if (flag != value) {
            flag = value;
            notes.push_back(g.name + ": " + why);
        }
    };
    if (g.dimension == 0 && g.reduced && !g.finite)
        set(g.finite, true, "dimension 0 and reduced, so finite");
    if (g.torus || g.unipotent || g.semisimple)
        set(g.connected, true, "torus/unipotent/semisimple groups are connected");
    if (g.torus) {
        set(g.abelian, true, "tori are abelian");
        if (!g.unipotent_part_dim) g.unipotent_part_dim = 0;
    }
    if (g.unipotent) {
        set(g.solvable, true, "unipotent groups are solvable");
        if (!g.unipotent_part_dim) g.unipotent_part_dim = g.dimension;
    }
    if (g.abelian) set(g.solvable, true, "abelian groups are solvable");
    if (g.connected && g.component_group != "trivial") {
        g.component_group = "trivial";
        notes.push_back(g.name + ": connected, so the component group is trivial");
    }
    if (g.radical_dim) {
        if (*g.radical_dim == 0 && g.connected && g.dimension > 0 && !g.semisimple)
            set(g.semisimple, true, "trivial radical forces semisimple");
        if (*g.radical_dim == g.dimension && g.connected && !g.solvable)
            set(g.solvable, true, "full radical forces solvable");
    }
    if (g.derived_series_dims && g.derived_series_dims->size() >= 2 && g.connected &&
        (*g.derived_series_dims)[1] == 0 && !g.abelian && g.solvable)
        set(g.abelian, true, "derived series collapses at once, so abelian");
    if (g.unipotent_part_dim && g.abelian && g.connected) {
        if (*g.unipotent_part_dim == 0 && !g.torus && g.dimension > 0)
            set(g.torus, true, "no unipotent part, so a torus");
        if (*g.unipotent_part_dim == g.dimension && !g.unipotent && g.dimension > 0)
            set(g.unipotent, true, "everything unipotent");
    }
    if (g.unipotent && g.dimension == 1)
        set(g.minimal_normal, true, "one-dimensional unipotent groups are minimal");
    if (g.center && g.center->is_trivial() && g.semisimple)
        set(g.centerless, true, "declared center is trivial");
    return notes;
}

void validate_group(const GroupDescriptor& g, std::vector<std::string>& errors,
                    std::vector<std::string>& warnings) {
    auto err = [&](const std::string& m) { errors.push_back(g.name + ": " + m); };
    if (g.dimension < 0) err("negative dimension");
    if (g.finite && g.dimension != 0) err("finite groups have dimension 0");
    if ((g.torus || g.unipotent || g.semisimple) && !g.connected)
        err("torus/unipotent/semisimple requires connected");
    if (g.torus && g.unipotent && g.dimension > 0) err("cannot be both torus and unipotent");
    if (g.semisimple && g.solvable && g.dimension > 0) err("semisimple and solvable conflict");
    if (g.radical_dim) {
        if (*g.radical_dim < 0 || *g.radical_dim > g.dimension)
            err("radical dimension out of range");
    }
    if (g.unipotent_part_dim) {
        if (*g.unipotent_part_dim < 0 || *g.unipotent_part_dim > g.dimension)
            err("unipotent part dimension out of range");
        if (g.torus && *g.unipotent_part_dim != 0) err("torus with a unipotent part");
        if (g.unipotent && *g.unipotent_part_dim != g.dimension)
            err("unipotent group whose unipotent part is proper");
    }
    if (g.derived_series_dims) {
        const auto& d = *g.derived_series_dims;
        if (d.empty() || d[0] != g.dimension)
            err("derived series must start at the full dimension");
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] > d[i - 1]) err("derived series dimensions must be non-increasing");
        if (g.solvable && !d.empty() && d.back() != 0)
            err("solvable derived series must reach zero");
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] == d[i - 1] && d[i] != 0)
                warnings.push_back(g.name + ": derived series stalls before zero");
    }
    if (g.order && *g.order < 1) err("order must be positive");
    if (g.finite && !g.component_trivial() && g.order && g.dimension == 0) {
        // fine: a finite group is its own component group; just note it
        warnings.push_back(g.name + ": finite group carries a component-group label");
    }
    if (g.center && g.semisimple && !g.center->finite)
        err("center of a semisimple group must be finite");
}

void validate_epi(const EpiDescriptor& e, std::vector<std::string>& errors,
                  std::vector<std::string>& warnings) {
    validate_group(e.source, errors, warnings);
    validate_group(e.target, errors, warnings);
    validate_group(e.kernel, errors, warnings);
    auto err = [&](const std::string& m) { errors.push_back(e.name + ": " + m); };
    if (!e.kernel.reduced)
        warnings.push_back(e.name + ": kernel is not flagged reduced; the rewrite rules assume it");
    if (e.H_rigid && !(e.source.semidirect_with_h && e.target.semidirect_with_h))
        err("H-rigid requires source and target declared as semidirect products with H");
    if (e.frattini && e.split && !e.kernel.is_trivial())
        err("frattini and split are mutually exclusive unless the kernel is trivial");
    if (e.H_split && !e.H_rigid)
        warnings.push_back(e.name + ": H-split without H-rigid is not used by any rule");
    if (e.source.dimension != e.target.dimension + e.kernel.dimension)
        warnings.push_back(e.name + ": source dimension differs from target + kernel");
    if (e.type_mu && !e.kernel.finite) err("type-mu epimorphisms have finite kernel");
}

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<const char*, bool GroupDescriptor::*>> kGroupFlags = {
    {"reduced", &GroupDescriptor::reduced},
    {"connected", &GroupDescriptor::connected},
    {"finite", &GroupDescriptor::finite},
    {"abelian", &GroupDescriptor::abelian},
    {"solvable", &GroupDescriptor::solvable},
    {"torus", &GroupDescriptor::torus},
    {"unipotent", &GroupDescriptor::unipotent},
    {"semisimple", &GroupDescriptor::semisimple},
    {"centerless", &GroupDescriptor::centerless},
    {"minimal-normal", &GroupDescriptor::minimal_normal},
    {"semidirect-with-h", &GroupDescriptor::semidirect_with_h},
};

const std::vector<std::pair<const char*, bool EpiDescriptor::*>> kEpiFlags = {
    {"split", &EpiDescriptor::split},
    {"h-split", &EpiDescriptor::H_split},
    {"h-rigid", &EpiDescriptor::H_rigid},
    {"frattini", &EpiDescriptor::frattini},
    {"subdirect-h-split", &EpiDescriptor::subdirect_H_split},
    {"type-mu", &EpiDescriptor::type_mu},
    {"embedding-epimorphism", &EpiDescriptor::embedding_epimorphism},
};

}   // namespace

nlohmann::ordered_json group_to_json(const GroupDescriptor& g) {
    json j;
    j["name"] = g.name;
    json flags = json::array();
    for (const auto& [label, member] : kGroupFlags)
        if (g.*member) flags.push_back(label);
    j["flags"] = flags;
    j["dimension"] = g.dimension;
    j["component_group"] = g.component_group;
    if (g.order) j["order"] = *g.order;
    if (g.radical_dim) j["radical_dim"] = *g.radical_dim;
    if (g.center) j["center"] = group_to_json(*g.center);
    if (g.derived_series_dims) j["derived_series_dims"] = *g.derived_series_dims;
    if (g.unipotent_part_dim) j["unipotent_part_dim"] = *g.unipotent_part_dim;
    if (g.minimal_split_dim) j["minimal_split_dim"] = *g.minimal_split_dim;
    if (g.h_action) j["h_action"] = *g.h_action;
    return j;
}

GroupDescriptor group_from_json(const nlohmann::json& j) {
    GroupDescriptor g;
    g.reduced = false;   // flags come solely from the list
    g.name = j.value("name", "G");
    if (j.contains("flags"))
        for (const auto& f : j.at("flags")) {
            std::string label = f.get<std::string>();
            bool known = false;
            for (const auto& [name, member] : kGroupFlags)
                if (label == name) {
                    g.*member = true;
                    known = true;
                }
            if (!known) throw DescriptorError("unknown group flag '" + label + "'");
        }
    if (!j.contains("flags") ||
        std::find(j.at("flags").begin(), j.at("flags").end(), "reduced") == j.at("flags").end()) {
        // reduced unless stated otherwise? keep explicit: default true
        g.reduced = true;
        if (j.contains("flags"))
            for (const auto& f : j.at("flags"))
                if (f.get<std::string>() == "non-reduced") g.reduced = false;
    }
    g.dimension = j.value("dimension", 0);
    g.component_group = j.value("component_group", std::string("trivial"));
    if (j.contains("order")) g.order = j.at("order").get<int>();
    if (j.contains("radical_dim")) g.radical_dim = j.at("radical_dim").get<int>();
    if (j.contains("center"))
        g.center = std::make_shared<GroupDescriptor>(group_from_json(j.at("center")));
    if (j.contains("derived_series_dims"))
        g.derived_series_dims = j.at("derived_series_dims").get<std::vector<int>>();
    if (j.contains("unipotent_part_dim"))
        g.unipotent_part_dim = j.at("unipotent_part_dim").get<int>();
    if (j.contains("minimal_split_dim"))
        g.minimal_split_dim = j.at("minimal_split_dim").get<int>();
    if (j.contains("h_action")) g.h_action = j.at("h_action").get<std::string>();
    return g;
}

nlohmann::ordered_json epi_to_json(const EpiDescriptor& e) {
    json j;
    j["schema"] = "epi/1";
    j["name"] = e.name;
    j["source"] = group_to_json(e.source);
    j["target"] = group_to_json(e.target);
    j["kernel"] = group_to_json(e.kernel);
    if (!e.H.empty()) j["H"] = e.H;
    json flags = json::array();
    for (const auto& [label, member] : kEpiFlags)
        if (e.*member) flags.push_back(label);
    j["flags"] = flags;
    if (e.frattini_residual) j["frattini_residual"] = group_to_json(*e.frattini_residual);
    return j;
}

EpiDescriptor epi_from_json(const nlohmann::json& j) {
    EpiDescriptor e;
    e.name = j.value("name", "beta");
    e.source = group_from_json(j.at("source"));
    e.target = group_from_json(j.at("target"));
    e.kernel = group_from_json(j.at("kernel"));
    e.H = j.value("H", std::string());
    if (j.contains("flags"))
        for (const auto& f : j.at("flags")) {
            std::string label = f.get<std::string>();
            bool known = false;
            for (const auto& [name, member] : kEpiFlags)
                if (label == name) {
                    e.*member = true;
                    known = true;
                }
            if (!known) throw DescriptorError("unknown epi flag '" + label + "'");
        }
    if (j.contains("frattini_residual"))
        e.frattini_residual =
            std::make_shared<GroupDescriptor>(group_from_json(j.at("frattini_residual")));
    return e;
}

}   // namespace idg
