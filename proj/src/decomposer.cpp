#include "idg/decomposer.hpp"

#include "idg/group.hpp"
#include "idg/group_ops.hpp"

#include <algorithm>

namespace idg {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::TrivialFactor: return "trivial-factor";
        case Rule::ComponentSplit: return "step1:component-split";
        case Rule::RadicalSplit: return "step2:radical-split";
        case Rule::CenterSplit: return "step3:center-split";
        case Rule::CommutatorSplit: return "step4:commutator-split";
        case Rule::UnipotentTorusSplit: return "step5:unipotent-torus-split";
        case Rule::MinimalUnipotentSplit: return "step6:minimal-unipotent-split";
        case Rule::SupplementSplit: return "step7:supplement-split";
        case Rule::SemidirectHLift: return "step8:semidirect-h-lift";
        case Rule::FrattiniHLift: return "step9:frattini-h-lift";
    }
    return "?";
}

const char* leaf_class_name(LeafClass c) {
    switch (c) {
        case LeafClass::FiniteKernel: return "finite-kernel";
        case LeafClass::HRigidFrattini: return "h-rigid-frattini";
        case LeafClass::SemisimpleCenterless: return "h-split-semisimple-centerless";
        case LeafClass::Torus: return "h-split-torus";
        case LeafClass::MinimalUnipotent: return "h-split-minimal-unipotent";
    }
    return "?";
}

namespace {

std::optional<int> resolve_group_order(const std::string& ref) {
    if (ref == "trivial") return 1;
    const std::string prefix = "catalogue:";
    if (ref.rfind(prefix, 0) == 0) {
        return catalogue_group(ref.substr(prefix.size())).order();
    }
    return std::nullopt;
}

long derived_length_for_measure(const GroupDescriptor& g) {
    if (g.finite || g.is_trivial() || g.dimension == 0) return 0;
    if (!g.connected) return 99;
    if (g.abelian) return 1;
    if (g.solvable) {
        if (g.derived_series_dims) {
            long len = 0;
            for (std::size_t i = 1; i < g.derived_series_dims->size(); ++i)
                if ((*g.derived_series_dims)[i] < (*g.derived_series_dims)[i - 1]) ++len;
            return std::max<long>(len, 1);
        }
        return 98;
    }
    return 99;
}

long component_order_for_measure(const GroupDescriptor& g) {
    if (g.component_trivial()) return 1;
    if (auto n = resolve_group_order(g.component_group)) return *n;
    return 99;
}

long structure_rank(const GroupDescriptor& g) {
    if (g.finite || g.dimension == 0) return 0;
    if (!g.connected) return 5;
    if (g.torus) return 0;
    if (g.unipotent) return g.minimal_normal ? 0 : 1;
    if (g.semisimple) return g.centerless ? 0 : 3;
    if (g.abelian) return 2;
    if (g.solvable) return 3;
    return 4;
}

long flag_deficit(const EpiDescriptor& e) {
    if (e.H_rigid && (e.H_split || e.frattini)) return 0;
    if (e.split || e.frattini) return 1;
    return 2;
}

GroupDescriptor finite_descriptor(const std::string& name, std::optional<int> order) {
    GroupDescriptor g;
    g.name = name;
    g.finite = true;
    g.dimension = 0;
    g.order = order;
    if (order && *order == 1) {
        g.connected = true;
        g.abelian = true;
        g.solvable = true;
    }
    return g;
}

struct MissingOracle : DescriptorError {
    explicit MissingOracle(const std::string& epi, const std::string& field)
        : DescriptorError(epi + ": missing oracle field '" + field + "'") {}
};

}   // namespace

namespace {

long kernel_order_for_measure(const GroupDescriptor& g) {
    if (!g.finite) return 0;
    return g.order ? *g.order : 99;
}

}   // namespace

Measure epi_measure(const EpiDescriptor& e) {
    return Measure{e.kernel.dimension, derived_length_for_measure(e.kernel),
                   component_order_for_measure(e.kernel), kernel_order_for_measure(e.kernel),
                   structure_rank(e.kernel), flag_deficit(e)};
}

std::optional<LeafClass> classify_leaf(const EpiDescriptor& e) {
    if (e.frattini && e.H_rigid) return LeafClass::HRigidFrattini;
    if (e.type_mu) return LeafClass::FiniteKernel;
    if (e.kernel.is_trivial()) return LeafClass::FiniteKernel;
    if (e.frattini) return std::nullopt;   // still needs the H-lift
    if (e.kernel.finite) return LeafClass::FiniteKernel;
    if (e.H_rigid && e.H_split && e.kernel.connected) {
        if (e.kernel.torus && e.kernel.dimension >= 1) return LeafClass::Torus;
        if (e.kernel.semisimple && e.kernel.centerless) return LeafClass::SemisimpleCenterless;
        if (e.kernel.unipotent && e.kernel.minimal_normal) return LeafClass::MinimalUnipotent;
    }
    return std::nullopt;
}

namespace {

// ---- rule synthesis -------------------------------------------------------

GroupDescriptor connected_part(const GroupDescriptor& a) {
    GroupDescriptor g = a;
    g.name = a.name + "^0";
    g.connected = true;
    g.component_group = "trivial";
    g.order.reset();
    g.finite = false;
    if (g.dimension == 0) {
        g = trivial_group_descriptor(a.name + "^0");
    }
    return g;
}

std::pair<EpiDescriptor, EpiDescriptor> component_split(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    GroupDescriptor a0 = connected_part(a);
    GroupDescriptor comp =
        finite_descriptor(a.name + "/" + a0.name, resolve_group_order(a.component_group));
    comp.component_group = a.component_group;

    GroupDescriptor middle;
    middle.name = e.source.name + "/" + a0.name;
    middle.reduced = true;
    middle.dimension = e.source.dimension - a0.dimension;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".fin";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = comp;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".conn";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = a0;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> radical_split(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    if (!a.radical_dim) throw MissingOracle(e.name, "radical_dim");
    int r = *a.radical_dim;
    GroupDescriptor rad;
    rad.name = "R(" + a.name + ")";
    rad.connected = true;
    rad.solvable = true;
    rad.dimension = r;

    GroupDescriptor ss;
    ss.name = a.name + "/R";
    ss.connected = true;
    ss.semisimple = true;
    ss.dimension = a.dimension - r;
    ss.center = a.center;   // usable only if supplied for the quotient shape

    GroupDescriptor middle;
    middle.name = e.source.name + "/R(" + a.name + ")";
    middle.reduced = true;
    middle.dimension = e.source.dimension - r;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".ss";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = ss;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".rad";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = rad;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> center_split(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    if (!a.center) throw MissingOracle(e.name, "center");
    GroupDescriptor z = *a.center;
    GroupDescriptor quo = a;
    quo.name = a.name + "/Z";
    quo.centerless = true;
    quo.center.reset();

    GroupDescriptor middle;
    middle.name = e.source.name + "/Z(" + a.name + ")";
    middle.reduced = true;
    middle.dimension = e.source.dimension - z.dimension;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".cl";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = quo;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".z";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = z;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> commutator_split(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    if (!a.derived_series_dims || a.derived_series_dims->size() < 2)
        throw MissingOracle(e.name, "derived_series_dims");
    if (!a.unipotent_part_dim) throw MissingOracle(e.name, "unipotent_part_dim");
    int d1 = (*a.derived_series_dims)[1];
    if (d1 <= 0 || d1 >= a.dimension)
        throw DescriptorError(e.name + ": derived series is inconsistent with a non-abelian kernel");
    if (*a.unipotent_part_dim < d1)
        throw DescriptorError(e.name + ": unipotent part smaller than the derived subgroup");

    GroupDescriptor comm;   // derived subgroup of a connected solvable group is unipotent
    comm.name = "[" + a.name + "," + a.name + "]";
    comm.connected = true;
    comm.solvable = true;
    comm.unipotent = true;
    comm.dimension = d1;
    comm.unipotent_part_dim = d1;
    comm.derived_series_dims =
        std::vector<int>(a.derived_series_dims->begin() + 1, a.derived_series_dims->end());
    if (d1 == 1) comm.minimal_normal = true;

    GroupDescriptor ab;
    ab.name = a.name + "/[,]";
    ab.connected = true;
    ab.abelian = true;
    ab.solvable = true;
    ab.dimension = a.dimension - d1;
    ab.unipotent_part_dim = *a.unipotent_part_dim - d1;

    GroupDescriptor middle;
    middle.name = e.source.name + "/[" + a.name + "]";
    middle.reduced = true;
    middle.dimension = e.source.dimension - d1;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".ab";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = ab;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".comm";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = comm;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> unipotent_torus_split(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    if (!a.unipotent_part_dim) throw MissingOracle(e.name, "unipotent_part_dim");
    int u = *a.unipotent_part_dim;
    GroupDescriptor uni;
    uni.name = a.name + "_u";
    uni.connected = true;
    uni.abelian = a.abelian;
    uni.solvable = true;
    uni.unipotent = true;
    uni.dimension = u;
    uni.unipotent_part_dim = u;
    if (u == 1) uni.minimal_normal = true;

    GroupDescriptor tor;
    tor.name = a.name + "/" + a.name + "_u";
    tor.connected = true;
    tor.abelian = true;
    tor.solvable = true;
    tor.torus = true;
    tor.dimension = a.dimension - u;
    tor.unipotent_part_dim = 0;

    GroupDescriptor middle;
    middle.name = e.source.name + "/" + a.name + "_u";
    middle.reduced = true;
    middle.dimension = e.source.dimension - u;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".tor";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = tor;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".uni";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = uni;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> minimal_unipotent_split(const EpiDescriptor& e,
                                                                std::string* note) {
    const GroupDescriptor& a = e.kernel;
    int piece = a.minimal_split_dim.value_or(1);
    if (piece <= 0 || piece >= a.dimension)
        throw DescriptorError(e.name + ": minimal unipotent split size out of range");
    if (!a.minimal_split_dim && note)
        *note = "peeling a one-dimensional minimal piece (default split size)";

    GroupDescriptor v;
    v.name = a.name + ".min";
    v.connected = true;
    v.solvable = true;
    v.unipotent = true;
    v.minimal_normal = true;
    v.dimension = piece;
    v.unipotent_part_dim = piece;

    GroupDescriptor rest;
    rest.name = a.name + "/min";
    rest.connected = true;
    rest.solvable = true;
    rest.unipotent = true;
    rest.abelian = a.abelian;
    rest.dimension = a.dimension - piece;
    rest.unipotent_part_dim = a.dimension - piece;

    GroupDescriptor middle;
    middle.name = e.source.name + "/" + v.name;
    middle.reduced = true;
    middle.dimension = e.source.dimension - piece;
    middle.connected = e.source.connected;
    middle.component_group = e.source.component_group;

    EpiDescriptor outer;
    outer.name = e.name + ".rest";
    outer.source = middle;
    outer.target = e.target;
    outer.kernel = rest;
    outer.split = e.split;
    outer.frattini = e.frattini;
    outer.H = e.H;

    EpiDescriptor inner;
    inner.name = e.name + ".min";
    inner.source = e.source;
    inner.target = middle;
    inner.H = e.H;
    inner.kernel = v;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> supplement_split(const EpiDescriptor& e,
                                                         std::string* note) {
    GroupDescriptor residual;
    if (e.frattini_residual) {
        residual = *e.frattini_residual;
    } else {
        residual = trivial_group_descriptor("1");
        if (note) *note = "minimal-supplement residual defaulted to trivial";
    }
    if (!residual.finite && residual.dimension >= e.kernel.dimension)
        throw DescriptorError(e.name + ": frattini residual must be finite or smaller than the kernel");

    GroupDescriptor suppl;
    suppl.name = "Suppl(" + e.name + ")";
    suppl.reduced = true;
    suppl.dimension = e.target.dimension + residual.dimension;
    suppl.connected = e.target.connected;
    suppl.component_group = e.target.component_group;

    EpiDescriptor outer;   // restriction to the minimal supplement
    outer.name = e.name + ".frat";
    outer.source = suppl;
    outer.target = e.target;
    outer.kernel = residual;
    outer.frattini = true;

    GroupDescriptor prod;
    prod.name = e.kernel.name + "x|" + suppl.name;
    prod.reduced = true;
    prod.dimension = e.kernel.dimension + suppl.dimension;
    prod.connected = e.kernel.connected && suppl.connected;
    prod.component_group = suppl.component_group;

    EpiDescriptor inner;   // projection off the kernel
    inner.name = e.name + ".split";
    inner.source = prod;
    inner.target = suppl;
    inner.kernel = e.kernel;
    inner.split = true;
    inner.H = e.H;
    inner.frattini_residual.reset();
    return {outer, inner};
}

std::string resolve_h(const EpiDescriptor& e, bool use_source_component) {
    if (!e.H.empty()) return e.H;
    const GroupDescriptor& carrier = use_source_component ? e.source : e.target;
    if (carrier.component_trivial()) return "trivial";
    throw MissingOracle(e.name, "H");
}

// kernel order of the product map G0 x| H -> G0 . H when both H and the
// component group are concrete
std::optional<int> mu_kernel_order(const std::string& h_ref, const std::string& comp_ref,
                                   std::vector<std::string>* notes) {
    auto h_ord = resolve_group_order(h_ref);
    auto c_ord = resolve_group_order(comp_ref);
    if (!h_ord || !c_ord) return std::nullopt;
    if (*h_ord % *c_ord != 0) throw DescriptorError("H cannot cover the component group");
    int k = *h_ord / *c_ord;
    if (notes && h_ref.rfind("catalogue:", 0) == 0 && comp_ref.rfind("catalogue:", 0) == 0 &&
        *c_ord > 1) {
        // minimality bridge: H -> component must admit a Frattini surjection
        FiniteGroup H = catalogue_group(h_ref.substr(10));
        FiniteGroup C = catalogue_group(comp_ref.substr(10));
        bool found = false;
        for (const auto& hom : surjective_homs(H, C))
            if (is_frattini_epi(hom)) {
                found = true;
                break;
            }
        notes->push_back(found ? "H admits a Frattini surjection onto the component group"
                                : "warning: no Frattini surjection from H onto the component group;"
                                  " H is not minimal");
    }
    return k;
}

std::pair<EpiDescriptor, EpiDescriptor> semidirect_h_lift(const EpiDescriptor& e,
                                                          std::vector<std::string>* notes) {
    std::string h = resolve_h(e, false);
    GroupDescriptor targ0 = connected_part(e.target);

    GroupDescriptor lifted_target;
    lifted_target.name = targ0.name + "x|" + h;
    lifted_target.reduced = true;
    lifted_target.dimension = e.target.dimension;
    lifted_target.component_group = h;
    lifted_target.connected = (h == "trivial");
    lifted_target.semidirect_with_h = true;

    std::optional<int> mu_ord;
    if (h == "trivial")
        mu_ord = 1;
    else
        mu_ord = mu_kernel_order(h, e.target.component_group, notes);

    EpiDescriptor outer;   // product map onto the target
    outer.name = e.name + ".mu";
    outer.source = lifted_target;
    outer.target = e.target;
    outer.kernel = finite_descriptor("H&" + targ0.name, mu_ord);
    outer.type_mu = true;
    outer.frattini = true;
    outer.H = h;
    if (h == "trivial" && notes) notes->push_back("H is trivial; the product map is an isomorphism");

    GroupDescriptor lifted_source;
    lifted_source.name = "(" + e.kernel.name + "x|" + targ0.name + ")x|" + h;
    lifted_source.reduced = true;
    lifted_source.dimension = e.kernel.dimension + e.target.dimension;
    lifted_source.component_group = h;
    lifted_source.connected = (h == "trivial");
    lifted_source.semidirect_with_h = true;

    EpiDescriptor inner;
    inner.name = e.name + ".hsplit";
    inner.source = lifted_source;
    inner.target = lifted_target;
    inner.kernel = e.kernel;
    inner.split = true;
    inner.H_split = true;
    inner.H_rigid = true;
    inner.H = h;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> frattini_h_lift(const EpiDescriptor& e,
                                                        std::vector<std::string>* notes) {
    std::string h = resolve_h(e, true);
    GroupDescriptor targ0 = connected_part(e.target);
    GroupDescriptor src0 = connected_part(e.source);

    GroupDescriptor lifted_target;
    lifted_target.name = targ0.name + "x|" + h;
    lifted_target.reduced = true;
    lifted_target.dimension = e.target.dimension;
    lifted_target.component_group = h;
    lifted_target.connected = (h == "trivial");
    lifted_target.semidirect_with_h = true;

    std::optional<int> mu_ord;
    if (h == "trivial")
        mu_ord = 1;
    else
        mu_ord = mu_kernel_order(h, e.source.component_group, notes);

    EpiDescriptor outer;   // (g, h) -> g . beta(h)
    outer.name = e.name + ".mu";
    outer.source = lifted_target;
    outer.target = e.target;
    outer.kernel = finite_descriptor("H&" + targ0.name, mu_ord);
    outer.type_mu = true;
    outer.frattini = true;
    outer.H = h;
    if (h == "trivial" && notes) notes->push_back("H is trivial; the product map is an isomorphism");

    GroupDescriptor lifted_source;
    lifted_source.name = src0.name + "x|" + h;
    lifted_source.reduced = true;
    lifted_source.dimension = e.source.dimension;
    lifted_source.component_group = h;
    lifted_source.connected = (h == "trivial");
    lifted_source.semidirect_with_h = true;

    EpiDescriptor inner;
    inner.name = e.name + ".hfrat";
    inner.source = lifted_source;
    inner.target = lifted_target;
    inner.kernel = e.kernel;
    inner.frattini = true;
    inner.H_rigid = true;
    inner.H = h;
    return {outer, inner};
}

std::pair<EpiDescriptor, EpiDescriptor> trivial_factor(const EpiDescriptor& e) {
    EpiDescriptor inner;
    inner.name = e.name + ".id";
    inner.source = e.source;
    inner.target = e.source;
    inner.kernel = trivial_group_descriptor("1");
    return {e, inner};
}

// the first applicable rule in proof order, after normalization
std::optional<Rule> select_rule(const EpiDescriptor& e) {
    const GroupDescriptor& a = e.kernel;
    if (!a.finite && !a.connected) return Rule::ComponentSplit;
    if (a.connected && !a.finite) {
        bool structured = a.semisimple || a.solvable || a.abelian || a.torus || a.unipotent;
        if (!structured) {
            if (!a.radical_dim) throw MissingOracle(e.name, "radical_dim");
            // normalization retags full/zero radicals, so a genuine split is due
            return Rule::RadicalSplit;
        }
        if (a.semisimple && !a.centerless) return Rule::CenterSplit;
        if (a.solvable && !a.abelian && !a.unipotent && !a.torus) return Rule::CommutatorSplit;
        if (a.abelian && !a.torus && !a.unipotent) return Rule::UnipotentTorusSplit;
        if (a.unipotent && !a.minimal_normal) return Rule::MinimalUnipotentSplit;
    }
    if (!e.split && !e.frattini && !(e.H_rigid && e.H_split) && a.connected && !a.finite)
        return Rule::SupplementSplit;
    if (e.split && !(e.H_rigid && e.H_split)) return Rule::SemidirectHLift;
    if (e.frattini && !e.H_rigid) return Rule::FrattiniHLift;
    return std::nullopt;
}

bool measure_less(const Measure& x, const Measure& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void build_node(DecompNode& node, std::vector<std::string>& warnings, int depth) {
    if (depth > 64) throw DescriptorError("decomposition recursion depth exceeded");
    for (auto& note : normalize_group(node.epi.kernel)) node.annotations.push_back(note);
    normalize_group(node.epi.source);
    normalize_group(node.epi.target);

    if (auto leaf = classify_leaf(node.epi)) {
        node.leaf = leaf;
        return;
    }
    auto rule = select_rule(node.epi);
    if (!rule)
        throw DescriptorError(node.epi.name + ": no applicable rule; descriptors are inconsistent");
    node.rule = rule;

    std::string note;
    std::vector<std::string> lift_notes;
    std::pair<EpiDescriptor, EpiDescriptor> kids = [&] {
        switch (*rule) {
            case Rule::ComponentSplit: return component_split(node.epi);
            case Rule::RadicalSplit: return radical_split(node.epi);
            case Rule::CenterSplit: return center_split(node.epi);
            case Rule::CommutatorSplit: return commutator_split(node.epi);
            case Rule::UnipotentTorusSplit: return unipotent_torus_split(node.epi);
            case Rule::MinimalUnipotentSplit: return minimal_unipotent_split(node.epi, &note);
            case Rule::SupplementSplit: return supplement_split(node.epi, &note);
            case Rule::SemidirectHLift: return semidirect_h_lift(node.epi, &lift_notes);
            case Rule::FrattiniHLift: return frattini_h_lift(node.epi, &lift_notes);
            case Rule::TrivialFactor: return trivial_factor(node.epi);
        }
        throw DescriptorError("unreachable");
    }();
    if (!note.empty()) node.annotations.push_back(note);
    for (auto& n : lift_notes) node.annotations.push_back(n);
    if (*rule == Rule::CommutatorSplit)
        warnings.push_back(node.epi.name +
                           ": commutator split applied; reducedness is read as a kernel property");

    if (*rule == Rule::SupplementSplit)
        node.psi_kernel_dim = kids.first.kernel.dimension;
    else if (*rule == Rule::SemidirectHLift || *rule == Rule::FrattiniHLift)
        node.psi_kernel_dim = 0;

    Measure parent = epi_measure(node.epi);
    for (auto* kid : {&kids.first, &kids.second}) {
        EpiDescriptor copy = *kid;
        normalize_group(copy.kernel);
        if (classify_leaf(copy)) continue;   // terminal children end their branch
        Measure child = epi_measure(copy);
        if (!measure_less(child, parent))
            throw DescriptorError(node.epi.name + ": rewrite did not decrease the measure (" +
                                  rule_name(*rule) + ")");
    }

    node.children.push_back(std::make_unique<DecompNode>());
    node.children.back()->epi = kids.first;
    node.children.push_back(std::make_unique<DecompNode>());
    node.children.back()->epi = kids.second;
    for (auto& child : node.children) build_node(*child, warnings, depth + 1);
}

void collect_leaves(const DecompNode* node, std::vector<const DecompNode*>& out) {
    if (node->leaf) {
        out.push_back(node);
        return;
    }
    for (const auto& c : node->children) collect_leaves(c.get(), out);
}

std::size_t count_nodes(const DecompNode* node) {
    std::size_t n = 1;
    for (const auto& c : node->children) n += count_nodes(c.get());
    return n;
}

}   // namespace

std::pair<EpiDescriptor, EpiDescriptor> elementary_decompose(const EpiDescriptor& e, Rule r) {
    EpiDescriptor copy = e;
    normalize_group(copy.kernel);
    std::vector<std::string> errors, warnings;
    validate_epi(copy, errors, warnings);
    if (!errors.empty()) throw DescriptorError("invalid descriptor: " + errors.front());
    std::string note;
    std::vector<std::string> notes;
    switch (r) {
        case Rule::TrivialFactor:
            if (!copy.kernel.is_trivial())
                throw DescriptorError(copy.name + ": trivial-factor needs a trivial kernel");
            return trivial_factor(copy);
        case Rule::ComponentSplit:
            if (copy.kernel.finite || copy.kernel.connected)
                throw DescriptorError(copy.name + ": component split needs a disconnected infinite kernel");
            return component_split(copy);
        case Rule::RadicalSplit:
            if (!copy.kernel.connected) throw DescriptorError(copy.name + ": kernel must be connected");
            return radical_split(copy);
        case Rule::CenterSplit:
            if (!copy.kernel.semisimple || copy.kernel.centerless)
                throw DescriptorError(copy.name + ": center split needs a semisimple kernel with center");
            return center_split(copy);
        case Rule::CommutatorSplit:
            if (!copy.kernel.solvable || copy.kernel.abelian)
                throw DescriptorError(copy.name + ": commutator split needs a non-abelian solvable kernel");
            return commutator_split(copy);
        case Rule::UnipotentTorusSplit:
            if (!copy.kernel.abelian || copy.kernel.torus || copy.kernel.unipotent)
                throw DescriptorError(copy.name + ": unipotent-torus split needs a mixed abelian kernel");
            return unipotent_torus_split(copy);
        case Rule::MinimalUnipotentSplit:
            if (!copy.kernel.unipotent || copy.kernel.minimal_normal)
                throw DescriptorError(copy.name + ": minimal split needs a non-minimal unipotent kernel");
            return minimal_unipotent_split(copy, &note);
        case Rule::SupplementSplit:
            if (copy.frattini) throw DescriptorError(copy.name + ": already a frattini map");
            return supplement_split(copy, &note);
        case Rule::SemidirectHLift:
            if (!copy.split) throw DescriptorError(copy.name + ": semidirect lift needs a split map");
            return semidirect_h_lift(copy, &notes);
        case Rule::FrattiniHLift:
            if (!copy.frattini) throw DescriptorError(copy.name + ": frattini lift needs a frattini map");
            return frattini_h_lift(copy, &notes);
    }
    throw DescriptorError("unknown rule");
}

DecompTree decompose(const EpiDescriptor& root) {
    DecompTree tree;
    EpiDescriptor copy = root;
    normalize_group(copy.kernel);
    normalize_group(copy.source);
    normalize_group(copy.target);
    std::vector<std::string> errors;
    validate_epi(copy, errors, tree.warnings);
    if (!errors.empty()) throw DescriptorError("invalid descriptor: " + errors.front());
    if (!copy.kernel.reduced) throw DescriptorError("decomposition requires a reduced kernel");
    tree.root = std::make_unique<DecompNode>();
    tree.root->epi = copy;
    build_node(*tree.root, tree.warnings, 0);
    std::string recomp = check_recomposition(tree);
    if (!recomp.empty()) throw DescriptorError("recomposition check failed: " + recomp);
    return tree;
}

std::vector<const DecompNode*> DecompTree::leaves() const {
    std::vector<const DecompNode*> out;
    if (root) collect_leaves(root.get(), out);
    return out;
}

std::size_t DecompTree::node_count() const { return root ? count_nodes(root.get()) : 0; }

namespace {

std::string check_node_recomposition(const DecompNode& node) {
    if (node.leaf) return {};
    if (node.children.size() != 2) return node.epi.name + ": internal node without two children";
    const EpiDescriptor& outer = node.children[0]->epi;
    const EpiDescriptor& inner = node.children[1]->epi;
    const EpiDescriptor& parent = node.epi;
    switch (*node.rule) {
        case Rule::ComponentSplit:
        case Rule::RadicalSplit:
        case Rule::CenterSplit:
        case Rule::CommutatorSplit:
        case Rule::UnipotentTorusSplit:
        case Rule::MinimalUnipotentSplit: {
            if (inner.source.name != parent.source.name ||
                inner.source.dimension != parent.source.dimension)
                return parent.name + ": inner source differs from the parent source";
            if (outer.target.name != parent.target.name ||
                outer.target.dimension != parent.target.dimension)
                return parent.name + ": outer target differs from the parent target";
            if (inner.target.name != outer.source.name)
                return parent.name + ": factor middle groups do not match";
            if (inner.kernel.dimension + outer.kernel.dimension != parent.kernel.dimension)
                return parent.name + ": kernel dimensions do not add up";
            break;
        }
        case Rule::SupplementSplit:
        case Rule::SemidirectHLift:
        case Rule::FrattiniHLift: {
            if (outer.target.name != parent.target.name ||
                outer.target.dimension != parent.target.dimension)
                return parent.name + ": outer target differs from the parent target";
            if (inner.target.name != outer.source.name)
                return parent.name + ": factor middle groups do not match";
            if (inner.kernel.dimension != parent.kernel.dimension)
                return parent.name + ": inner kernel dimension changed";
            if (*node.rule == Rule::SupplementSplit &&
                outer.kernel.dimension != node.psi_kernel_dim)
                return parent.name + ": supplement residual bookkeeping broken";
            if (*node.rule != Rule::SupplementSplit && !outer.kernel.finite)
                return parent.name + ": H-lift finite factor is not finite";
            break;
        }
        case Rule::TrivialFactor:
            break;
    }
    for (const auto& c : node.children) {
        std::string err = check_node_recomposition(*c);
        if (!err.empty()) return err;
    }
    return {};
}

}   // namespace

std::string check_recomposition(const DecompTree& tree) {
    if (!tree.root) return "empty tree";
    return check_node_recomposition(*tree.root);
}

EpiDescriptor subdirect_rewrite(const EpiDescriptor& e) {
    if (!e.H_rigid || !e.H_split)
        throw DescriptorError(e.name + ": subdirect rewrite needs an H-rigid, H-split map");
    bool torus_case = e.kernel.torus;
    bool ss_case = e.kernel.semisimple && e.kernel.centerless;
    if (!torus_case && !ss_case)
        throw DescriptorError(e.name +
                              ": subdirect rewrite applies to torus or semisimple centerless kernels");
    EpiDescriptor out = e;
    out.subdirect_H_split = true;
    GroupDescriptor targ0 = connected_part(e.target);
    out.source.name = "(" + e.kernel.name + "x" + targ0.name + ")x|" + (e.H.empty() ? "H" : e.H);
    return out;
}

SolutionPlan build_solution_plan(const DecompTree& tree) {
    SolutionPlan plan;
    bool cite_freeness = false;
    int order = 0;
    for (const DecompNode* leaf : tree.leaves()) {
        const EpiDescriptor& e = leaf->epi;
        auto cls = classify_leaf(e);
        if (!cls) throw DescriptorError(e.name + ": unclassified leaf");
        if (*cls != *leaf->leaf) throw DescriptorError(e.name + ": stored leaf class is stale");
        PlanStep step;
        step.order = order++;
        step.leaf_class = *cls;
        step.epi_name = e.name;
        switch (*cls) {
            case LeafClass::FiniteKernel:
                step.strategy = "finite-kernel";
                if (e.kernel.is_trivial())
                    step.detail = "identity";
                else if (e.frattini && !e.type_mu)
                    step.detail = "frattini-criterion";
                else if (e.type_mu || e.split) {
                    step.detail = "free-fundamental-group-axiom";
                    cite_freeness = true;
                } else {
                    step.detail = "case-split";
                    cite_freeness = true;
                }
                break;
            case LeafClass::HRigidFrattini:
                step.strategy = "frattini-lift";
                step.detail = "preimage lifting through the twisted form";
                break;
            case LeafClass::SemisimpleCenterless:
            case LeafClass::Torus: {
                EpiDescriptor rewritten = subdirect_rewrite(e);
                step.strategy = "subdirect-product";
                step.detail = "rewrites the source as " + rewritten.source.name;
                break;
            }
            case LeafClass::MinimalUnipotent:
                step.strategy = "unipotent-parameter";
                step.detail = "equivariant parameter family with the class-separation test";
                break;
        }
        plan.steps.push_back(std::move(step));
    }
    if (cite_freeness)
        plan.external_axioms.push_back(
            "finite embedding problems over the base field have proper solutions");
    return plan;
}

namespace {

nlohmann::ordered_json node_to_json(const DecompNode& node) {
    nlohmann::ordered_json j;
    j["epi"] = epi_to_json(node.epi);
    if (node.rule) j["rule"] = rule_name(*node.rule);
    if (node.leaf) {
        j["leaf_class"] = static_cast<int>(*node.leaf);
        j["leaf_class_name"] = leaf_class_name(*node.leaf);
    }
    if (!node.annotations.empty()) j["annotations"] = node.annotations;
    if (!node.children.empty()) {
        nlohmann::ordered_json kids = nlohmann::ordered_json::array();
        for (const auto& c : node.children) kids.push_back(node_to_json(*c));
        j["children"] = kids;
    }
    return j;
}

}   // namespace

nlohmann::ordered_json tree_to_json(const DecompTree& tree) {
    nlohmann::ordered_json j;
    j["schema"] = "decomposition/1";
    j["root"] = node_to_json(*tree.root);
    if (!tree.warnings.empty()) j["warnings"] = tree.warnings;
    return j;
}

nlohmann::ordered_json plan_to_json(const SolutionPlan& plan) {
    nlohmann::ordered_json j;
    j["schema"] = "plan/1";
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : plan.steps) {
        nlohmann::ordered_json js;
        js["order"] = s.order;
        js["leaf_class"] = static_cast<int>(s.leaf_class);
        js["leaf_class_name"] = leaf_class_name(s.leaf_class);
        js["epi"] = s.epi_name;
        js["strategy"] = s.strategy;
        js["detail"] = s.detail;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["external_axioms"] = plan.external_axioms;
    return j;
}

}   // namespace idg
