#include "idg/cli.hpp"

#include "idg/decomposer.hpp"
#include "idg/derivation.hpp"
#include "idg/group_ops.hpp"
#include "idg/parser.hpp"
#include "idg/rng.hpp"
#include "idg/scenario.hpp"

#include "CLI11.hpp"

namespace idg::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
    bool json_output = false;

    std::string field = "GF(3)";
    std::string extension;
    std::string expr;
    std::size_t k = 1;
    std::size_t order = 8;
    std::size_t order_bound = 16;
    long samples = 20;
    std::uint64_t seed = 1;
    std::size_t num_deg = 2, den_deg = 2;

    std::string system_file;
    std::string scenario_file;
    std::string y_file;
    std::string c_file;
    std::string matrix_text;
    int level = 0;
    std::size_t level_count = 1;

    std::string group, onto, left, right, target;
    std::string hom1, hom2;
    std::string normal, acting, action = "trivial", sub;

    std::string descriptor_file;
    bool with_plan = false;
};

DiffField make_arena(const Options& opt) {
    FiniteField K = parse_field(opt.field);
    if (!opt.extension.empty())
        return DiffField::extension(parse_extension(opt.extension, K, opt.order_bound));
    return DiffField::base(K, opt.order_bound);
}

Matrix matrix_from_arg(const std::string& text, const FiniteField& K, char var) {
    json j = json::parse(text);
    return matrix_from_json(j, K, var);
}

void cmd_derive(const Options& opt, Report& rep) {
    DiffField arena = make_arena(opt);
    rep.constants_field = arena.constants().designator();
    RatFunc f = parse_expr(opt.expr, arena.constants(), arena.variable());
    RatFunc d = arena.derive(f, opt.k);
    rep.data["input"] = f.to_string();
    rep.data["k"] = opt.k;
    rep.data["result"] = d.to_string();
}

void cmd_taylor(const Options& opt, Report& rep) {
    DiffField arena = make_arena(opt);
    rep.constants_field = arena.constants().designator();
    RatFunc f = parse_expr(opt.expr, arena.constants(), arena.variable());
    TruncSeries th(arena.derive_upto(f, opt.order), opt.order);
    rep.data["input"] = f.to_string();
    rep.data["order"] = opt.order;
    rep.data["result"] = th.to_string();
}

void cmd_axioms(const Options& opt, Report& rep) {
    FiniteField K = parse_field(opt.field);
    rep.constants_field = K.designator();
    IterativeDerivation der(K, 't', std::max(opt.order, opt.order_bound));
    Rng rng(opt.seed);
    std::vector<RatFunc> samples;
    while (static_cast<long>(samples.size()) < opt.samples) {
        std::vector<FieldElem> nc, dc;
        for (std::size_t i = 0; i <= opt.num_deg; ++i)
            nc.push_back(K.from_int(static_cast<std::int64_t>(rng.below(K.order()))));
        for (std::size_t i = 0; i <= opt.den_deg; ++i)
            dc.push_back(K.from_int(static_cast<std::int64_t>(rng.below(K.order()))));
        Poly num(K, nc), den(K, dc);
        if (den.is_zero()) continue;
        samples.push_back(RatFunc(num, den, 't'));
    }
    AxiomReport ar = der.verify_axioms(samples, opt.order);
    rep.data["samples"] = samples.size();
    rep.data["order"] = opt.order;
    rep.add_check("additivity", "derivation-axiom", ar.ok || ar.witness->axiom != "additivity");
    rep.add_check("leibniz", "derivation-axiom", ar.ok || ar.witness->axiom != "leibniz");
    rep.add_check("composition", "derivation-axiom",
                  ar.ok || ar.witness->axiom != "composition");
    rep.add_check("p-curvature", "derivation-axiom",
                  ar.ok || ar.witness->axiom != "p-curvature");
    if (!ar.ok) {
        rep.fail("axiom violated");
        rep.data["witness"] =
            ar.witness->axiom + " f=" + ar.witness->f + " g=" + ar.witness->g +
            " i=" + std::to_string(ar.witness->i) + " j=" + std::to_string(ar.witness->j);
    }
}

void cmd_ide(const Options& opt, Report& rep) {
    LoadedSystem ls = system_from_json(load_json_file(opt.system_file));
    rep.constants_field = ls.ctx.constants().designator();
    SystemCheck chk = check_projective_system(ls.sys);
    rep.add_check("projective-system", "level-and-invertibility", chk.ok,
                  chk.ok ? "" : chk.reason + " at level " + std::to_string(chk.failed_level));
    if (!chk.ok) return;
    IdeCoefficients A = ide_from_projective(ls.sys);
    rep.data["A"] = matrix_seq_to_json(A.A);
}

void cmd_check_fsm(const Options& opt, Report& rep) {
    LoadedSystem ls = system_from_json(load_json_file(opt.system_file));
    rep.constants_field = ls.ctx.constants().designator();
    json yj = load_json_file(opt.y_file);
    DiffField y_arena = ls.ctx;
    if (yj.contains("field")) {
        FiniteField K = parse_field(yj.at("field").get<std::string>());
        std::size_t bound = yj.value("order_bound", ls.ctx.order_bound());
        y_arena = yj.contains("extension")
                      ? DiffField::extension(
                            parse_extension(yj.at("extension").get<std::string>(), K, bound))
                      : DiffField::base(K, bound);
    }
    Matrix Y = matrix_from_json(yj.contains("Y") ? yj.at("Y") : yj, y_arena.constants(),
                                y_arena.variable());
    SystemCheck chk = check_projective_system(ls.sys);
    rep.add_check("projective-system", "level-and-invertibility", chk.ok,
                  chk.ok ? "" : chk.reason);
    if (!chk.ok) return;
    IdeCoefficients A = ide_from_projective(ls.sys);
    SystemCheck fc = check_fundamental(Y, A, y_arena);
    rep.add_check("fundamental-matrix", "p-power derivatives match A_l Y", fc.ok,
                  fc.ok ? "" : fc.reason + " at level " + std::to_string(fc.failed_level));
}

void cmd_gauge(const Options& opt, Report& rep) {
    LoadedSystem ls = system_from_json(load_json_file(opt.system_file));
    rep.constants_field = ls.ctx.constants().designator();
    json cj = load_json_file(opt.c_file);
    std::vector<Matrix> C = matrix_seq_from_json(cj.contains("C") ? cj.at("C") : cj,
                                                 ls.ctx.constants(), ls.ctx.variable());
    ProjectiveSystem out = gauge_transform(ls.sys, C);
    rep.add_check("gauge-output", "revalidated projective system", true);
    rep.data["system"] = system_to_json(out);
}

void cmd_equivariance(const Options& opt, Report& rep) {
    Scenario sc = scenario_from_json(load_json_file(opt.scenario_file));
    rep.constants_field = sc.arena.constants().designator();
    EquivariantSystem es = sc.equivariant_system("equivariance");
    EquivarianceReport er = check_equivariant(es);
    for (std::size_t l = 0; l < er.level_ok.size(); ++l)
        rep.add_check("level " + std::to_string(l), "galois action matches section conjugation",
                      er.level_ok[l],
                      er.level_ok[l] || er.failed_level != static_cast<int>(l)
                          ? ""
                          : "power " + std::to_string(er.failed_power) + " entry " +
                                er.failed_entry);
}

void cmd_compose(const Options& opt, Report& rep) {
    Scenario sc = scenario_from_json(load_json_file(opt.scenario_file));
    rep.constants_field = sc.arena.constants().designator();
    if (!sc.Z) throw ParseError("compose needs a 'Z' sequence", 0);
    ProjectiveSystem out = compose_solution(*sc.Z, sc.equivariant_system("compose"));
    rep.add_check("composed-system", "entries galois fixed and level correct", true);
    rep.data["system"] = system_to_json(out);
}

void cmd_hilbert90(const Options& opt, Report& rep, bool seed_given, bool level_given) {
    Scenario sc = scenario_from_json(load_json_file(opt.scenario_file));
    rep.constants_field = sc.arena.constants().designator();
    GaloisSection chi = sc.require_chi("hilbert90");
    std::uint64_t seed = seed_given ? opt.seed : sc.seed;
    int level = level_given ? opt.level : sc.level;
    Matrix Z = hilbert90_solve(chi, seed, level);
    rep.add_check("cocycle", "galois image equals Z times the section", true);
    rep.data["seed"] = seed;
    rep.data["level"] = level;
    rep.data["Z"] = matrix_to_json(Z);
}

void cmd_form_member(const Options& opt, Report& rep) {
    Scenario sc = scenario_from_json(load_json_file(opt.scenario_file));
    rep.constants_field = sc.arena.constants().designator();
    GaloisSection chi = sc.require_chi("form-member");
    Matrix g = matrix_from_arg(opt.matrix_text, sc.arena.constants(), sc.arena.variable());
    bool member = form_membership(chi, g, opt.level);
    rep.add_check("form-membership", "shape, level and star invariance", member,
                  member ? "" : "matrix not in the form at level " + std::to_string(opt.level));
    rep.data["member"] = member;
}

void cmd_pv_equal(const Options& opt, Report& rep) {
    Scenario sc = scenario_from_json(load_json_file(opt.scenario_file));
    rep.constants_field = sc.arena.constants().designator();
    GaloisSection chi = sc.require_chi("pv-equal");
    if (!sc.U || !sc.Uprime) throw ParseError("pv-equal needs 'U' and 'Uprime' sequences", 0);
    FormMembership member = [&](const Matrix& M, int level) {
        return form_membership(chi, M, level);
    };
    bool eq = pv_equivalent(*sc.U, *sc.Uprime, opt.level_count, member);
    rep.add_check("pv-equivalence", "partial products differ by a form member", eq,
                  eq ? "" : "sequences are not equivalent");
    rep.data["equivalent"] = eq;
}

void cmd_frattini(const Options& opt, Report& rep) {
    FiniteGroup G = group_from_spec(opt.group);
    rep.data["group"] = G.name();
    rep.data["order"] = G.order();
    std::vector<int> phi = frattini_subgroup(G);
    ordered_json phij = ordered_json::array();
    for (int e : phi) phij.push_back(e);
    rep.data["frattini_subgroup"] = phij;
    if (opt.onto.empty()) return;
    FiniteGroup Q = group_from_spec(opt.onto);
    auto homs = surjective_homs(G, Q);
    if (homs.empty()) {
        rep.fail("no surjective homomorphism onto " + Q.name());
        return;
    }
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < homs.size(); ++i) {
        bool brute = is_frattini_epi(homs[i]);
        bool crit = frattini_criterion(homs[i]);
        rep.add_check("hom " + std::to_string(i) + " criterion agrees with brute force",
                      "kernel inside the frattini subgroup", brute == crit,
                      brute == crit ? "" : "disagreement");
        ordered_json one;
        one["images"] = homs[i].images;
        one["brute_force"] = brute;
        one["criterion"] = crit;
        results.push_back(one);
    }
    rep.data["surjections"] = results;
}

void cmd_fibre(const Options& opt, Report& rep) {
    std::optional<GroupHom> phi1, phi2;
    if (!opt.hom1.empty() && !opt.hom2.empty()) {
        phi1 = hom_from_json(load_json_file(opt.hom1));
        phi2 = hom_from_json(load_json_file(opt.hom2));
    } else {
        FiniteGroup A = group_from_spec(opt.left);
        FiniteGroup B = group_from_spec(opt.right);
        FiniteGroup C = group_from_spec(opt.target);
        auto h1 = surjective_homs(A, C);
        auto h2 = surjective_homs(B, C);
        if (h1.empty() || h2.empty())
            throw GroupError("no surjections from the chosen groups onto the target");
        phi1 = h1.front();
        phi2 = h2.front();
    }
    FibreProduct fp = fibre_product(*phi1, *phi2);
    rep.data["order"] = fp.group.order();
    if (phi1->is_surjective() && phi2->is_surjective()) {
        long expect = static_cast<long>(phi1->source.order()) * phi2->source.order() /
                      phi1->target.order();
        rep.add_check("order-law", "product order times target order", fp.group.order() == expect,
                      fp.group.order() == expect ? "" : "order mismatch");
    }
}

void cmd_semidirect(const Options& opt, Report& rep) {
    FiniteGroup N = group_from_spec(opt.normal);
    FiniteGroup H = group_from_spec(opt.acting);
    std::vector<std::vector<int>> action;
    if (opt.action == "trivial") {
        action = trivial_action(N, H);
    } else if (opt.action == "inversion") {
        if (!N.is_abelian()) throw GroupError("inversion action needs an abelian normal part");
        if (H.order() != 2) throw GroupError("inversion action is defined for an acting Z2");
        std::vector<int> inv(static_cast<std::size_t>(N.order()));
        for (int a = 0; a < N.order(); ++a) inv[a] = N.inv(a);
        action.push_back(trivial_action(N, H)[0]);
        action.push_back(inv);
    } else {
        json aj = load_json_file(opt.action);
        for (const auto& row : aj.at("maps")) action.push_back(row.get<std::vector<int>>());
    }
    SemidirectProduct sp = semidirect_product(N, H, action);
    rep.data["order"] = sp.group.order();
    rep.data["name"] = sp.group.name();
    rep.data["abelian"] = sp.group.is_abelian();
    ordered_json table = ordered_json::array();
    for (int a = 0; a < sp.group.order(); ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < sp.group.order(); ++b) row.push_back(sp.group.mul(a, b));
        table.push_back(row);
    }
    rep.data["table"] = table;
    rep.add_check("order", "product of the factor orders",
                  sp.group.order() == N.order() * H.order());
}

void cmd_type_mu(const Options& opt, Report& rep) {
    FiniteGroup G = group_from_spec(opt.group);
    std::vector<int> N = parse_element_list(opt.normal);
    std::vector<int> H = parse_element_list(opt.sub);
    TypeMuResult r = type_mu_epi(G, N, H);
    rep.data["kernel_order"] = r.kernel.size();
    rep.add_check("kernel-formula", "antidiagonal kernel over the intersection",
                  r.kernel_matches_formula);
}

void cmd_decompose(const Options& opt, Report& rep, bool plan_only) {
    EpiDescriptor e = epi_from_json(load_json_file(opt.descriptor_file));
    DecompTree tree = decompose(e);
    SolutionPlan plan = build_solution_plan(tree);
    std::vector<int> classes;
    for (const auto* leaf : tree.leaves()) classes.push_back(static_cast<int>(*leaf->leaf));
    rep.data["leaf_classes"] = classes;
    rep.add_check("leaf-classes", "every leaf in the five terminal classes", true);
    std::string recomp = check_recomposition(tree);
    rep.add_check("recomposition", "children compose back to each parent", recomp.empty(),
                  recomp);
    if (!plan_only) rep.data["tree"] = tree_to_json(tree);
    if (plan_only || opt.with_plan) rep.data["plan"] = plan_to_json(plan);
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, Report& rep) {
    CLI::App app{"exact tools for iterative derivations, projective systems and"
                 " group decompositions"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "print the machine-readable report");

    auto add_field = [&](CLI::App* c) {
        c->add_option("--field", opt.field, "field designator, e.g. GF(3)");
        c->add_option("--extension", opt.extension, "kummer(m=..) or artin-schreier");
        c->add_option("--order-bound", opt.order_bound, "derivation truncation bound");
    };

    CLI::App* derive = app.add_subcommand("derive", "higher derivative of an expression");
    add_field(derive);
    derive->add_option("--expr", opt.expr)->required();
    derive->add_option("--k", opt.k)->required();

    CLI::App* taylor = app.add_subcommand("taylor", "truncated taylor expansion");
    add_field(taylor);
    taylor->add_option("--expr", opt.expr)->required();
    taylor->add_option("--order", opt.order)->required();

    CLI::App* axioms = app.add_subcommand("axioms", "randomized derivation axiom suite");
    add_field(axioms);
    axioms->add_option("--samples", opt.samples);
    axioms->add_option("--order", opt.order);
    axioms->add_option("--seed", opt.seed);
    axioms->add_option("--num-deg", opt.num_deg);
    axioms->add_option("--den-deg", opt.den_deg);

    CLI::App* ide = app.add_subcommand("ide", "equation coefficients of a projective system");
    ide->add_option("--system", opt.system_file)->required();

    CLI::App* fsm = app.add_subcommand("check-fsm", "verify a fundamental solution matrix");
    fsm->add_option("--system", opt.system_file)->required();
    fsm->add_option("--Y", opt.y_file, "matrix file, optionally with its own arena")->required();

    CLI::App* gauge = app.add_subcommand("gauge", "gauge transform of a projective system");
    gauge->add_option("--system", opt.system_file)->required();
    gauge->add_option("--C", opt.c_file)->required();

    CLI::App* equi = app.add_subcommand("equivariance", "check a system against a section");
    equi->add_option("--scenario", opt.scenario_file)->required();

    CLI::App* comp = app.add_subcommand("compose", "descend an equivariant system to the base");
    comp->add_option("--scenario", opt.scenario_file)->required();

    CLI::App* h90 = app.add_subcommand("hilbert90", "solve the cyclic cocycle equation");
    h90->add_option("--scenario", opt.scenario_file)->required();
    CLI::Option* h90_seed = h90->add_option("--seed", opt.seed);
    CLI::Option* h90_level = h90->add_option("--level", opt.level);

    CLI::App* form = app.add_subcommand("form-member", "twisted form membership");
    form->add_option("--scenario", opt.scenario_file)->required();
    form->add_option("--matrix", opt.matrix_text, "inline json matrix")->required();
    form->add_option("--level", opt.level);

    CLI::App* pv = app.add_subcommand("pv-equal", "level-wise equivalence of sequences");
    pv->add_option("--scenario", opt.scenario_file)->required();
    pv->add_option("--level-count", opt.level_count)->required();

    CLI::App* frat = app.add_subcommand("frattini", "frattini subgroup and epimorphism tests");
    frat->add_option("--group", opt.group)->required();
    frat->add_option("--onto", opt.onto);

    CLI::App* fibre = app.add_subcommand("fibre", "fibre product of two surjections");
    fibre->add_option("--hom1", opt.hom1);
    fibre->add_option("--hom2", opt.hom2);
    fibre->add_option("--left", opt.left);
    fibre->add_option("--right", opt.right);
    fibre->add_option("--target", opt.target);

    CLI::App* semi = app.add_subcommand("semidirect", "semidirect product from an action");
    semi->add_option("--normal", opt.normal)->required();
    semi->add_option("--acting", opt.acting)->required();
    semi->add_option("--action", opt.action, "trivial, inversion, or an action file");

    CLI::App* tmu = app.add_subcommand("type-mu", "product-map epimorphism and its kernel");
    tmu->add_option("--group", opt.group)->required();
    tmu->add_option("--normal", opt.normal)->required();
    tmu->add_option("--sub", opt.sub)->required();

    CLI::App* dec = app.add_subcommand("decompose", "decompose an epimorphism descriptor");
    dec->add_option("--descriptor", opt.descriptor_file)->required();
    dec->add_flag("--plan", opt.with_plan, "also emit the solution plan");

    CLI::App* plan = app.add_subcommand("plan", "solution plan for a descriptor");
    plan->add_option("--descriptor", opt.descriptor_file)->required();

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->add_flag("--json", opt.json_output, "print the machine-readable report");
        sub->fallthrough();
    }

    std::string cmdline = "idg";
    for (const auto& a : args) cmdline += " " + a;
    rep.command = cmdline;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return 0;
        }
        rep.error(e.what());
        out << (opt.json_output ? rep.to_json().dump(2) + "\n" : rep.to_text());
        out << app.help() << "\n";
        return 2;
    }

    try {
        if (derive->parsed()) cmd_derive(opt, rep);
        else if (taylor->parsed()) cmd_taylor(opt, rep);
        else if (axioms->parsed()) cmd_axioms(opt, rep);
        else if (ide->parsed()) cmd_ide(opt, rep);
        else if (fsm->parsed()) cmd_check_fsm(opt, rep);
        else if (gauge->parsed()) cmd_gauge(opt, rep);
        else if (equi->parsed()) cmd_equivariance(opt, rep);
        else if (comp->parsed()) cmd_compose(opt, rep);
        else if (h90->parsed())
            cmd_hilbert90(opt, rep, h90_seed->count() > 0, h90_level->count() > 0);
        else if (form->parsed()) cmd_form_member(opt, rep);
        else if (pv->parsed()) cmd_pv_equal(opt, rep);
        else if (frat->parsed()) cmd_frattini(opt, rep);
        else if (fibre->parsed()) cmd_fibre(opt, rep);
        else if (semi->parsed()) cmd_semidirect(opt, rep);
        else if (tmu->parsed()) cmd_type_mu(opt, rep);
        else if (dec->parsed()) cmd_decompose(opt, rep, false);
        else if (plan->parsed()) cmd_decompose(opt, rep, true);
    } catch (const std::exception& e) {
        rep.error(e.what());
    }

    out << (opt.json_output ? rep.to_json().dump(2) + "\n" : rep.to_text());
    return rep.exit_code();
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    Report rep;
    return run(args, out, rep);
}

}   // namespace idg::cli
