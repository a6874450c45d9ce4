// equiv-alg: batch command-line surface over the equivalg library.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = input or usage error. Reports are deterministic for fixed inputs
// and seed.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <equivalg/io.hpp>
#include <equivalg/tubular.hpp>

namespace {

using namespace equivalg;
using io::json;

/// Accumulates check lines and the final exit code.
struct Reporter {
    int code = 0;

    void check(const std::string& name, const ValidationReport& rep) {
        if (rep.ok) {
            std::cout << "check " << name << ": ok\n";
            return;
        }
        std::cout << "check " << name << ": FAIL\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
        code = 1;
    }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            std::cout << "check " << name << ": ok\n";
            return;
        }
        std::cout << "check " << name << ": FAIL" << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        code = 1;
    }
};

std::string scalar_str(const Scalar& s) { return io::scalar_to_json(s).dump(); }

std::string vec_str(const Vec& v) { return io::vec_to_json(v).dump(); }

std::vector<ModuleRep> probe_family(const ModuleCategoryAction& act, const std::string& set) {
    if (set == "regular") return {ModuleRep::regular(act.algebra())};
    if (set == "default") return act.default_probes();
    throw std::runtime_error("unknown probe set: " + set + " (expected default or regular)");
}

WeakAction load_action(const std::string& path) { return io::weak_action_from_json(io::load_json(path)); }

int cmd_validate_algebra(const std::string& in) {
    auto A = io::algebra_from_json(io::load_json(in));
    std::cout << "algebra dim: " << A->dim() << "\n";
    std::cout << "center dim: " << A->center_basis().size() << "\n";
    Reporter rep;
    rep.check("algebra axioms", A->validate());
    return rep.code;
}

int cmd_validate_action(const std::string& in) {
    WeakAction w = load_action(in);
    std::cout << "group order: " << w.group()->order() << "\n";
    std::cout << "algebra dim: " << w.algebra()->dim() << "\n";
    Reporter rep;
    rep.check("weak action axioms", w.validate());
    return rep.code;
}

int cmd_crossed_product(const std::string& in, const std::string& out) {
    WeakAction w = load_action(in);
    auto cp = crossed_product(w);
    std::cout << "crossed product dim: " << cp.result->dim() << "\n";
    std::cout << "center dim: " << cp.result->center_basis().size() << "\n";
    Reporter rep;
    rep.check("dimension |G| * dim R",
              cp.result->dim() == w.group()->order() * w.algebra()->dim());
    rep.check("crossed product axioms", cp.result->validate());
    rep.check("base embedding multiplicative", crossed_embedding_multiplicative(w, cp));
    if (!out.empty()) io::save_json(out, io::algebra_to_json(*cp.result));
    return rep.code;
}

int cmd_equivariantize(const std::string& in, const std::string& module_file,
                       const std::string& out) {
    ModuleCategoryAction act(load_action(in));
    ModuleRep X = module_file.empty() ? ModuleRep::regular(act.algebra())
                                      : io::module_from_json(act.algebra(), io::load_json(module_file));
    EquivariantModule E = induction(act, X);
    std::cout << "induced module dim: " << E.base.dim() << "\n";
    Reporter rep;
    rep.check("induced equivariant structure", validate_equivariant(act, E));
    if (!out.empty()) io::save_json(out, io::equivariant_to_json(*act.group(), E));
    return rep.code;
}

int cmd_dualize(const std::string& in, const std::string& module_file, const std::string& out) {
    ModuleCategoryAction act(load_action(in));
    ModuleRep X = module_file.empty() ? ModuleRep::regular(act.algebra())
                                      : io::module_from_json(act.algebra(), io::load_json(module_file));
    NestedEquivariant N = theta(act, X);
    std::cout << "nested carrier dim: " << N.e.base.dim() << "\n";
    Reporter rep;
    rep.check("Theta(X) is a nested equivariant object", validate_nested(act, N));
    if (!out.empty()) io::save_json(out, io::nested_to_json(*act.group(), N));
    return rep.code;
}

int cmd_verify_duality(const std::string& in, const std::string& probe_set) {
    ModuleCategoryAction act(load_action(in));
    auto probes = probe_family(act, probe_set);
    std::vector<EquivariantModule> eprobes;
    for (const auto& M : probes) eprobes.push_back(induction(act, M));
    Reporter rep;
    rep.check("adjunctions and triangle identities", verify_adjunctions(act, probes, eprobes));
    rep.check("monad laws", verify_monad_laws(act, probes, eprobes));
    ValidationReport iso;
    for (const auto& E : eprobes) {
        auto r = verify_monad_isomorphism(act, E);
        if (!r.ok)
            for (const auto& v : r.violations) iso.fail(v);
    }
    rep.check("monad comparison isomorphism", iso);
    rep.check("Theta equivalence on probes", verify_theta_equivalence(act, probes));
    return rep.code;
}

int cmd_cyclic_classify(const std::string& in) {
    WeakAction w = load_action(in);
    auto cc = compatible_pair_from_action(w);
    std::cout << "cyclic order: " << cc.pair.d << "\n";
    std::cout << "c element: " << vec_str(cc.pair.c_elem) << "\n";
    Reporter rep;
    rep.check("compatible pair identities", cc.pair.validate());
    rep.check("round trip to the induced action", cc.roundtrip_ok);
    return rep.code;
}

int cmd_d_compatible(const std::string& in, std::uint64_t seed) {
    json j = io::load_json(in);
    auto A = io::algebra_from_json(j.at("algebra"));
    Matrix m = io::matrix_from_json(A->field(), j.at("sigma"));
    AlgebraMap sigma(A, A, std::move(m));
    std::size_t d = j.at("d").get<std::size_t>();
    if (!sigma.is_automorphism()) {
        std::cout << "check sigma is an automorphism: FAIL\n";
        return 1;
    }
    auto res = is_d_compatible(sigma, d, seed);
    switch (res.status) {
        case DCompatibleResult::Compatible:
            std::cout << "d-compatible: yes\n";
            std::cout << "witness: " << vec_str(res.witness) << "\n";
            return 0;
        case DCompatibleResult::NotCompatible:
            std::cout << "d-compatible: no\n";
            return 1;
        default:
            std::cout << "d-compatible: undetermined (search space too large)\n";
            return 1;
    }
}

int cmd_obstruction(const std::string& in, const std::string& probe_set) {
    json j = io::load_json(in);
    ModuleCategoryAction act(io::weak_action_from_json(j.at("action")));
    auto d = io::functor_datum_from_json(act.algebra(), *act.group(), j.at("functor"));
    Reporter rep;
    rep.check("commuting datum", validate_commuting_datum(act, d));
    if (rep.code) return rep.code;
    auto probes = probe_family(act, probe_set);
    auto sigma = obstruction_cocycle(act, d, probes);
    for (const auto& g : act.group()->elements())
        for (const auto& h : act.group()->elements())
            std::cout << "sigma(" << io::elem_key(g) << ";" << io::elem_key(h) << ") = "
                      << scalar_str(sigma.table[act.group()->index_of(g)]
                                               [act.group()->index_of(h)])
                      << "\n";
    rep.check("sigma is a 2-cocycle", is_2cocycle(sigma));
    auto cls = obstruction_class(act, d, probes);
    switch (cls.status) {
        case CoboundaryResult::Trivial:
            std::cout << "class: trivial class\n";
            rep.check("corrected lift", cls.lift && validate_equivariant_functor(act, *cls.lift).ok);
            break;
        case CoboundaryResult::Nontrivial:
            std::cout << "class: nontrivial class\n";
            break;
        default:
            std::cout << "class: undecidable\n";
            rep.code = 1;
            break;
    }
    return rep.code;
}

int cmd_k0_action(const std::string& in, std::uint64_t seed) {
    WeakAction w = load_action(in);
    auto k0 = k0_basis(w.algebra(), seed);
    if (!k0.conclusive) {
        std::cout << "k0 basis: inconclusive\n";
        for (const auto& n : k0.notes) std::cout << "  " << n << "\n";
        return 1;
    }
    std::cout << "k0 rank: " << k0.class_reps.size() << "\n";
    for (const auto& g : w.group()->elements()) {
        if (w.group()->is_identity(g)) continue;
        auto perm = k0_permutation(w.algebra(), k0, w.rho(g), seed);
        if (!perm) {
            std::cout << "k0 permutation for g=" << io::elem_key(g) << ": undetermined\n";
            return 1;
        }
        std::cout << "k0 permutation for g=" << io::elem_key(g) << ": " << json(*perm).dump() << "\n";
    }
    return 0;
}

int cmd_orbit_census(const std::string& in, const std::string& probe_set, std::uint64_t seed) {
    ModuleCategoryAction act(load_action(in));
    // the census needs indecomposable probes, so the default here is the set
    // of indecomposable summands of the regular module
    std::vector<ModuleRep> probes;
    if (probe_set == "default") {
        auto parts = decompose_module(ModuleRep::regular(act.algebra()), seed);
        if (!parts) {
            std::cout << "orbit census: inconclusive (regular module decomposition)\n";
            return 1;
        }
        for (const auto& p : *parts) probes.push_back(p.module);
    } else {
        probes = probe_family(act, probe_set);
    }
    auto oc = orbit_census(act, probes, seed);
    if (!oc) {
        std::cout << "orbit census: inconclusive\n";
        return 1;
    }
    std::cout << "module orbits: " << oc->module_orbits << "\n";
    std::cout << "equivariant orbits: " << oc->equivariant_orbits << "\n";
    Reporter rep;
    rep.check("probe family closed under twists", oc->module_probes_closed);
    rep.check("orbit counts match", oc->counts_match);
    return rep.code;
}

int cmd_appendix_suite(const std::string& in, const std::string& probe_set) {
    ModuleCategoryAction act(load_action(in));
    Reporter rep;
    rep.check("coherence identity suite", appendix_a_suite(act, probe_family(act, probe_set)));
    return rep.code;
}

int cmd_tubular(const std::string& type, const std::string& field_spec, long lambda,
                unsigned bound, bool check_table1, const std::string& out_prefix,
                std::uint64_t seed) {
    std::vector<std::uint64_t> weights;
    {
        std::istringstream in(type);
        std::string part;
        while (std::getline(in, part, ',')) weights.push_back(std::stoull(part));
    }
    FieldPtr f = io::parse_field_spec(field_spec);
    auto L = grading_group(weights);
    std::cout << "dualizing element order: " << L.order(L.omega()) << "\n";
    std::optional<Scalar> lam;
    if (weights == std::vector<std::uint64_t>{2, 2, 2, 2}) lam = Scalar::from_int(f, lambda);
    auto A = coordinate_algebra_truncation(f, weights, lam, bound);
    std::cout << "truncation monomials: " << A.normal_monomials().size() << "\n";
    Reporter rep;
    if (check_table1) {
        auto entries = table1_data(f, bound);
        auto scalings = table1_compatible_pairs(f, bound);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            rep.check(e.name + " is a graded automorphism",
                      validate_graded_automorphism(e.algebra, e.aut));
            const auto& s = scalings[i];
            std::cout << e.name << "^" << s.order << " = scaling by [";
            for (std::size_t k = 0; k < s.gamma.size(); ++k)
                std::cout << (k ? "," : "") << scalar_str(s.gamma[k]);
            std::cout << "]\n";
            rep.check(e.name + " scaling character well defined",
                      s.character_well_defined && s.psi_invariant);
            auto bridge = induced_weak_action(e.algebra, e.aut, e.shift, seed);
            rep.check(e.name + " induced cyclic action", bridge.action.validate().ok);
            if (!out_prefix.empty())
                io::save_json(out_prefix + "g" + std::to_string(i + 1) + ".json",
                              io::weak_action_to_json(bridge.action));
        }
    }
    return rep.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for weak group actions on finite-dimensional algebras"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();

    std::string in, out, module_file, probe_set = "default";
    std::string type, field_spec = "prime:13";
    long lambda = -1;
    unsigned bound = 8;
    bool check_table1 = false;

    auto add_in = [&](CLI::App* sub) { sub->add_option("--in", in, "input file")->required(); };
    auto add_probes = [&](CLI::App* sub) {
        sub->add_option("--probe-set", probe_set, "probe family: default or regular")->capture_default_str();
    };

    auto* va = app.add_subcommand("validate-algebra", "check the algebra axioms of a file");
    add_in(va);
    auto* vw = app.add_subcommand("validate-action", "check the weak action axioms of a file");
    add_in(vw);
    auto* cp = app.add_subcommand("crossed-product", "build and verify the crossed product");
    add_in(cp);
    cp->add_option("--out", out, "write the crossed product algebra here");
    auto* eq = app.add_subcommand("equivariantize", "induce an equivariant module");
    add_in(eq);
    eq->add_option("--module", module_file, "module file (default: regular module)");
    eq->add_option("--out", out, "write the equivariant module here");
    auto* du = app.add_subcommand("dualize", "apply the duality functor Theta to a module");
    add_in(du);
    du->add_option("--module", module_file, "module file (default: regular module)");
    du->add_option("--out", out, "write the nested equivariant object here");
    auto* vd = app.add_subcommand("verify-duality", "verify adjunctions, monad laws and Theta");
    add_in(vd);
    add_probes(vd);
    auto* cy = app.add_subcommand("cyclic-classify", "extract the compatible pair of a cyclic action");
    add_in(cy);
    auto* dc = app.add_subcommand("d-compatible", "decide d-compatibility of an automorphism");
    add_in(dc);
    auto* ob = app.add_subcommand("obstruction", "obstruction cocycle and class of a commuting datum");
    add_in(ob);
    add_probes(ob);
    auto* k0 = app.add_subcommand("k0-action", "induced permutation of projective classes");
    add_in(k0);
    auto* oc = app.add_subcommand("orbit-census", "orbit counts of modules vs equivariant modules");
    add_in(oc);
    add_probes(oc);
    auto* tb = app.add_subcommand("tubular", "tubular coordinate algebras and Table 1 data");
    tb->add_option("--type", type, "weight type, e.g. 6,3,2")->required();
    tb->add_option("--field", field_spec, "ground field, e.g. prime:13 or cyclotomic:12")->capture_default_str();
    tb->add_option("--lambda", lambda, "parameter for type 2,2,2,2")->capture_default_str();
    tb->add_option("--bound", bound, "degree-step truncation bound")->capture_default_str();
    tb->add_flag("--check-table1", check_table1, "validate the three Table 1 automorphisms");
    tb->add_option("--out", out, "prefix for emitted weak-action files");
    auto* ap = app.add_subcommand("appendix-a-suite", "full coherence identity suite on probes");
    add_in(ap);
    add_probes(ap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (va->parsed()) return cmd_validate_algebra(in);
        if (vw->parsed()) return cmd_validate_action(in);
        if (cp->parsed()) return cmd_crossed_product(in, out);
        if (eq->parsed()) return cmd_equivariantize(in, module_file, out);
        if (du->parsed()) return cmd_dualize(in, module_file, out);
        if (vd->parsed()) return cmd_verify_duality(in, probe_set);
        if (cy->parsed()) return cmd_cyclic_classify(in);
        if (dc->parsed()) return cmd_d_compatible(in, seed);
        if (ob->parsed()) return cmd_obstruction(in, probe_set);
        if (k0->parsed()) return cmd_k0_action(in, seed);
        if (oc->parsed()) return cmd_orbit_census(in, probe_set, seed);
        if (tb->parsed()) return cmd_tubular(type, field_spec, lambda, bound, check_table1, out, seed);
        if (ap->parsed()) return cmd_appendix_suite(in, probe_set);
    } catch (const std::domain_error& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
