#include "ddt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddt/cosimplicial.hpp"
#include "ddt/generators.hpp"
#include "ddt/json_io.hpp"
#include "ddt/linfinity.hpp"
#include "ddt/mc.hpp"
#include "ddt/minimal.hpp"
#include "ddt/nerve.hpp"
#include "ddt/sullivan.hpp"

namespace ddt::cli {

namespace {

struct Report {
    Json j;
    Report(const std::string& subcommand) {
        j["subcommand"] = subcommand;
        j["inputs"] = Json::object();
        j["flags"] = Json::object();
        j["warnings"] = Json::array();
        j["result"] = Json::object();
        j["status"] = "ok";
    }
    void warn(const std::string& w) { j["warnings"].push_back(w); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path, Report& rep) {
    std::string bytes = read_file(path);
    rep.j["inputs"][path] = content_hash(bytes);
    try {
        return Json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

std::vector<Scalar> coords_from_json(const Field& f, const Json& j, long expect) {
    if (!j.is_array() || static_cast<long>(j.size()) != expect)
        throw validation_error("coordinate vector must have length " + std::to_string(expect));
    std::vector<Scalar> v;
    for (auto& x : j) v.push_back(scalar_from_json(f, x));
    return v;
}

Json coords_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

Json cohomology_to_json(const Cohomology& h) {
    Json out;
    out["dims"] = graded_space_to_json(h.groups);
    Json reps = Json::object();
    for (auto& [n, m] : h.representatives)
        if (m.cols() > 0) reps[std::to_string(n)] = matrix_to_json(m);
    out["representatives"] = reps;
    return out;
}

Json mc_system_to_json(const MCSystem& sys) {
    Json out;
    Json vars = Json::array();
    for (long v = 0; v < sys.variable_count(); ++v) vars.push_back(sys.variable_name(v));
    out["variables"] = vars;
    Json eqs = Json::array();
    auto& targets = sys.tensor->component(2);
    for (size_t e = 0; e < sys.equations.size(); ++e) {
        Json eq;
        eq["target"] = sys.tensor->pair_name(targets[e]);
        Json terms = Json::array();
        auto& q = sys.equations[e];
        for (long v = 0; v < static_cast<long>(q.linear.size()); ++v)
            if (!q.linear[static_cast<size_t>(v)].is_zero())
                terms.push_back(Json{{"vars", Json::array({v})}, {"coeff", scalar_to_json(q.linear[static_cast<size_t>(v)])}});
        for (auto& [vw, c] : q.quadratic)
            terms.push_back(Json{{"vars", Json::array({vw.first, vw.second})}, {"coeff", scalar_to_json(c)}});
        eq["terms"] = terms;
        eqs.push_back(eq);
    }
    out["equations"] = eqs;
    return out;
}

const char* schema_text(const std::string& type) {
    if (type == "dgla")
        return R"({
  "field": "Q" | {"Fp": 5},
  "generators": [{"name": "x", "degree": 1}],
  "diff": [{"on": "a", "value": [["x", 1]]}],
  "brackets": [{"a": "x", "b": "x", "value": [["y", 1]]}]
}
(degrees are cochain degrees: d raises degree by 1; the missing bracket
order is derived from graded antisymmetry))";
    if (type == "ring")
        return R"({
  "field": "Q" | {"Fp": 5},
  "basis": [{"name": "1", "degree": 0}, {"name": "t", "degree": 0}],
  "unit": "1",
  "products": [{"a": "t", "b": "t", "value": [["t2", 1]]}],
  "diff": [{"on": "h", "value": [["hp", 1]]}],
  "maximal_ideal": ["t", "t2"]
}
(degrees are chain degrees: d lowers degree by 1; products are listed for
one order, the other follows from graded commutativity; unit products are
implied))";
    if (type == "complex")
        return R"({
  "field": "Q" | {"Fp": 5},
  "grading": "cochain" | "chain",
  "dims": {"0": 2, "1": 1},
  "diff": {"0": [[1, 0]]}
}
(diff["n"] maps degree n to n+1 for cochain, n to n-1 for chain; matrices
are row-major and act on column vectors))";
    if (type == "bicomplex")
        return R"({
  "field": "Q",
  "dims": {"0,0": 1, "1,0": 1},
  "dc": {"0,0": [[1]]},
  "ds": {}
}
(keys are "c,r" with c the cochain and r the chain degree; d_c and d_s are
stored commuting; tot introduces the sign (-1)^c))";
    if (type == "simplicial")
        return R"({
  "field": "Q",
  "levels": [1, 2, 3],
  "faces": {"1": [M0, M1], "2": [M0, M1, M2]},
  "degeneracies": {"0": [M0], "1": [M0, M1]}
}
(faces["n"][i] maps level n to n-1, degeneracies["n"][i] level n to n+1))";
    if (type == "algebra")
        return R"({
  "field": "Q",
  "basis": [{"name": "1", "degree": 0}, {"name": "u", "degree": 1}],
  "unit": "1",
  "products": [{"a": "u", "b": "v", "value": [["uv", 1]]}],
  "diff": [{"on": "u", "value": [["w", 1]]}]
}
(a non-negatively graded cochain DG algebra; d raises degree by 1))";
    if (type == "surjection")
        return R"({
  "source": <ring>,
  "target": <ring>,
  "map": [{"on": "t", "value": [["t", 1]]}]
}
(when "map" is omitted, basis elements are matched by name and names absent
from the target map to zero))";
    if (type == "point")
        return R"({"coords": [0, 1, "1/2"]}
(coordinates in the variable order reported by mc-system))";
    return nullptr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ddt: exact computations for derived deformation theory"};
    app.require_subcommand(1);

    std::string dgla_path, ring_path, complex_path, bicomplex_path, simplicial_path, algebra_path, surjection_path;
    std::string point_path, point0_path, point1_path, schema_type, output_path;
    int degree = 0, level = 0, nmax = 4, dmax = 4, bound = 8;
    long weight = 2, seed = 1;
    bool all_points = false;

    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output", output_path, "write the report to a file"); };

    auto* v_dgla = app.add_subcommand("validate-dgla", "check the DGLA axioms");
    v_dgla->add_option("--dgla", dgla_path)->required();
    add_output(v_dgla);

    auto* v_ring = app.add_subcommand("validate-ring", "check the Artinian DG algebra axioms");
    v_ring->add_option("--ring", ring_path)->required();
    add_output(v_ring);

    auto* coh = app.add_subcommand("cohomology", "cohomology of a complex or of a DGLA's tangent complex");
    coh->add_option("--dgla", dgla_path);
    coh->add_option("--complex", complex_path);
    add_output(coh);

    auto* mcsys = app.add_subcommand("mc-system", "emit the Maurer-Cartan equation system");
    mcsys->add_option("--dgla", dgla_path)->required();
    mcsys->add_option("--ring", ring_path)->required();
    add_output(mcsys);

    auto* mcenum = app.add_subcommand("mc-enumerate", "enumerate MC solutions over F_p");
    mcenum->add_option("--dgla", dgla_path)->required();
    mcenum->add_option("--ring", ring_path)->required();
    add_output(mcenum);

    auto* orbits = app.add_subcommand("gauge-orbits", "gauge orbits of the MC solution set over F_p");
    orbits->add_option("--dgla", dgla_path)->required();
    orbits->add_option("--ring", ring_path)->required();
    add_output(orbits);

    auto* obs = app.add_subcommand("obstruction", "obstruction classes along a small extension");
    obs->add_option("--dgla", dgla_path)->required();
    obs->add_option("--surjection", surjection_path)->required();
    obs->add_option("--point", point_path, "MC element over the target (JSON {\"coords\": [...]})");
    obs->add_flag("--all", all_points, "enumerate all MC points over F_p and report each class");
    add_output(obs);

    auto* mccoh = app.add_subcommand("mc-cohomology", "H^n(mc(L)) against dim H^{n+1}(L)");
    mccoh->add_option("--dgla", dgla_path)->required();
    mccoh->add_option("--degree", degree, "single degree; defaults to the range [-3, 3]");
    add_output(mccoh);

    auto* nerve_cmd = app.add_subcommand("nerve", "the level-n nerve MC system over A");
    nerve_cmd->add_option("--dgla", dgla_path)->required();
    nerve_cmd->add_option("--ring", ring_path)->required();
    nerve_cmd->add_option("--level", level)->default_val(1);
    nerve_cmd->add_option("--dmax", dmax)->default_val(4);
    add_output(nerve_cmd);

    auto* htpy = app.add_subcommand("mc-homotopic", "search for a nerve path between two MC elements");
    htpy->add_option("--dgla", dgla_path)->required();
    htpy->add_option("--ring", ring_path)->required();
    htpy->add_option("--omega0", point0_path)->required();
    htpy->add_option("--omega1", point1_path)->required();
    htpy->add_option("--dmax", dmax)->default_val(4);
    add_output(htpy);

    auto* dk = app.add_subcommand("dold-kan", "simplicial normalization and denormalization");
    auto* dk_n = dk->add_subcommand("normalize", "N^s of a simplicial vector space");
    dk_n->add_option("--simplicial", simplicial_path)->required();
    add_output(dk_n);
    auto* dk_d = dk->add_subcommand("denormalize", "N^{-1} of a chain complex");
    dk_d->add_option("--complex", complex_path)->required();
    dk_d->add_option("--nmax", nmax)->default_val(4);
    add_output(dk_d);

    auto* tot = app.add_subcommand("tot", "total complex of a bicomplex");
    tot->add_option("--bicomplex", bicomplex_path)->required();
    add_output(tot);

    auto* totstar = app.add_subcommand("tot-star", "left adjoint of Tot, truncated");
    totstar->add_option("--complex", complex_path)->required();
    totstar->add_option("--bound", bound)->default_val(8);
    add_output(totstar);

    auto* minimal = app.add_subcommand("minimal-model", "decompose a quasi-smooth bicomplex");
    minimal->add_option("--bicomplex", bicomplex_path)->required();
    add_output(minimal);

    auto* symm = app.add_subcommand("symm", "graded symmetric power of a complex");
    symm->add_option("--complex", complex_path)->required();
    symm->add_option("--weight", weight)->default_val(2);
    add_output(symm);

    auto* bracket = app.add_subcommand("bracket", "bracket on the cohomology of a DGLA");
    bracket->add_option("--dgla", dgla_path)->required();
    add_output(bracket);

    auto* factor = app.add_subcommand("factor", "factor a surjection into small extensions");
    factor->add_option("--surjection", surjection_path)->required();
    add_output(factor);

    auto* schema = app.add_subcommand("schema", "print the expected JSON shape of a type");
    schema->add_option("type", schema_type, "dgla | ring | complex | bicomplex | simplicial | algebra | surjection | point")
        ->required();

    auto* selftest = app.add_subcommand("selftest", "run seeded randomized property checks");
    selftest->add_option("--seed", seed)->default_val(1);
    add_output(selftest);

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargs;
        cargs.push_back("ddt");
        for (auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::endl;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << std::endl;
        return 2;
    }

    auto emit = [&](Report& rep) {
        std::string text = rep.j.dump(2) + "\n";
        if (!output_path.empty()) {
            std::ofstream f(output_path, std::ios::binary);
            f << text;
        }
        out << text;
        return 0;
    };

    try {
        if (schema->parsed()) {
            const char* text = schema_text(schema_type);
            if (!text) throw validation_error("unknown schema type '" + schema_type + "'");
            out << text << std::endl;
            return 0;
        }

        if (v_dgla->parsed()) {
            Report rep("validate-dgla");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            rep.j["result"]["generators"] = l.dim();
            Json degs = Json::object();
            for (long i = 0; i < l.dim(); ++i) degs[l.name(i)] = l.degree(i);
            rep.j["result"]["degrees"] = degs;
            rep.j["result"]["axioms"] = "ok";
            return emit(rep);
        }
        if (v_ring->parsed()) {
            Report rep("validate-ring");
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            rep.j["result"]["dimension"] = a.dim();
            rep.j["result"]["nilpotency_index"] = a.nilpotency_index();
            rep.j["result"]["axioms"] = "ok";
            return emit(rep);
        }
        if (coh->parsed()) {
            Report rep("cohomology");
            if (dgla_path.empty() == complex_path.empty())
                throw validation_error("pass exactly one of --dgla or --complex");
            GradedComplex c = dgla_path.empty() ? complex_from_json(load_json(complex_path, rep))
                                                : dgla_from_json(load_json(dgla_path, rep)).tangent_complex();
            rep.j["result"]["cohomology"] = cohomology_to_json(cohomology(c));
            rep.j["result"]["euler_characteristic"] = euler_characteristic(c);
            return emit(rep);
        }
        if (mcsys->parsed()) {
            Report rep("mc-system");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            MCSystem sys = build_mc_system(l, a);
            rep.j["result"] = mc_system_to_json(sys);
            return emit(rep);
        }
        if (mcenum->parsed()) {
            Report rep("mc-enumerate");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            MCSystem sys = build_mc_system(l, a);
            auto sols = enumerate_mc(sys);
            Json list = Json::array();
            for (auto& s : sols) list.push_back(coords_to_json(s));
            rep.j["result"]["variables"] = mc_system_to_json(sys)["variables"];
            rep.j["result"]["solutions"] = list;
            rep.j["result"]["count"] = sols.size();
            return emit(rep);
        }
        if (orbits->parsed()) {
            Report rep("gauge-orbits");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            MCSystem sys = build_mc_system(l, a);
            OrbitPartition p = deformation_classes(sys);
            Json sols = Json::array();
            for (auto& s : p.solutions) sols.push_back(coords_to_json(s));
            Json orbs = Json::array();
            for (auto& o : p.orbits) orbs.push_back(o);
            rep.j["result"]["solutions"] = sols;
            rep.j["result"]["orbits"] = orbs;
            rep.j["result"]["orbit_count"] = p.orbits.size();
            return emit(rep);
        }
        if (obs->parsed()) {
            Report rep("obstruction");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            SurjectionSpec spec = surjection_from_json(load_json(surjection_path, rep));
            AlgebraMorphism f{&spec.source, &spec.target, spec.map};
            f.validate();
            if (!f.is_surjective()) throw validation_error("obstruction requires a surjection");
            SmallExtension e{spec.source, spec.target, spec.map, image_basis(f.kernel())};
            e.validate();
            MCSystem sys_b = build_mc_system(l, e.target);
            Json points = Json::array();
            std::vector<std::vector<Scalar>> base_points;
            if (all_points) {
                base_points = enumerate_mc(sys_b);
            } else {
                if (point_path.empty()) throw validation_error("pass --point or --all");
                Json pj = load_json(point_path, rep);
                base_points.push_back(coords_from_json(l.field(), pj.at("coords"), sys_b.variable_count()));
            }
            for (auto& p : base_points) {
                ObstructionClass c = obstruction(e, l, p);
                Json entry;
                entry["point"] = coords_to_json(p);
                entry["class"] = coords_to_json(c.klass);
                entry["vanishes"] = c.is_zero();
                entry["representative"] = coords_to_json(c.representative);
                points.push_back(entry);
            }
            rep.j["result"]["h2_dims"] = points.empty() ? Json::object() : graded_space_to_json(obstruction(e, l, base_points[0]).h2);
            rep.j["result"]["points"] = points;
            return emit(rep);
        }
        if (mccoh->parsed()) {
            Report rep("mc-cohomology");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            Cohomology h = cohomology(l.tangent_complex());
            Json list = Json::array();
            int lo = -3, hi = 3;
            if (mccoh->count("--degree")) lo = hi = degree;
            for (int n = lo; n <= hi; ++n) {
                long mc_dim = mc_cohomology(l, n);
                Json entry;
                entry["n"] = n;
                entry["mc_cohomology"] = mc_dim;
                entry["tangent_h_n_plus_1"] = h.groups.dim(n + 1);
                entry["agree"] = (mc_dim == h.groups.dim(n + 1));
                list.push_back(entry);
            }
            rep.j["result"]["degrees"] = list;
            return emit(rep);
        }
        if (nerve_cmd->parsed()) {
            Report rep("nerve");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            NerveLevel lvl = nerve_level(l, a, level, dmax);
            rep.warn("truncation: polynomial degree <= " + std::to_string(dmax));
            rep.j["result"]["level"] = level;
            rep.j["result"]["dmax"] = dmax;
            rep.j["result"]["system"] = mc_system_to_json(lvl.system);
            return emit(rep);
        }
        if (htpy->parsed()) {
            Report rep("mc-homotopic");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            ArtinianDGAlgebra a = artinian_from_json(load_json(ring_path, rep));
            MCSystem sys = build_mc_system(l, a);
            Json p0 = load_json(point0_path, rep), p1 = load_json(point1_path, rep);
            auto w0 = coords_from_json(l.field(), p0.at("coords"), sys.variable_count());
            auto w1 = coords_from_json(l.field(), p1.at("coords"), sys.variable_count());
            HomotopyResult r = mc_homotopic(l, a, w0, w1, dmax);
            rep.warn(r.caveat);
            rep.j["result"]["homotopic"] = r.homotopic;
            rep.j["result"]["dmax"] = r.d_max;
            if (r.path) rep.j["result"]["path"] = coords_to_json(*r.path);
            return emit(rep);
        }
        if (dk_n->parsed()) {
            Report rep("dold-kan normalize");
            SimplicialVS v = simplicial_from_json(load_json(simplicial_path, rep));
            Normalization n = normalize_s(v);
            rep.j["result"]["complex"] = complex_to_json(n.complex);
            rep.j["result"]["homotopy"] = graded_space_to_json(cohomology(n.complex).groups);
            return emit(rep);
        }
        if (dk_d->parsed()) {
            Report rep("dold-kan denormalize");
            GradedComplex c = complex_from_json(load_json(complex_path, rep));
            SimplicialVS v = denormalize_s(c, nmax);
            rep.warn("truncation: levels <= " + std::to_string(nmax));
            rep.j["result"]["simplicial"] = simplicial_to_json(v);
            return emit(rep);
        }
        if (tot->parsed()) {
            Report rep("tot");
            Bicomplex b = bicomplex_from_json(load_json(bicomplex_path, rep));
            TotalComplex t = tot_pi(b);
            rep.j["result"]["complex"] = complex_to_json(t.complex);
            rep.j["result"]["cohomology"] = graded_space_to_json(cohomology(t.complex).groups);
            return emit(rep);
        }
        if (totstar->parsed()) {
            Report rep("tot-star");
            GradedComplex c = complex_from_json(load_json(complex_path, rep));
            if (c.grading != Grading::Chain) {
                rep.warn("input converted to chain grading via V^n = V_{-n}");
                c = c.converted(Grading::Chain);
            }
            rep.warn("truncation: cochain degrees <= " + std::to_string(bound));
            rep.j["result"]["bicomplex"] = bicomplex_to_json(tot_pi_star(c, bound));
            return emit(rep);
        }
        if (minimal->parsed()) {
            Report rep("minimal-model");
            Bicomplex b = bicomplex_from_json(load_json(bicomplex_path, rep));
            MinimalDecomposition d = minimal_decomposition(b);
            rep.j["result"]["homology"] = graded_space_to_json(d.homology);
            rep.j["result"]["minimal_part"] = bicomplex_to_json(d.minimal_part);
            rep.j["result"]["acyclic_part"] = bicomplex_to_json(d.acyclic_part);
            Json iso = Json::object();
            for (auto& [s, m] : d.iso)
                iso[std::to_string(s.first) + "," + std::to_string(s.second)] = matrix_to_json(m);
            rep.j["result"]["iso"] = iso;
            rep.j["result"]["verified"] = true;
            return emit(rep);
        }
        if (symm->parsed()) {
            Report rep("symm");
            GradedComplex c = complex_from_json(load_json(complex_path, rep));
            GradedComplex s = symmetric_power_complex(c, weight);
            rep.j["result"]["complex"] = complex_to_json(s);
            rep.j["result"]["cohomology"] = graded_space_to_json(cohomology(s).groups);
            return emit(rep);
        }
        if (bracket->parsed()) {
            Report rep("bracket");
            DGLA l = dgla_from_json(load_json(dgla_path, rep));
            CohomologyBracket cb = cohomology_bracket(l);
            rep.j["result"]["h_dims"] = graded_space_to_json(cb.groups);
            Json table = Json::object();
            for (auto& [pq, m] : cb.constants)
                if (!m.is_zero())
                    table[std::to_string(pq.first) + "," + std::to_string(pq.second)] = matrix_to_json(m);
            rep.j["result"]["brackets"] = table;
            return emit(rep);
        }
        if (factor->parsed()) {
            Report rep("factor");
            SurjectionSpec spec = surjection_from_json(load_json(surjection_path, rep));
            AlgebraMorphism f{&spec.source, &spec.target, spec.map};
            auto chain = factor_surjection(f);
            Json steps = Json::array();
            for (auto& e : chain) {
                Json step;
                step["source_dim"] = e.source.dim();
                step["target_dim"] = e.target.dim();
                step["kernel_dim"] = e.kernel.cols();
                step["map"] = matrix_to_json(e.map);
                steps.push_back(step);
            }
            rep.j["result"]["steps"] = steps;
            rep.j["result"]["length"] = chain.size();
            return emit(rep);
        }
        if (selftest->parsed()) {
            Report rep("selftest");
            rep.j["flags"]["seed"] = seed;
            Rng rng(static_cast<unsigned long long>(seed));
            Field q = Field::rationals();
            long checks = 0;
            for (int i = 0; i < 5; ++i) {
                Matrix m = random_matrix(q, 3, 4, rng);
                if (rank(m) != rank(m.transpose())) throw validation_error("selftest: rank(m) != rank(m^T)");
                if (m.cols() != rank(m) + kernel_basis(m).cols())
                    throw validation_error("selftest: rank-nullity fails");
                checks += 2;
            }
            for (int i = 0; i < 3; ++i) {
                GradedComplex c = random_complex(q, Grading::Chain, 0, 3, 2, rng);
                SimplicialVS v = denormalize_s(c, 4);
                Normalization n = normalize_s(v);
                if (!(cohomology(n.complex).groups == cohomology(c).groups))
                    throw validation_error("selftest: Dold-Kan roundtrip fails");
                ++checks;
            }
            for (int i = 0; i < 3; ++i) {
                QuasiSmoothInstance inst = random_quasi_smooth(q, 3, 0, 2, 2, 2, rng);
                MinimalDecomposition d = minimal_decomposition(inst.bicomplex);
                if (!(d.homology == inst.homology)) throw validation_error("selftest: planted homology not recovered");
                ++checks;
            }
            rep.j["result"]["checks"] = checks;
            rep.j["result"]["passed"] = true;
            return emit(rep);
        }
        throw validation_error("no subcommand selected");
    } catch (const validation_error& e) {
        Json rep;
        rep["status"] = "error";
        rep["error"] = e.what();
        out << rep.dump(2) << std::endl;
        err << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << std::endl;
        return 1;
    }
}

}  // namespace ddt::cli
