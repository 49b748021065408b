// Command-line workbench for the noncrossing-configuration operad library:
// enumeration, suboperad closures, presentation verification, series
// checks, orbit and symmetry scans, and SVG rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nco/nco.hpp"

namespace {

using namespace nco;

struct Common {
    bool json = false;
    int jobs = 1;
};

int finish(const Report& rep, const Common& common) {
    if (common.json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        rep.print_human(std::cout);
    return rep.pass() ? 0 : 1;
}

std::string join_i64(const std::vector<i64>& v, int from, int to) {
    std::string s;
    for (int n = from; n <= to; ++n) {
        if (!s.empty()) s += ", ";
        s += std::to_string(v[n]);
    }
    return s;
}

int cmd_enum(const std::string& operad, int max_arity, const std::string& statistic,
             bool oracle, const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "enum --operad " + operad + " --max-arity " + std::to_string(max_arity);

    if (operad == "cncb") {
        auto dims = cncb_dims_by_closure(max_arity);
        Report::Table t{"dimensions", {"arity", "count"}, {}};
        for (int n = 1; n <= max_arity; ++n)
            t.rows.push_back({std::to_string(n), std::to_string(dims[n])});
        rep.tables.push_back(t);
        auto by_series = cncb_dims_by_series(max_arity);
        bool agree = true;
        for (int n = 1; n <= max_arity; ++n)
            if (dims[n] != by_series[n]) agree = false;
        rep.check("closure agrees with enveloping-series recursion", agree);
        if (oracle) {
            int bound = std::min(max_arity, 4);
            bool ok = true;
            for (int n = 1; n <= bound; ++n)
                if (static_cast<i64>(enumerate_direct(n, common.jobs).size()) != dims[n])
                    ok = false;
            rep.check("brute-force oracle to arity " + std::to_string(bound), ok);
        }
        if (!statistic.empty()) {
            int bound = std::min(max_arity, 4);
            MultiSeries F = refined_cncb(bound, statistic == "areas", common.jobs);
            Report::Table rt{"refined (" + statistic + ")", {"monomial", "count"}, {}};
            for (const auto& [m, v] : F.coeffs()) {
                std::string mono = "t^" + std::to_string(m[0]);
                if (m[1]) mono += " y1^" + std::to_string(m[1]);
                if (m[2]) mono += " y2^" + std::to_string(m[2]);
                rt.rows.push_back({mono, std::to_string(v)});
            }
            rep.tables.push_back(rt);
        }
    } else if (operad == "bulle") {
        BulleModel m;
        Report::Table t{"bubbles by output colour", {"arity", "based", "nonbased"}, {}};
        bool pow2 = true;
        for (int n = 2; n <= max_arity; ++n) {
            i64 c1 = 0, c2 = 0;
            for (const Bubble& b : m.elements(n)) (b.out == 1 ? c1 : c2)++;
            if (c1 != (i64(1) << n) || c2 != (i64(1) << n)) pow2 = false;
            t.rows.push_back({std::to_string(n), std::to_string(c1), std::to_string(c2)});
        }
        rep.tables.push_back(t);
        rep.check("2^n bubbles per output colour", pow2);
    } else if (operad == "fas" || operad == "alpha2") {
        EnvelopeDims d;
        if (operad == "fas") {
            FasModel m;
            d = dims_via_series(m, max_arity);
        } else {
            Alpha2Model m;
            d = dims_via_series(m, max_arity);
        }
        Report::Table t{"enveloping-operad dimensions", {"arity", "count"}, {}};
        for (int n = 1; n <= max_arity; ++n)
            t.rows.push_back({std::to_string(n), std::to_string(d.total.c[n])});
        rep.tables.push_back(t);
    } else {
        rep.check("operad name", false, "expected cncb|bulle|fas|alpha2");
    }
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

std::vector<Bubble> parse_gens(const std::string& list) {
    std::vector<Bubble> gens;
    for (const auto& tok : split(list, ','))
        gens.push_back(parse_bubble(trim(tok)));
    return gens;
}

int cmd_suboperad(const std::string& gen_list, int max_arity, bool coloured,
                  const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "suboperad --gens " + gen_list + " --max-arity " + std::to_string(max_arity);
    std::vector<Bubble> gens = parse_gens(gen_list);

    if (coloured) {
        auto graded = closure_bulle(gens, max_arity);
        Report::Table t{"coloured closure", {"arity", "based", "nonbased"}, {}};
        for (int n = 2; n <= max_arity; ++n) {
            i64 c1 = 0, c2 = 0;
            for (const Bubble& b : graded[n]) (b.out == 1 ? c1 : c2)++;
            t.rows.push_back({std::to_string(n), std::to_string(c1), std::to_string(c2)});
        }
        rep.tables.push_back(t);
    } else {
        std::vector<Bnc> bncs;
        for (const Bubble& g : gens) bncs.push_back(bnc_of_bubble(g));
        auto graded = closure_cncb(bncs, max_arity);
        Report::Table t{"closure dimensions", {"arity", "count"}, {}};
        for (int n = 1; n <= max_arity; ++n)
            t.rows.push_back({std::to_string(n), std::to_string(graded[n].size())});
        rep.tables.push_back(t);
        // cross-check through the enveloping-operad recursion
        auto sub = sub_bulle_model(gens, max_arity);
        auto d = dims_via_series(sub, max_arity);
        bool agree = true;
        for (int n = 1; n <= max_arity; ++n)
            if (d.total.c[n] != static_cast<i64>(graded[n].size())) agree = false;
        rep.check("closure agrees with enveloping-series recursion", agree);
    }
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

int cmd_verify(const std::string& name, int max_arity, int psi_degree, bool slow,
               const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "verify --presentation " + name + " --max-arity " + std::to_string(max_arity);

    PresentationSpec spec = presentation_by_name_or_file(name);
    std::string witness;
    rep.check("relation families sound", check_relation_families(spec, &witness), witness);

    if (!spec.system.rules.empty() || spec.relations.empty()) {
        OrientationReport r = verify_presentation(spec, max_arity, psi_degree);
        rep.check("oriented rules sound", r.sound,
                  r.unsound.empty() ? "" : r.unsound.front());
        rep.check("terminating to arity " + std::to_string(max_arity), r.terminating,
                  r.cycle_witness);
        if (r.psi_checked)
            rep.check("psi measure strictly decreases", r.psi_ok, r.psi_witness);
        rep.check("normal-form counts match dimensions", r.counts_match);
        Report::Table t{"normal forms", {"arity", "colour", "normal forms", "dimension"}, {}};
        for (const auto& [key, val] : r.counts)
            t.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                              std::to_string(val.first), std::to_string(val.second)});
        rep.tables.push_back(t);
    } else {
        rep.check("orientation registered", false,
                  "no good orientation is registered for this presentation");
    }

    if (slow && spec.system.rules.empty() && !spec.relations.empty()) {
        // scan every orientation of the relation families: minimum
        // normal-form count at the top arity vs the dimension there
        std::vector<Bnc> elems;
        for (const Bubble& g : spec.gens) elems.push_back(bnc_of_bubble(g));
        i64 want = static_cast<i64>(closure_cncb(elems, max_arity)[max_arity].size());
        TreeEnumerator en(spec.coll);
        i64 best = -1;
        int k = static_cast<int>(spec.relations.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            RewriteSystem sys{spec.coll};
            for (int i = 0; i < k; ++i) {
                const auto& fam = spec.relations[i];
                if (mask & (1u << i))
                    sys.add_rule(fam[0], fam[1]);
                else
                    sys.add_rule(fam[1], fam[0]);
            }
            i64 nf = count_normal_forms(sys, en, max_arity, 1);
            if (best < 0 || nf < best) best = nf;
        }
        rep.check("no orientation reaches the dimension count",
                  best > want,
                  "min normal forms " + std::to_string(best) + " vs dimension " +
                      std::to_string(want));
    }
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

int cmd_series(const std::string& target, int order, const std::string& format,
               const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "series --target " + target + " --order " + std::to_string(order);
    Report::Table t{"coefficients", {"n", "coefficient"}, {}};
    TruncSeries F(order);

    if (target == "cncb") {
        F = TruncSeries(order);
        F.c = cncb_dims_by_series(order);
        auto bad = check_poly_equation(registry().equation("cncb"), F, order);
        rep.check("algebraic equation", !bad,
                  bad ? "fails at order " + std::to_string(*bad) : "");
    } else if (target == "fas") {
        FasModel m;
        F = dims_via_series(m, order).total;
    } else if (target == "alpha2") {
        Alpha2Model m;
        F = dims_via_series(m, order).total;
    } else {
        // orbit record by name
        bool found = false;
        for (const auto& rec : registry().orbit_records()) {
            if (rec.name != target) continue;
            found = true;
            std::vector<Bnc> gens;
            for (const auto& g : rec.representative) gens.push_back(bnc_of_bubble(bubble_by_name(g)));
            auto graded = closure_cncb(gens, order);
            for (int n = 1; n <= order; ++n) F.c[n] = static_cast<i64>(graded[n].size());
            auto bad = check_poly_equation(registry().equation(rec.equation), F, order);
            rep.check("algebraic equation", !bad,
                      bad ? "fails at order " + std::to_string(*bad) : "");
        }
        if (!found) {
            rep.check("target known", false, "expected cncb|fas|alpha2|<orbit name>");
            rep.elapsed_ms = sw.ms();
            return finish(rep, common);
        }
    }
    for (int n = 1; n <= order; ++n)
        t.rows.push_back({std::to_string(n), std::to_string(F.c[n])});
    rep.tables.push_back(t);
    rep.elapsed_ms = sw.ms();

    if (format == "csv") {
        for (const auto& tab : rep.tables)
            for (const auto& row : tab.rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << row[i];
                std::cout << "\n";
            }
        return rep.pass() ? 0 : 1;
    }
    return finish(rep, common);
}

int cmd_orbits(const std::string& size, const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "orbits --size " + size;
    int k = size == "all" ? -1 : std::stoi(size);
    auto orbits = orbit_partition(k);
    Report::Table t{"orbits", {"representative", "members"}, {}};
    for (const auto& o : orbits) {
        std::string names;
        for (const auto& n : subset_names(o.representative)) names += n + " ";
        t.rows.push_back({names.empty() ? "(empty)" : names, std::to_string(o.members.size())});
    }
    rep.tables.push_back(t);
    rep.check("orbit count", true, std::to_string(orbits.size()) + " orbits");
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

int cmd_symmetries(const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "symmetries";
    SymmetryScan scan = search_symmetries();
    const auto& gens = bubble_generators();
    Report::Table t{"surviving bijections", {"kind", "images (AAA AAB BAA BAB ABA ABB BBA BBB)"}, {}};
    auto row = [&](const char* kind, const std::array<int, 8>& p) {
        std::string images;
        for (int i = 0; i < 8; ++i) images += std::string(gens[p[i]].first) + " ";
        t.rows.push_back({kind, images});
    };
    for (const auto& p : scan.morphisms) row("morphism", p);
    for (const auto& p : scan.antimorphisms) row("antimorphism", p);
    rep.tables.push_back(t);
    rep.check("exactly two morphisms", scan.morphisms.size() == 2);
    rep.check("exactly two antimorphisms", scan.antimorphisms.size() == 2);
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

int cmd_relations(const std::string& gen_list, int max_degree, const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "relations --gens " + gen_list + " --max-degree " + std::to_string(max_degree);
    std::vector<std::string> names;
    for (const auto& tok : split(gen_list, ',')) names.push_back(trim(tok));
    auto found = discover_relations(names, max_degree);
    Report::Table t{"new relation classes", {"degree", "new classes"}, {}};
    for (int d = 2; d <= max_degree; ++d)
        t.rows.push_back({std::to_string(d),
                          std::to_string(found.new_classes_by_degree[d - 2])});
    rep.tables.push_back(t);
    rep.check("relation discovery", true,
              std::to_string(found.adopted.size()) + " adopted generating pairs");
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

int cmd_render(const std::string& literal, const std::string& out_path, const Common& common) {
    Stopwatch sw;
    Report rep;
    rep.command = "render --bnc " + literal;
    Bnc c = parse_bnc(literal);
    std::ofstream out(out_path);
    if (!out) {
        rep.check("output file writable", false, out_path);
    } else {
        out << bnc_to_svg(c);
        rep.check("svg written", true, out_path);
    }
    rep.elapsed_ms = sw.ms();
    return finish(rep, common);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the operad of bicoloured noncrossing configurations"};
    app.require_subcommand(1);

    Common common;
    if (const char* env = std::getenv("NCO_JOBS")) common.jobs = std::atoi(env);
    app.add_flag("--json", common.json, "emit the report as JSON");
    app.add_option("--jobs", common.jobs, "worker threads for enumeration");

    std::string operad = "cncb", statistic, gen_list, presentation, target = "cncb";
    std::string size = "all", literal, out_path = "out.svg", format = "table";
    int max_arity = 6, order = 10, max_degree = 4, psi_degree = 4;
    bool oracle = false, coloured = false, slow = false;

    auto* enum_cmd = app.add_subcommand("enum", "dimension tables for the built-in operads");
    enum_cmd->add_option("--operad", operad, "cncb|bulle|fas|alpha2");
    enum_cmd->add_option("--max-arity", max_arity);
    enum_cmd->add_option("--stats", statistic, "diagonals|areas (cncb only)");
    enum_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

    auto* sub_cmd = app.add_subcommand("suboperad", "closure of a generator set");
    sub_cmd->add_option("--gens", gen_list, "comma-separated names or bubble literals")->required();
    sub_cmd->add_option("--max-arity", max_arity);
    sub_cmd->add_flag("--coloured", coloured, "report based/nonbased bubbles instead");

    auto* verify_cmd = app.add_subcommand("verify", "verify a presentation by good orientation");
    verify_cmd->add_option("--presentation", presentation, "built-in name or spec file")->required();
    verify_cmd->add_option("--max-arity", max_arity);
    verify_cmd->add_option("--psi-degree", psi_degree, "degree bound for the psi check");
    verify_cmd->add_flag("--slow", slow, "scan all orientations when none is registered");

    auto* series_cmd = app.add_subcommand("series", "Hilbert series coefficients and equations");
    series_cmd->add_option("--target", target, "cncb|fas|alpha2|<orbit name>");
    series_cmd->add_option("--order", order);
    series_cmd->add_option("--format", format, "table|csv|json");

    auto* orbits_cmd = app.add_subcommand("orbits", "orbits of generator subsets");
    orbits_cmd->add_option("--size", size, "all or a subset size");

    app.add_subcommand("symmetries", "scan the 8! bijections of the generators");

    auto* rel_cmd = app.add_subcommand("relations", "discover relation classes by degree");
    rel_cmd->add_option("--gens", gen_list)->required();
    rel_cmd->add_option("--max-degree", max_degree);

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a configuration");
    render_cmd->add_option("--bnc", literal, "BNC literal")->required();
    render_cmd->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enum_cmd->parsed()) return cmd_enum(operad, max_arity, statistic, oracle, common);
        if (sub_cmd->parsed()) return cmd_suboperad(gen_list, max_arity, coloured, common);
        if (verify_cmd->parsed())
            return cmd_verify(presentation, max_arity, psi_degree, slow, common);
        if (series_cmd->parsed()) return cmd_series(target, order, format, common);
        if (orbits_cmd->parsed()) return cmd_orbits(size, common);
        if (app.get_subcommand("symmetries")->parsed()) return cmd_symmetries(common);
        if (rel_cmd->parsed()) return cmd_relations(gen_list, max_degree, common);
        if (render_cmd->parsed()) return cmd_render(literal, out_path, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
