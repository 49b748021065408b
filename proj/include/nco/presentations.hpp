#ifndef NCO_PRESENTATIONS_HPP
#define NCO_PRESENTATIONS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nco/bubble.hpp"
#include "nco/geometry.hpp"
#include "nco/model.hpp"
#include "nco/registry_data.hpp"
#include "nco/rewrite.hpp"
#include "nco/series.hpp"

namespace nco {

// Smallest coloured suboperad of Bulle containing the generators, graded
// by arity up to maxN. Every element of arity n >= 3 factors as e o_i g
// with g a generator, so one right-multiplication per level is complete.
inline std::vector<std::set<Bubble>> closure_bulle(const std::vector<Bubble>& gens, int maxN) {
    std::vector<std::set<Bubble>> graded(maxN + 1);
    for (const Bubble& g : gens)
        if (g.arity() <= maxN) graded[g.arity()].insert(g);
    for (int n = 2; n <= maxN; ++n) {
        for (const Bubble& g : gens) {
            int m = n - g.arity() + 1;
            if (m < 2 || m > maxN) continue;
            for (const Bubble& e : graded[m])
                for (int i = 1; i <= e.arity(); ++i)
                    if (auto r = compose_bubble(e, i, g)) graded[n].insert(*r);
        }
    }
    return graded;
}

// Same closure inside CNCB (total composition).
inline std::vector<std::set<Bnc>> closure_cncb(const std::vector<Bnc>& gens, int maxN) {
    std::vector<std::set<Bnc>> graded(maxN + 1);
    if (maxN >= 1) graded[1].insert(unit_bnc());
    for (const Bnc& g : gens)
        if (g.n <= maxN) graded[g.n].insert(g);
    for (int n = 2; n <= maxN; ++n) {
        for (const Bnc& g : gens) {
            int m = n - g.n + 1;
            if (m < 2 || m > maxN) continue;
            for (const Bnc& e : graded[m])
                for (int i = 1; i <= e.n; ++i) graded[n].insert(compose(e, i, g));
        }
    }
    return graded;
}

inline SubBulleModel sub_bulle_model(const std::vector<Bubble>& gens, int maxN) {
    SubBulleModel m;
    m.graded = closure_bulle(gens, maxN);
    return m;
}

// ---------------------------------------------------------------------------
// Symmetries

struct Symmetry {
    std::string name;
    bool anti = false;
    std::function<Bubble(const Bubble&)> map;
};

inline std::vector<Symmetry> symmetry_group() {
    return {
        {"id", false, [](const Bubble& b) { return b; }},
        {"cpl", false, [](const Bubble& b) { return cpl(b); }},
        {"ret", true, [](const Bubble& b) { return ret(b); }},
        {"retcpl", true, [](const Bubble& b) { return ret(cpl(b)); }},
    };
}

// Exhaustive scan of the 8! bijections of the arity-2 generators, keeping
// the ones that are well-defined coloured operad (anti)morphisms on all
// arity-3 products: definedness must be preserved and coinciding products
// must keep coinciding.
struct SymmetryScan {
    std::vector<std::array<int, 8>> morphisms;
    std::vector<std::array<int, 8>> antimorphisms;
};

inline SymmetryScan search_symmetries() {
    const auto& gens = bubble_generators();
    std::array<int, 8> perm;
    for (int i = 0; i < 8; ++i) perm[i] = i;
    SymmetryScan out;
    auto test = [&](bool anti) {
        std::map<Bubble, Bubble> image;  // value at arity 3 -> mapped value
        for (int a = 0; a < 8; ++a) {
            const Bubble& x = gens[a].second;
            for (int b = 0; b < 8; ++b) {
                const Bubble& y = gens[b].second;
                for (int i = 1; i <= 2; ++i) {
                    auto z = compose_bubble(x, i, y);
                    if (!z) continue;
                    int j = anti ? 2 - i + 1 : i;
                    auto w = compose_bubble(gens[perm[a]].second, j, gens[perm[b]].second);
                    if (!w) return false;
                    auto [it, inserted] = image.emplace(*z, *w);
                    if (!inserted && !(it->second == *w)) return false;
                }
            }
        }
        return true;
    };
    do {
        if (test(false)) out.morphisms.push_back(perm);
        if (test(true)) out.antimorphisms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Orbits of generator subsets under {id, Cpl, Ret, RetCpl}

// Permutations of the 8 generator indices induced by the symmetry group.
inline std::vector<std::array<int, 8>> symmetry_generator_perms() {
    const auto& gens = bubble_generators();
    auto index_of = [&](const Bubble& b) {
        for (int i = 0; i < 8; ++i)
            if (gens[i].second == b) return i;
        throw std::logic_error("symmetry image is not a generator");
    };
    std::vector<std::array<int, 8>> perms;
    for (const Symmetry& s : symmetry_group()) {
        std::array<int, 8> p;
        for (int i = 0; i < 8; ++i) p[i] = index_of(s.map(gens[i].second));
        perms.push_back(p);
    }
    return perms;
}

// Partition subsets of the generators (all 256, or those of a fixed size)
// into orbits. Each orbit lists its member subsets as bitmasks; the
// representative is the subset whose sorted name list is lexicographically
// least.
struct Orbit {
    unsigned representative;
    std::vector<unsigned> members;
};

inline std::vector<std::string> subset_names(unsigned mask) {
    std::vector<std::string> names;
    const auto& gens = bubble_generators();
    for (int i = 0; i < 8; ++i)
        if (mask & (1u << i)) names.push_back(gens[i].first);
    std::sort(names.begin(), names.end());
    return names;
}

inline std::vector<Orbit> orbit_partition(int size = -1) {
    auto perms = symmetry_generator_perms();
    std::vector<bool> seen(256, false);
    std::vector<Orbit> orbits;
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (seen[mask]) continue;
        if (size >= 0 && __builtin_popcount(mask) != size) continue;
        std::set<unsigned> members;
        for (const auto& p : perms) {
            unsigned img = 0;
            for (int i = 0; i < 8; ++i)
                if (mask & (1u << i)) img |= 1u << p[i];
            members.insert(img);
        }
        Orbit o;
        o.members = {members.begin(), members.end()};
        o.representative = *std::min_element(
            o.members.begin(), o.members.end(), [](unsigned a, unsigned b) {
                return subset_names(a) < subset_names(b);
            });
        for (unsigned m : o.members) seen[m] = true;
        orbits.push_back(std::move(o));
    }
    return orbits;
}

// ---------------------------------------------------------------------------
// Relation discovery by evaluation kernels and congruence closure

struct RelationDiscovery {
    std::vector<int> new_classes_by_degree;  // index 0 <-> degree 2
    std::vector<Rule> adopted;               // generating pairs, lhs/rhs same degree
};

// "Nontrivial relation classes at degree d": evaluation fibers over CNCB
// that are not already a single class of the congruence generated by the
// adopted lower-degree pairs. The adopted set grows greedily: one pair per
// missing merge.
inline RelationDiscovery discover_relations(const std::vector<std::string>& gen_names,
                                            int max_degree) {
    ColouredCollection coll = ColouredCollection::uncoloured_binary(gen_names);
    std::vector<Bnc> elems;
    for (const auto& n : gen_names) elems.push_back(bnc_of_bubble(bubble_by_name(n)));
    CncbModel cncb;
    TreeEnumerator en(coll);

    RelationDiscovery out;
    for (int d = 2; d <= max_degree; ++d) {
        const std::vector<Tree>& trees = en.by_degree(d, 1);
        std::map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(trees.size()); ++i)
            index[tree_to_string(coll, trees[i])] = i;

        // evaluation kernel
        std::map<Bnc, std::vector<int>> kernel;
        for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
            auto v = evaluate_tree(cncb, elems, trees[i]);
            kernel[*v].push_back(i);
        }

        // congruence generated by adopted pairs: union-find over the trees
        std::vector<int> parent(trees.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[b] = a;
        };
        for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
            for (const Rule& r : out.adopted) {
                for (int dir = 0; dir < 2; ++dir) {
                    const Tree& from = dir ? r.rhs : r.lhs;
                    const Tree& to = dir ? r.lhs : r.rhs;
                    for (const Path& p : find_occurrences(from, trees[i])) {
                        Tree repl = apply_rule_at(trees[i], Rule{from, to}, p);
                        unite(i, index.at(tree_to_string(coll, repl)));
                    }
                }
            }
        }

        // count kernel fibers that split into >= 2 congruence classes, and
        // adopt one pair per missing merge
        int fresh = 0;
        for (const auto& [value, members] : kernel) {
            std::map<int, int> roots;  // root -> first member
            for (int i : members) roots.emplace(find(i), i);
            if (roots.size() >= 2) {
                ++fresh;
                auto it = roots.begin();
                int first = it->second;
                for (++it; it != roots.end(); ++it)
                    out.adopted.push_back({trees[first], trees[it->second]});
            }
        }
        out.new_classes_by_degree.push_back(fresh);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry

struct RationalForm {
    MultiSeries num;
    MultiSeries den;
};

struct OrbitRecord {
    int id;
    std::string name;
    std::vector<std::string> representative;
    std::vector<std::vector<std::string>> members;
    std::string algebra;
    std::vector<i64> dims;            // arities 1..8
    std::vector<i64> based;           // arities 2..8
    std::vector<i64> nonbased;        // arities 2..8
    std::vector<RationalForm> series1;  // summed fractions, per colour
    std::vector<RationalForm> series2;
    std::string equation;  // key into the equation registry
    std::string character;
    std::string presentation;  // key into the presentation registry
};

struct PresentationSpec {
    std::string name;
    std::string model;  // "bulle" | "cncb-closure"
    bool psi = false;
    std::vector<std::string> gen_names;
    std::vector<Bubble> gens;
    ColouredCollection coll{1};
    std::vector<std::vector<Tree>> relations;
    RewriteSystem system{ColouredCollection{1}};
};

namespace detail {

inline MultiSeries poly_from_json(const nlohmann::json& j, int order) {
    MultiSeries p(2, order);
    for (const auto& term : j) p.add_term({term[1].get<int>(), term[2].get<int>()},
                                          term[0].get<i64>());
    return p;
}

inline ColouredCollection collection_for(const std::string& model,
                                         const std::vector<std::string>& names,
                                         const std::vector<Bubble>& gens) {
    if (model == "bulle") {
        ColouredCollection coll(2);
        for (std::size_t i = 0; i < names.size(); ++i) {
            Shape s;
            s.out = gens[i].out;
            for (int j = 1; j <= gens[i].arity(); ++j) s.ins.push_back(gens[i].in(j));
            coll.add(names[i], s);
        }
        return coll;
    }
    if (model == "cncb-closure") return ColouredCollection::uncoloured_binary(names);
    throw std::invalid_argument("unknown presentation model: " + model);
}

}  // namespace detail

inline PresentationSpec load_presentation(const std::string& name, const nlohmann::json& j) {
    PresentationSpec spec;
    spec.name = name;
    spec.model = j.at("model").get<std::string>();
    spec.psi = j.value("psi", false);
    for (const auto& [gname, lit] : j.at("generators").items()) {
        spec.gen_names.push_back(gname);
        spec.gens.push_back(parse_bubble(lit.get<std::string>()));
    }
    // keep generators in a stable order (as listed in the file)
    spec.coll = detail::collection_for(spec.model, spec.gen_names, spec.gens);
    for (const auto& fam : j.at("relations")) {
        std::vector<Tree> family;
        for (const auto& lit : fam) family.push_back(parse_tree(spec.coll, lit.get<std::string>()));
        spec.relations.push_back(std::move(family));
    }
    spec.system = RewriteSystem{spec.coll};
    spec.system.psi_registered = spec.psi;
    for (const auto& pair : j.at("orientation")) {
        std::string s = pair.get<std::string>();
        auto arrow = s.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("orientation entry needs 'src -> tgt': " + s);
        Tree src = parse_tree(spec.coll, trim(s.substr(0, arrow)));
        Tree tgt = parse_tree(spec.coll, trim(s.substr(arrow + 2)));
        spec.system.add_rule(src, tgt);
    }
    return spec;
}

class Registry {
public:
    Registry() {
        presentations_ = nlohmann::json::parse(kBuiltinPresentationsJson);
        equations_ = nlohmann::json::parse(kEquationsJson);
        orbits_ = nlohmann::json::parse(kOrbitsJson);
    }

    std::vector<std::string> presentation_names() const {
        std::vector<std::string> names;
        for (const auto& [k, v] : presentations_.items()) names.push_back(k);
        return names;
    }

    PresentationSpec presentation(const std::string& name) const {
        if (!presentations_.contains(name))
            throw std::invalid_argument("unknown built-in presentation: " + name);
        return load_presentation(name, presentations_.at(name));
    }

    std::vector<EquationTerm> equation(const std::string& name) const {
        if (!equations_.contains(name))
            throw std::invalid_argument("unknown equation: " + name);
        std::vector<EquationTerm> terms;
        for (const auto& t : equations_.at(name))
            terms.push_back({t[0].get<i64>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>(),
                             t[4].get<int>()});
        return terms;
    }

    std::vector<std::string> equation_names() const {
        std::vector<std::string> names;
        for (const auto& [k, v] : equations_.items()) names.push_back(k);
        return names;
    }

    std::vector<OrbitRecord> orbit_records(int series_order = 8) const {
        std::vector<OrbitRecord> out;
        for (const auto& j : orbits_) {
            OrbitRecord r;
            r.id = j.at("id").get<int>();
            r.name = j.at("name").get<std::string>();
            for (const auto& n : j.at("representative")) r.representative.push_back(n);
            for (const auto& mem : j.at("members")) {
                std::vector<std::string> pair;
                for (const auto& n : mem) pair.push_back(n);
                r.members.push_back(std::move(pair));
            }
            if (!j.at("algebra").is_null()) r.algebra = j.at("algebra").get<std::string>();
            for (const auto& v : j.at("dims")) r.dims.push_back(v.get<i64>());
            for (const auto& v : j.at("based")) r.based.push_back(v.get<i64>());
            for (const auto& v : j.at("nonbased")) r.nonbased.push_back(v.get<i64>());
            for (const auto& f : j.at("series1"))
                r.series1.push_back({detail::poly_from_json(f.at("num"), series_order),
                                     detail::poly_from_json(f.at("den"), series_order)});
            for (const auto& f : j.at("series2"))
                r.series2.push_back({detail::poly_from_json(f.at("num"), series_order),
                                     detail::poly_from_json(f.at("den"), series_order)});
            r.equation = j.at("equation").get<std::string>();
            r.character = j.at("character").get<std::string>();
            r.presentation = j.at("presentation").get<std::string>();
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    nlohmann::json presentations_;
    nlohmann::json equations_;
    nlohmann::json orbits_;
};

inline const Registry& registry() {
    static Registry r;
    return r;
}

// Border-characterization predicates, keyed by the records' character field.
inline std::function<bool(const Bubble&)> character_predicate(const std::string& key) {
    auto count = [](const Bubble& b, char ch) {
        return static_cast<int>(std::count(b.border.begin(), b.border.end(), ch));
    };
    if (key == "blue-prefix")
        return [](const Bubble& b) {
            if (b.out != 1) return false;
            for (int i = 0; i + 1 < b.arity(); ++i)
                if (b.border[i] != '2') return false;
            return true;
        };
    if (key == "consec-mod3")
        return [count](const Bubble& b) {
            bool consec = false;
            for (int i = 0; i + 1 < b.arity(); ++i)
                if (b.border[i] == b.border[i + 1]) consec = true;
            if (!consec) return false;
            int c = count(b, b.out == 1 ? '2' : '1');
            return ((c - (1 - b.arity())) % 3 + 3) % 3 == 0;
        };
    if (key == "first-blue-parity")
        return [count](const Bubble& b) {
            if (b.border[0] != '2') return false;
            int ones = count(b, '1');
            int want = b.out == 1 ? b.arity() : b.arity() + 1;
            return (ones - want) % 2 == 0;
        };
    if (key == "first-blue-last-unc")
        return [](const Bubble& b) { return b.border.front() == '2' && b.border.back() == '1'; };
    if (key == "penult-last-swap")
        return [](const Bubble& b) {
            int n = b.arity();
            if (b.out == 1) return b.border[n - 2] == '2' && b.border[n - 1] == '1';
            return b.border[n - 2] == '1' && b.border[n - 1] == '2';
        };
    if (key == "even-blue-runs")
        return [](const Bubble& b) {
            if (b.out != 1) return false;
            int run = 0;
            for (char ch : b.border) {
                if (ch == '2') ++run;
                else {
                    if (run % 2) return false;
                    run = 0;
                }
            }
            return run % 2 == 0;
        };
    if (key == "one-unc")
        return [count](const Bubble& b) { return b.out == 1 && count(b, '1') == 1; };
    if (key == "last-unc")
        return [](const Bubble& b) { return b.out == 1 && b.border.back() == '1'; };
    if (key == "all-blue")
        return [count](const Bubble& b) { return count(b, '1') == 0; };
    if (key == "first-unc-rest-blue")
        return [count](const Bubble& b) {
            if (b.out == 1) return b.border[0] == '1' && count(b, '1') == 1;
            return count(b, '1') == 0;
        };
    if (key == "const-border")
        return [count](const Bubble& b) {
            return b.out == 1 ? count(b, '2') == 0 : count(b, '1') == 0;
        };
    throw std::invalid_argument("unknown characterization key: " + key);
}

struct CharacterizationReport {
    bool sets_match = true;
    bool counts_match = true;
    bool series_match = true;
    std::string witness;

    bool pass() const { return sets_match && counts_match && series_match; }
};

// Closure of the record's generators == predicate-filtered bubbles, per
// colour and arity; per-colour counts match both the table rows and the
// registered closed-form coefficients.
inline CharacterizationReport verify_characterization(const OrbitRecord& rec, int N) {
    CharacterizationReport rep;
    std::vector<Bubble> gens;
    for (const auto& n : rec.representative) gens.push_back(bubble_by_name(n));
    auto graded = closure_bulle(gens, N);
    auto pred = character_predicate(rec.character);

    std::vector<MultiSeries> expect(3, MultiSeries(2, N));
    auto sum_fractions = [&](const std::vector<RationalForm>& fr) {
        MultiSeries s(2, N);
        for (const auto& f : fr) s += expand_rational(f.num, f.den, N);
        return s;
    };
    expect[1] = sum_fractions(rec.series1);
    expect[2] = sum_fractions(rec.series2);

    for (int n = 2; n <= N; ++n) {
        std::set<Bubble> predicted;
        for (const Bubble& b : all_bubbles(n))
            if (pred(b)) predicted.insert(b);
        if (predicted != graded[n]) {
            rep.sets_match = false;
            rep.witness = "characterization differs at arity " + std::to_string(n);
        }
        i64 c1 = 0, c2 = 0;
        MultiSeries got1(2, N), got2(2, N);
        for (const Bubble& b : graded[n]) {
            MultiSeries::Mono m{0, 0};
            for (char ch : b.border) m[ch - '1']++;
            if (b.out == 1) {
                ++c1;
                got1.add_term(m, 1);
            } else {
                ++c2;
                got2.add_term(m, 1);
            }
        }
        if (n - 2 < static_cast<int>(rec.based.size())) {
            if (c1 != rec.based[n - 2] || c2 != rec.nonbased[n - 2]) {
                rep.counts_match = false;
                rep.witness = "table counts differ at arity " + std::to_string(n);
            }
        }
        for (const auto& [m, v] : got1.coeffs())
            if (expect[1].at(m) != v) rep.series_match = false;
        for (const auto& [m, v] : got2.coeffs())
            if (expect[2].at(m) != v) rep.series_match = false;
        // and nothing extra predicted by the closed form at this arity
        for (const auto& [m, v] : expect[1].coeffs())
            if (m[0] + m[1] == n && got1.at(m) != v) rep.series_match = false;
        for (const auto& [m, v] : expect[2].coeffs())
            if (m[0] + m[1] == n && got2.at(m) != v) rep.series_match = false;
    }
    return rep;
}

}  // namespace nco

#endif
