#ifndef NCO_WORKBENCH_HPP
#define NCO_WORKBENCH_HPP

#include <fstream>
#include <sstream>

#include "nco/dual.hpp"
#include "nco/envelope.hpp"
#include "nco/presentations.hpp"
#include "nco/rewrite.hpp"

namespace nco {

// Verify a presentation spec (built-in or user file): soundness against
// its reference model, bounded termination, and normal-form counts equal
// to the model's dimensions. psi_degree > 0 additionally checks the
// registered measure on all trees up to that degree.
inline OrientationReport verify_presentation(const PresentationSpec& spec, int N,
                                             int psi_degree = 0) {
    if (spec.model == "bulle") {
        BulleModel bulle;
        auto graded = closure_bulle(spec.gens, N);
        auto evaluate = [&](const Tree& t) -> std::string {
            auto v = evaluate_tree(bulle, spec.gens, t);
            return v ? bubble_to_string(*v) : std::string();
        };
        auto expected = [&](int n, int c) -> i64 {
            i64 k = 0;
            for (const Bubble& b : graded[n])
                if (b.out == c) ++k;
            return k;
        };
        return verify_good_orientation(spec.system, evaluate, expected, N,
                                       spec.psi ? psi_degree : 0);
    }
    if (spec.model == "cncb-closure") {
        CncbModel cncb;
        std::vector<Bnc> elems;
        for (const Bubble& g : spec.gens) elems.push_back(bnc_of_bubble(g));
        auto graded = closure_cncb(elems, N);
        auto evaluate = [&](const Tree& t) -> std::string {
            auto v = evaluate_tree(cncb, elems, t);
            return v ? bnc_to_string(*v) : std::string();
        };
        auto expected = [&](int n, int) -> i64 {
            return static_cast<i64>(graded[n].size());
        };
        return verify_good_orientation(spec.system, evaluate, expected, N, 0);
    }
    throw std::invalid_argument("unknown presentation model: " + spec.model);
}

inline PresentationSpec presentation_by_name_or_file(const std::string& arg) {
    const auto names = registry().presentation_names();
    if (std::find(names.begin(), names.end(), arg) != names.end())
        return registry().presentation(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("no built-in presentation or readable file: " + arg);
    nlohmann::json j = nlohmann::json::parse(in);
    return load_presentation(arg, j);
}

// Soundness of every registered relation family: all members of a family
// evaluate to the same model element.
inline bool check_relation_families(const PresentationSpec& spec, std::string* witness = nullptr) {
    auto eval_key = [&](const Tree& t) -> std::string {
        if (spec.model == "bulle") {
            BulleModel m;
            auto v = evaluate_tree(m, spec.gens, t);
            return v ? bubble_to_string(*v) : std::string();
        }
        CncbModel m;
        std::vector<Bnc> elems;
        for (const Bubble& g : spec.gens) elems.push_back(bnc_of_bubble(g));
        auto v = evaluate_tree(m, elems, t);
        return v ? bnc_to_string(*v) : std::string();
    };
    for (const auto& family : spec.relations) {
        std::string first = eval_key(family.at(0));
        for (const Tree& t : family) {
            std::string v = eval_key(t);
            if (v.empty() || v != first) {
                if (witness) *witness = tree_to_string(spec.coll, t);
                return false;
            }
        }
    }
    return true;
}

// CNCB dimensions by closure of the eight arity-2 generators.
inline std::vector<i64> cncb_dims_by_closure(int N) {
    std::vector<Bnc> gens;
    for (const auto& [name, b] : bubble_generators()) gens.push_back(bnc_of_bubble(b));
    auto graded = closure_cncb(gens, N);
    std::vector<i64> dims(N + 1, 0);
    for (int n = 1; n <= N; ++n) dims[n] = static_cast<i64>(graded[n].size());
    return dims;
}

inline std::vector<i64> cncb_dims_by_series(int N) {
    BulleModel m;
    auto d = dims_via_series(m, N);
    return d.total.c;
}

// Refined enumeration: sum over BNCs of t^n y1^s1 y2^s2 (diagonal
// statistics) or t^n y^areas. Sizes run 1..N through the brute-force
// oracle; the unit contributes the bare t.
inline MultiSeries refined_cncb(int N, bool areas, int jobs = 1) {
    MultiSeries F(3, N, 0);  // vars (t, y1, y2), truncated by t-degree
    F.add_term({1, 0, 0}, 1);
    for (int n = 2; n <= N; ++n) {
        for (const Bnc& c : enumerate_direct(n, jobs)) {
            BncStats s = stats(c);
            if (areas)
                F.add_term({n, s.areas, 0}, 1);
            else
                F.add_term({n, s.y1, s.y2}, 1);
        }
    }
    return F;
}

inline MultiSeries specialize_y(const MultiSeries& F) {
    MultiSeries r(3, F.order(), 0);
    for (const auto& [m, v] : F.coeffs()) r.add_term({m[0], m[1] + m[2], 0}, v);
    return r;
}

inline TruncSeries forget_y(const MultiSeries& F) {
    TruncSeries r(F.order());
    for (const auto& [m, v] : F.coeffs()) r.c[m[0]] = checked_add(r.c[m[0]], v);
    return r;
}

}  // namespace nco

#endif
