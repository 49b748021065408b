#ifndef NCO_REWRITE_HPP
#define NCO_REWRITE_HPP

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nco/tree.hpp"
#include "nco/util.hpp"

namespace nco {

// An oriented rewrite rule on syntax trees: leaves act as position-matched
// variables, so lhs and rhs must have the same arity.
struct Rule {
    Tree lhs;
    Tree rhs;
};

struct RewriteSystem {
    ColouredCollection coll;
    std::vector<Rule> rules;
    bool psi_registered = false;  // the lexicographic measure applies

    void add_rule(const Tree& lhs, const Tree& rhs) {
        if (tree_arity(lhs) != tree_arity(rhs))
            throw std::invalid_argument("rewrite rule sides must have equal arity");
        rules.push_back({lhs, rhs});
    }
};

using Path = std::vector<int>;  // child indices from the root

namespace detail {

// Rooted embedding of the pattern's internal skeleton at `t`; leaves of
// the pattern superimpose (and bind) arbitrary subtrees.
inline bool match_at(const Tree& pattern, const Tree& t, std::vector<Tree>* binds) {
    if (!pattern) {
        if (binds) binds->push_back(t);
        return true;
    }
    if (!t || t->label != pattern->label) return false;
    for (std::size_t i = 0; i < pattern->kids.size(); ++i)
        if (!match_at(pattern->kids[i], t->kids[i], binds)) return false;
    return true;
}

inline Tree instantiate(const Tree& rhs, const std::vector<Tree>& binds, std::size_t& next) {
    if (!rhs) return binds.at(next++);
    std::vector<Tree> kids;
    kids.reserve(rhs->kids.size());
    for (const auto& k : rhs->kids) kids.push_back(instantiate(k, binds, next));
    return make_node(rhs->label, std::move(kids));
}

inline Tree replace_at(const Tree& t, const Path& path, std::size_t depth, const Tree& sub) {
    if (depth == path.size()) return sub;
    std::vector<Tree> kids = t->kids;
    kids.at(path[depth]) = replace_at(kids.at(path[depth]), path, depth + 1, sub);
    return make_node(t->label, std::move(kids));
}

}  // namespace detail

inline std::vector<Path> find_occurrences(const Tree& pattern, const Tree& t) {
    std::vector<Path> out;
    Path path;
    std::function<void(const Tree&)> walk = [&](const Tree& node) {
        if (!node) return;
        if (detail::match_at(pattern, node, nullptr)) out.push_back(path);
        for (std::size_t i = 0; i < node->kids.size(); ++i) {
            path.push_back(static_cast<int>(i));
            walk(node->kids[i]);
            path.pop_back();
        }
    };
    walk(t);
    return out;
}

inline Tree apply_rule_at(const Tree& t, const Rule& rule, const Path& path) {
    const Tree* node = &t;
    for (int step : path) node = &(*node)->kids.at(step);
    std::vector<Tree> binds;
    if (!detail::match_at(rule.lhs, *node, &binds))
        throw std::invalid_argument("rule does not match at given position");
    std::size_t next = 0;
    Tree sub = detail::instantiate(rule.rhs, binds, next);
    return detail::replace_at(t, path, 0, sub);
}

// All one-step successors, deduplicated, in (position, rule) scan order.
inline std::vector<Tree> rewrite_step(const RewriteSystem& sys, const Tree& t) {
    std::vector<Tree> out;
    std::set<std::string> seen;
    for (const Rule& r : sys.rules) {
        for (const Path& p : find_occurrences(r.lhs, t)) {
            Tree s = apply_rule_at(t, r, p);
            std::string key = tree_to_string(sys.coll, s);
            if (seen.insert(key).second) out.push_back(s);
        }
    }
    return out;
}

inline bool is_normal_form(const RewriteSystem& sys, const Tree& t) {
    if (!t) return true;
    for (const Rule& r : sys.rules)
        if (detail::match_at(r.lhs, t, nullptr)) return false;
    for (const auto& k : t->kids)
        if (!is_normal_form(sys, k)) return false;
    return true;
}

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

// Leftmost-outermost reduction to a normal form. Throws NonTermination if
// the fuel runs out or a tree repeats along the way.
inline Tree rewrite_to_nf(const RewriteSystem& sys, Tree t, int fuel) {
    if (fuel <= 0) throw std::invalid_argument("fuel must be positive");
    std::set<std::string> seen;
    seen.insert(tree_to_string(sys.coll, t));
    for (int step = 0; step < fuel; ++step) {
        // first redex in preorder, rules tried in registry order
        std::optional<std::pair<Path, const Rule*>> redex;
        Path path;
        std::function<bool(const Tree&)> walk = [&](const Tree& node) -> bool {
            if (!node) return false;
            for (const Rule& r : sys.rules) {
                if (detail::match_at(r.lhs, node, nullptr)) {
                    redex = {path, &r};
                    return true;
                }
            }
            for (std::size_t i = 0; i < node->kids.size(); ++i) {
                path.push_back(static_cast<int>(i));
                if (walk(node->kids[i])) return true;
                path.pop_back();
            }
            return false;
        };
        walk(t);
        if (!redex) return t;
        t = apply_rule_at(t, *redex->second, redex->first);
        if (!seen.insert(tree_to_string(sys.coll, t)).second)
            throw NonTermination("rewriting revisited " + tree_to_string(sys.coll, t));
    }
    throw NonTermination("fuel exhausted");
}

// The termination measure for the bubble orientation: a(T) sums, over all
// internal nodes, the internal-node count of the right-child subtree; b(T)
// counts the nodes whose left child is internal with a different first
// input colour. Rewriting strictly decreases (a, b) lexicographically.
inline std::pair<i64, i64> psi(const ColouredCollection& coll, const Tree& t) {
    if (!t) return {0, 0};
    i64 a = 0, b = 0;
    std::function<int(const Tree&)> walk = [&](const Tree& node) -> int {
        if (!node) return 0;
        if (node->kids.size() != 2)
            throw std::invalid_argument("psi needs binary labels");
        int dl = walk(node->kids[0]);
        int dr = walk(node->kids[1]);
        a += dr;
        const Tree& left = node->kids[0];
        if (left && coll.shape(left->label).ins[0] != coll.shape(node->label).ins[0]) ++b;
        return dl + dr + 1;
    };
    walk(t);
    return {a, b};
}

// Normal forms are counted by enumerating trees and testing reducibility,
// so the strategy cannot bias the count.
inline i64 count_normal_forms(const RewriteSystem& sys, TreeEnumerator& en, int arity,
                              int out_colour) {
    i64 count = 0;
    for (const Tree& t : en.by_arity(arity, out_colour))
        if (is_normal_form(sys, t)) ++count;
    return count;
}

namespace detail {
inline void encode_compact(const Tree& t, std::string& out) {
    if (!t) {
        out.push_back('\0');
        return;
    }
    out.push_back(static_cast<char>(1 + t->label));
    for (const auto& k : t->kids) encode_compact(k, out);
}
inline std::string encode_compact(const Tree& t) {
    std::string s;
    encode_compact(t, s);
    return s;
}
}  // namespace detail

// Exhaustive acyclicity of the rewriting graph on all colour-compatible
// trees of one arity. Returns a tree on a cycle if one exists.
inline std::optional<Tree> find_rewrite_cycle(const RewriteSystem& sys, TreeEnumerator& en,
                                              int arity) {
    std::unordered_map<std::string, unsigned char> status;  // 1 open, 2 done
    struct Frame {
        Tree t;
        std::string key;
        std::vector<Tree> succ;
        std::size_t next = 0;
    };
    for (int c = 1; c <= sys.coll.k(); ++c) {
        for (const Tree& start : en.by_arity(arity, c)) {
            std::string skey = detail::encode_compact(start);
            if (status.count(skey)) continue;
            std::vector<Frame> stack;
            stack.push_back({start, skey, rewrite_step(sys, start)});
            status[skey] = 1;
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.next >= f.succ.size()) {
                    status[f.key] = 2;
                    stack.pop_back();
                    continue;
                }
                Tree nxt = f.succ[f.next++];
                std::string nkey = detail::encode_compact(nxt);
                auto it = status.find(nkey);
                if (it == status.end()) {
                    status[nkey] = 1;
                    stack.push_back({nxt, nkey, rewrite_step(sys, nxt)});
                } else if (it->second == 1) {
                    return nxt;  // back edge: cycle
                }
            }
        }
    }
    return std::nullopt;
}

// Check that psi strictly decreases under every rule application on every
// colour-compatible tree of degree <= max_degree. Returns a witness tree
// on failure.
inline std::optional<Tree> check_psi_decreases(const RewriteSystem& sys, TreeEnumerator& en,
                                               int max_degree) {
    for (int d = 2; d <= max_degree; ++d) {
        for (int c = 1; c <= sys.coll.k(); ++c) {
            for (const Tree& t : en.by_degree(d, c)) {
                auto before = psi(sys.coll, t);
                for (const Rule& r : sys.rules) {
                    for (const Path& p : find_occurrences(r.lhs, t)) {
                        Tree s = apply_rule_at(t, r, p);
                        if (!(psi(sys.coll, s) < before)) return t;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

struct OrientationReport {
    bool sound = true;
    std::vector<std::string> unsound;  // rule renderings whose sides differ
    bool terminating = true;
    std::string cycle_witness;
    bool psi_checked = false;
    bool psi_ok = true;
    std::string psi_witness;
    bool counts_match = true;
    // (arity, colour) -> {normal forms, expected dimension}
    std::map<std::pair<int, int>, std::pair<i64, i64>> counts;

    bool pass() const { return sound && terminating && counts_match && (!psi_checked || psi_ok); }
};

// The presentation-proof schema: (a) each oriented rule is sound in the
// reference model, (b) rewriting terminates on all trees up to arity N
// (exhaustive graph acyclicity, plus the psi measure when registered),
// (c) per arity and output colour, the normal forms are equinumerous with
// the model. All three together verify the presentation at desk scale.
//
// `evaluate` maps a tree to the canonical encoding of its value in the
// reference model (empty string when a composition is undefined).
// `expected` gives the model dimension per (arity, colour).
inline OrientationReport verify_good_orientation(
    const RewriteSystem& sys, const std::function<std::string(const Tree&)>& evaluate,
    const std::function<i64(int, int)>& expected, int N, int psi_degree = 0) {
    OrientationReport rep;
    TreeEnumerator en(sys.coll);

    for (const Rule& r : sys.rules) {
        std::string lv = evaluate(r.lhs), rv = evaluate(r.rhs);
        if (lv.empty() || lv != rv) {
            rep.sound = false;
            rep.unsound.push_back(tree_to_string(sys.coll, r.lhs) + " -> " +
                                  tree_to_string(sys.coll, r.rhs));
        }
    }

    if (psi_degree > 0) {
        rep.psi_checked = true;
        if (auto w = check_psi_decreases(sys, en, psi_degree)) {
            rep.psi_ok = false;
            rep.psi_witness = tree_to_string(sys.coll, *w);
        }
    }

    for (int n = 2; n <= N; ++n) {
        if (auto w = find_rewrite_cycle(sys, en, n)) {
            rep.terminating = false;
            rep.cycle_witness = tree_to_string(sys.coll, *w);
            break;
        }
    }

    for (int n = 2; n <= N; ++n) {
        for (int c = 1; c <= sys.coll.k(); ++c) {
            i64 got = count_normal_forms(sys, en, n, c);
            i64 want = expected(n, c);
            rep.counts[{n, c}] = {got, want};
            if (got != want) rep.counts_match = false;
        }
    }
    return rep;
}

// Evaluate a tree over labelled model elements; nullopt when some
// composition is undefined. Children are folded right to left.
template <class M>
std::optional<typename M::Element> evaluate_tree(
    const M& m, const std::vector<typename M::Element>& label_elems, const Tree& t) {
    using E = typename M::Element;
    if (!t) return std::nullopt;
    E acc = label_elems.at(t->label);
    for (int i = static_cast<int>(t->kids.size()); i >= 1; --i) {
        const Tree& k = t->kids[i - 1];
        if (!k) continue;
        auto sub = evaluate_tree(m, label_elems, k);
        if (!sub) return std::nullopt;
        auto next = m.compose(acc, i, *sub);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

}  // namespace nco

#endif
