#ifndef NCO_TREE_HPP
#define NCO_TREE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nco/colour.hpp"

namespace nco {

// Planar rooted syntax tree over a coloured collection. A null Tree is a
// leaf; leaves take the colour demanded by their slot, so grafting a unit
// is a no-op and degree-0 trees need no label bookkeeping.
struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
    int label;
    std::vector<Tree> kids;
};

inline Tree make_node(int label, std::vector<Tree> kids) {
    auto n = std::make_shared<TreeNode>();
    n->label = label;
    n->kids = std::move(kids);
    return n;
}

inline Tree corolla(const ColouredCollection& coll, int label) {
    return make_node(label, std::vector<Tree>(coll.shape(label).arity()));
}

inline Tree corolla(const ColouredCollection& coll, const std::string& name) {
    return corolla(coll, coll.require(name));
}

inline int tree_arity(const Tree& t) {
    if (!t) return 1;
    int a = 0;
    for (const auto& k : t->kids) a += tree_arity(k);
    return a;
}

inline int tree_degree(const Tree& t) {
    if (!t) return 0;
    int d = 1;
    for (const auto& k : t->kids) d += tree_degree(k);
    return d;
}

inline int out_colour(const ColouredCollection& coll, const Tree& t, int leaf_colour = 0) {
    return t ? coll.shape(t->label).out : leaf_colour;
}

// Colour of the slot holding the i-th leaf (1-based). For the bare leaf
// tree the slot is unconstrained and 0 is returned.
inline int leaf_slot_colour(const ColouredCollection& coll, const Tree& t, int i) {
    if (!t) return 0;
    if (i < 1 || i > tree_arity(t)) throw std::out_of_range("leaf index out of range");
    const TreeNode* node = t.get();
    for (;;) {
        int pos = 0;
        for (const auto& k : node->kids) {
            int a = tree_arity(k);
            if (i <= pos + a) {
                if (!k) return coll.shape(node->label).ins[&k - node->kids.data()];
                i -= pos;
                node = k.get();
                break;
            }
            pos += a;
        }
    }
}

inline bool colour_compatible(const ColouredCollection& coll, const Tree& t) {
    if (!t) return true;
    const Shape& s = coll.shape(t->label);
    for (int i = 0; i < s.arity(); ++i) {
        const Tree& k = t->kids[i];
        if (k && coll.shape(k->label).out != s.ins[i]) return false;
        if (!colour_compatible(coll, k)) return false;
    }
    return true;
}

namespace detail {
inline Tree graft_rec(const Tree& s, int& i, const Tree& t) {
    if (!s) {
        // i is 1 here by construction: this leaf is the grafting point.
        return t;
    }
    std::vector<Tree> kids = s->kids;
    for (auto& k : kids) {
        int a = tree_arity(k);
        if (i <= a) {
            k = graft_rec(k, i, t);
            return make_node(s->label, std::move(kids));
        }
        i -= a;
    }
    throw std::out_of_range("leaf index out of range");
}
}  // namespace detail

// Graft the root of t on the i-th leaf of s (1-based). Grafting a unit
// leaf is the identity; when check_colours is set the slot colour of the
// target leaf must equal the output colour of t.
inline Tree graft(const ColouredCollection& coll, const Tree& s, int i, const Tree& t,
                  bool check_colours = true) {
    if (i < 1 || i > tree_arity(s)) throw std::out_of_range("leaf index out of range");
    if (!t) return s;
    if (!s) return t;
    if (check_colours) {
        int slot = leaf_slot_colour(coll, s, i);
        int out = coll.shape(t->label).out;
        if (slot != out)
            throw std::invalid_argument("colour mismatch in graft: slot " +
                                        std::to_string(slot) + " vs output " +
                                        std::to_string(out));
    }
    int pos = i;
    return detail::graft_rec(s, pos, t);
}

// Preorder encoding: label names with '*' for leaves. Used for canonical
// ordering, hashing and the external tree literal format.
inline void encode_tree(const ColouredCollection& coll, const Tree& t, std::string& out) {
    if (!t) {
        out.push_back('*');
        return;
    }
    out += coll.name(t->label);
    out.push_back('[');
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out.push_back(',');
        encode_tree(coll, t->kids[i], out);
    }
    out.push_back(']');
}

inline std::string tree_to_string(const ColouredCollection& coll, const Tree& t) {
    std::string s;
    encode_tree(coll, t, s);
    return s;
}

inline bool tree_equal(const Tree& a, const Tree& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->label != b->label || a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!tree_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

// (degree, preorder encoding) order; deterministic across runs.
inline bool canonical_less(const ColouredCollection& coll, const Tree& a, const Tree& b) {
    int da = tree_degree(a), db = tree_degree(b);
    if (da != db) return da < db;
    return tree_to_string(coll, a) < tree_to_string(coll, b);
}

namespace detail {
inline Tree parse_tree_rec(const ColouredCollection& coll, const std::string& s, std::size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && s[p] == '*') {
        ++p;
        return nullptr;
    }
    std::size_t start = p;
    while (p < s.size() && s[p] != '[' && s[p] != ',' && s[p] != ']' &&
           !std::isspace(static_cast<unsigned char>(s[p])))
        ++p;
    std::string name = s.substr(start, p - start);
    int label = coll.require(name);
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p >= s.size() || s[p] != '[')
        throw std::invalid_argument("expected '[' after label " + name);
    ++p;
    std::vector<Tree> kids;
    for (;;) {
        kids.push_back(parse_tree_rec(coll, s, p));
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
        if (p < s.size() && s[p] == ',') {
            ++p;
            continue;
        }
        if (p < s.size() && s[p] == ']') {
            ++p;
            break;
        }
        throw std::invalid_argument("expected ',' or ']' in tree literal");
    }
    if (static_cast<int>(kids.size()) != coll.shape(label).arity())
        throw std::invalid_argument("wrong child count for label " + name);
    return make_node(label, std::move(kids));
}
}  // namespace detail

inline Tree parse_tree(const ColouredCollection& coll, const std::string& s) {
    std::size_t p = 0;
    Tree t = detail::parse_tree_rec(coll, s, p);
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p != s.size()) throw std::invalid_argument("trailing characters in tree literal");
    return t;
}

// Enumeration of colour-compatible trees over a label subset, graded by
// degree or by arity, memoized per (grade, out colour). Lists come back
// in canonical order.
class TreeEnumerator {
public:
    TreeEnumerator(const ColouredCollection& coll, std::vector<int> labels)
        : coll_(coll), labels_(std::move(labels)) {}

    TreeEnumerator(const ColouredCollection& coll) : coll_(coll) {
        for (int i = 0; i < coll.size(); ++i) labels_.push_back(i);
    }

    // All trees of exact degree d whose output colour is c. Degree 0 is the
    // single leaf (represented by nullptr) for every colour.
    const std::vector<Tree>& by_degree(int d, int c) {
        auto key = std::make_pair(d, c);
        auto it = memo_deg_.find(key);
        if (it != memo_deg_.end()) return it->second;
        std::vector<Tree> out;
        if (d == 0) {
            out.push_back(nullptr);
        } else {
            for (int label : labels_) {
                const Shape& s = coll_.shape(label);
                if (s.out != c) continue;
                std::vector<std::vector<Tree>> parts;
                gen_children_by_degree(s, 0, d - 1, {}, out, label);
            }
            std::sort(out.begin(), out.end(), [&](const Tree& a, const Tree& b) {
                return canonical_less(coll_, a, b);
            });
        }
        return memo_deg_.emplace(key, std::move(out)).first->second;
    }

    // All trees of exact arity a and output colour c (degree >= 1 unless a == 1,
    // where the single leaf is included).
    const std::vector<Tree>& by_arity(int a, int c) {
        auto key = std::make_pair(a, c);
        auto it = memo_ar_.find(key);
        if (it != memo_ar_.end()) return it->second;
        std::vector<Tree> out;
        if (a == 1) {
            out.push_back(nullptr);
        } else {
            for (int label : labels_) {
                const Shape& s = coll_.shape(label);
                if (s.out != c || s.arity() > a) continue;
                gen_children_by_arity(s, 0, a, {}, out, label);
            }
            std::sort(out.begin(), out.end(), [&](const Tree& x, const Tree& y) {
                return canonical_less(coll_, x, y);
            });
        }
        return memo_ar_.emplace(key, std::move(out)).first->second;
    }

    const ColouredCollection& collection() const { return coll_; }

private:
    void gen_children_by_degree(const Shape& s, int slot, int rem,
                                std::vector<Tree> acc, std::vector<Tree>& out, int label) {
        int slots_left = s.arity() - slot;
        if (slots_left == 0) {
            if (rem == 0) out.push_back(make_node(label, acc));
            return;
        }
        for (int d = 0; d <= rem; ++d) {
            // Children of degree d must exist with the slot's colour; leaves
            // (d = 0) always do.
            const std::vector<Tree>& subs = by_degree(d, s.ins[slot]);
            for (const Tree& sub : subs) {
                auto acc2 = acc;
                acc2.push_back(sub);
                gen_children_by_degree(s, slot + 1, rem - d, std::move(acc2), out, label);
            }
        }
    }

    void gen_children_by_arity(const Shape& s, int slot, int rem,
                               std::vector<Tree> acc, std::vector<Tree>& out, int label) {
        int slots_left = s.arity() - slot;
        if (slots_left == 0) {
            if (rem == 0) out.push_back(make_node(label, acc));
            return;
        }
        for (int a = 1; a + (slots_left - 1) <= rem; ++a) {
            const std::vector<Tree>& subs = by_arity(a, s.ins[slot]);
            for (const Tree& sub : subs) {
                auto acc2 = acc;
                acc2.push_back(sub);
                gen_children_by_arity(s, slot + 1, rem - a, std::move(acc2), out, label);
            }
        }
    }

    const ColouredCollection& coll_;
    std::vector<int> labels_;
    std::map<std::pair<int, int>, std::vector<Tree>> memo_deg_;
    std::map<std::pair<int, int>, std::vector<Tree>> memo_ar_;
};

}  // namespace nco

#endif
