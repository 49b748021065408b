#ifndef NCO_ENVELOPE_HPP
#define NCO_ENVELOPE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "nco/series.hpp"
#include "nco/util.hpp"

namespace nco {

// Trees over a model's nontrivial elements. A null child is a leaf (the
// unit demanded by its slot). The enveloping operad of a coloured operad
// is realized as the anticoloured trees: on every internal edge the slot
// colour of the parent differs from the output colour of the child.
template <class E>
struct ANode;

template <class E>
using ATree = std::shared_ptr<const ANode<E>>;

template <class E>
struct ANode {
    E elem;
    std::vector<ATree<E>> kids;
};

template <class E>
ATree<E> make_anode(E elem, std::vector<ATree<E>> kids) {
    auto n = std::make_shared<ANode<E>>();
    n->elem = std::move(elem);
    n->kids = std::move(kids);
    return n;
}

template <class M>
ATree<typename M::Element> acorolla(const M& m, const typename M::Element& e) {
    return make_anode(e, std::vector<ATree<typename M::Element>>(m.arity(e)));
}

template <class E>
int atree_arity(const ATree<E>& t) {
    if (!t) return 1;
    int a = 0;
    for (const auto& k : t->kids) a += atree_arity(k);
    return a;
}

template <class E>
int atree_degree(const ATree<E>& t) {
    if (!t) return 0;
    int d = 1;
    for (const auto& k : t->kids) d += atree_degree(k);
    return d;
}

template <class E>
bool atree_equal(const ATree<E>& a, const ATree<E>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (!(a->elem == b->elem) || a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!atree_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

template <class E>
bool atree_less(const ATree<E>& a, const ATree<E>& b) {
    if (!a || !b) return static_cast<bool>(b) && !a;
    if (a->elem < b->elem) return true;
    if (b->elem < a->elem) return false;
    if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size();
    for (std::size_t i = 0; i < a->kids.size(); ++i) {
        if (atree_less(a->kids[i], b->kids[i])) return true;
        if (atree_less(b->kids[i], a->kids[i])) return false;
    }
    return false;
}

template <class M>
bool is_anticoloured(const M& m, const ATree<typename M::Element>& t) {
    if (!t) return true;
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
        const auto& k = t->kids[i];
        if (k) {
            if (m.out(k->elem) == m.in(t->elem, static_cast<int>(i) + 1)) return false;
            if (!is_anticoloured(m, k)) return false;
        }
    }
    return true;
}

namespace detail {

// Merge the i-th child (1-based, must be internal and colour-matching)
// into its parent: the child's children are spliced in place.
template <class M>
ATree<typename M::Element> reduce_at(const M& m, const ATree<typename M::Element>& t, int i) {
    using E = typename M::Element;
    const ATree<E>& s = t->kids.at(i - 1);
    if (!s) throw std::invalid_argument("reduce: child is a leaf");
    if (m.in(t->elem, i) != m.out(s->elem))
        throw std::invalid_argument("reduce: edge is not reducible (colour mismatch)");
    auto merged = m.compose(t->elem, i, s->elem);
    if (!merged) throw std::logic_error("reduce: model refused a colour-matching composition");
    std::vector<ATree<E>> kids;
    kids.reserve(t->kids.size() + s->kids.size() - 1);
    for (int j = 0; j < static_cast<int>(t->kids.size()); ++j) {
        if (j == i - 1)
            for (const auto& g : s->kids) kids.push_back(g);
        else
            kids.push_back(t->kids[j]);
    }
    return make_anode(*merged, std::move(kids));
}

}  // namespace detail

// Reduction of a 1-coloured tree over model elements along the edge from
// node `path` to its i-th child. `path` is the child-index route from the
// root (empty = root). Degree drops by exactly one; leaves are unchanged.
template <class M>
ATree<typename M::Element> reduce_edge(const M& m, const ATree<typename M::Element>& t,
                                       const std::vector<int>& path, int i) {
    using E = typename M::Element;
    if (!t) throw std::invalid_argument("reduce: tree is a leaf");
    if (path.empty()) return detail::reduce_at(m, t, i);
    std::vector<ATree<E>> kids = t->kids;
    int step = path.front();
    kids.at(step) = reduce_edge(m, kids.at(step), {path.begin() + 1, path.end()}, i);
    return make_anode(t->elem, std::move(kids));
}

// Composition of the enveloping operad: graft, then reduce the new edge
// when the colours match. One reduction always suffices: the merged node
// keeps the parent's output colour and inherits input colours, so no new
// matching edge appears.
template <class M>
ATree<typename M::Element> compose_anti(const M& m, const ATree<typename M::Element>& s, int i,
                                        const ATree<typename M::Element>& t) {
    using E = typename M::Element;
    if (i < 1 || i > atree_arity(s)) throw std::out_of_range("composition index out of range");
    if (!t) return s;
    if (!s) return t;
    // Find the parent of the i-th leaf and the leaf's slot index.
    std::function<ATree<E>(const ATree<E>&, int&)> go = [&](const ATree<E>& node,
                                                            int& leaf) -> ATree<E> {
        std::vector<ATree<E>> kids = node->kids;
        for (std::size_t j = 0; j < kids.size(); ++j) {
            int a = atree_arity(kids[j]);
            if (leaf <= a) {
                if (!kids[j]) {
                    // graft here; reduce if slot colour matches t's output
                    if (m.in(node->elem, static_cast<int>(j) + 1) == m.out(t->elem)) {
                        auto merged = m.compose(node->elem, static_cast<int>(j) + 1, t->elem);
                        if (!merged)
                            throw std::logic_error("model refused a colour-matching composition");
                        std::vector<ATree<E>> nk;
                        nk.reserve(kids.size() + t->kids.size() - 1);
                        for (std::size_t q = 0; q < kids.size(); ++q) {
                            if (q == j)
                                for (const auto& g : t->kids) nk.push_back(g);
                            else
                                nk.push_back(kids[q]);
                        }
                        return make_anode(*merged, std::move(nk));
                    }
                    kids[j] = t;
                    return make_anode(node->elem, std::move(kids));
                }
                kids[j] = go(kids[j], leaf);
                return make_anode(node->elem, std::move(kids));
            }
            leaf -= a;
        }
        throw std::logic_error("leaf search fell through");
    };
    int leaf = i;
    return go(s, leaf);
}

// Leftmost-innermost reduction to the unique normal form (the reduction
// rule over a coloured operad is confluent, so the strategy is a
// determinism choice only).
template <class M>
ATree<typename M::Element> normalize(const M& m, const ATree<typename M::Element>& t) {
    using E = typename M::Element;
    if (!t) return t;
    std::vector<ATree<E>> kids;
    kids.reserve(t->kids.size());
    for (const auto& k : t->kids) kids.push_back(normalize(m, k));
    ATree<E> cur = make_anode(t->elem, std::move(kids));
    // Children are normal; reduce matching edges at the root until none.
    for (;;) {
        bool reduced = false;
        for (int i = 1; i <= static_cast<int>(cur->kids.size()); ++i) {
            const auto& k = cur->kids[i - 1];
            if (k && m.in(cur->elem, i) == m.out(k->elem)) {
                cur = detail::reduce_at(m, cur, i);
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return cur;
}

// All maximal reduction sequences from t; used to certify confluence at
// desk scale. Returns the set of distinct normal forms reached.
template <class M>
void all_reduction_normal_forms(const M& m, const ATree<typename M::Element>& t,
                                std::set<std::string>& nfs,
                                const std::function<std::string(const ATree<typename M::Element>&)>& key) {
    using E = typename M::Element;
    std::vector<std::pair<std::vector<int>, int>> redexes;
    std::function<void(const ATree<E>&, std::vector<int>&)> scan = [&](const ATree<E>& node,
                                                                       std::vector<int>& path) {
        if (!node) return;
        for (int i = 1; i <= static_cast<int>(node->kids.size()); ++i) {
            const auto& k = node->kids[i - 1];
            if (!k) continue;
            if (m.in(node->elem, i) == m.out(k->elem)) redexes.push_back({path, i});
            path.push_back(i - 1);
            scan(k, path);
            path.pop_back();
        }
    };
    std::vector<int> path;
    scan(t, path);
    if (redexes.empty()) {
        nfs.insert(key(t));
        return;
    }
    for (const auto& [p, i] : redexes)
        all_reduction_normal_forms(m, reduce_edge(m, t, p, i), nfs, key);
}

// Enumerates the anticoloured trees over a model, memoized per
// (arity, output colour). Canonical order.
template <class M>
class AntiEnumerator {
public:
    using E = typename M::Element;

    explicit AntiEnumerator(const M& m) : m_(m) {}

    // Anticoloured trees of the given arity and output colour (arity >= 2).
    const std::vector<ATree<E>>& trees(int arity, int out_colour) {
        auto kk = std::make_pair(arity, out_colour);
        auto it = memo_.find(kk);
        if (it != memo_.end()) return it->second;
        std::vector<ATree<E>> res;
        for (int a = 2; a <= arity; ++a) {
            for (const E& e : m_.elements(a)) {
                if (m_.out(e) != out_colour) continue;
                std::vector<ATree<E>> acc(a);
                fill_children(e, a, 0, arity - a, acc, res);
            }
        }
        std::sort(res.begin(), res.end(), atree_less<E>);
        return memo_.emplace(kk, std::move(res)).first->second;
    }

    // All anticoloured trees of the given arity, any output colour; the
    // unit leaf for arity 1.
    std::vector<ATree<E>> trees_all(int arity) {
        if (arity == 1) return {nullptr};
        std::vector<ATree<E>> res;
        for (int c = 1; c <= m_.colours(); ++c) {
            const auto& part = trees(arity, c);
            res.insert(res.end(), part.begin(), part.end());
        }
        return res;
    }

private:
    // Distribute `extra` additional leaves across slots `slot..`; each slot
    // holds either a leaf or an anticoloured subtree whose output colour
    // differs from the slot colour.
    void fill_children(const E& e, int a, int slot, int extra, std::vector<ATree<E>>& acc,
                       std::vector<ATree<E>>& out) {
        if (slot == a) {
            if (extra == 0) out.push_back(make_anode(e, acc));
            return;
        }
        // leaf in this slot
        acc[slot] = nullptr;
        fill_children(e, a, slot + 1, extra, acc, out);
        // internal subtree of arity 2..extra+1
        for (int sub = 2; sub <= extra + 1; ++sub) {
            for (int c = 1; c <= m_.colours(); ++c) {
                if (c == m_.in(e, slot + 1)) continue;
                for (const auto& t : trees(sub, c)) {
                    acc[slot] = t;
                    fill_children(e, a, slot + 1, extra - (sub - 1), acc, out);
                }
            }
        }
        acc[slot] = nullptr;
    }

    const M& m_;
    std::map<std::pair<int, int>, std::vector<ATree<E>>> memo_;
};

// Coloured Hilbert series of a model, as series over (z_1, ..., z_k) with
// total degree <= N: the monomial of an element records how many inputs of
// each colour it has.
template <class M>
std::vector<MultiSeries> coloured_hilbert_of_model(const M& m, int N) {
    int k = m.colours();
    std::vector<MultiSeries> B(k + 1, MultiSeries(k, N));  // 1-based by colour
    for (int n = 2; n <= N; ++n) {
        for (const auto& e : m.elements(n)) {
            MultiSeries::Mono mono(k, 0);
            for (int i = 1; i <= n; ++i) mono[m.in(e, i) - 1]++;
            B[m.out(e)].add_term(mono, 1);
        }
    }
    return B;
}

struct EnvelopeDims {
    TruncSeries total;                  // F = t + F_1 + ... + F_k
    std::vector<TruncSeries> by_colour;  // 1-based
};

// Hilbert series of the enveloping operad from the coloured Hilbert
// series: F = t + sum_c F_c with F_c = B_c(F - F_1, ..., F - F_k).
// Computed as a fixpoint from low orders up; coefficient n of F_c only
// depends on strictly lower-order data because every B_c monomial has
// total degree >= 2.
inline EnvelopeDims dims_from_coloured_series(const std::vector<MultiSeries>& B, int k, int N) {
    std::vector<TruncSeries> F_c(k + 1, TruncSeries(N));
    TruncSeries t = TruncSeries::t(N);
    for (int iter = 0; iter <= N; ++iter) {
        TruncSeries F = t;
        for (int c = 1; c <= k; ++c) F += F_c[c];
        std::vector<TruncSeries> G(k + 1, TruncSeries(N));
        for (int d = 1; d <= k; ++d) G[d] = F - F_c[d];
        bool changed = false;
        for (int c = 1; c <= k; ++c) {
            TruncSeries next(N);
            for (const auto& [mono, coef] : B[c].coeffs()) {
                TruncSeries term(N);
                term.c[0] = coef;
                for (int d = 1; d <= k; ++d)
                    for (int e = 0; e < mono[d - 1]; ++e) term = term * G[d];
                next += term;
            }
            if (!(next - F_c[c]).is_zero()) changed = true;
            F_c[c] = next;
        }
        if (!changed) break;
    }
    EnvelopeDims out;
    out.total = t;
    for (int c = 1; c <= k; ++c) out.total += F_c[c];
    out.by_colour = F_c;
    return out;
}

template <class M>
EnvelopeDims dims_via_series(const M& m, int N) {
    return dims_from_coloured_series(coloured_hilbert_of_model(m, N), m.colours(), N);
}

// Lift a map of model elements to a map of anticoloured trees: relabel
// node-wise (mirroring children for antimorphisms) and renormalize, since
// relabelling may enable reductions.
template <class M1, class M2, class F>
ATree<typename M2::Element> lift_map(const M1& m1, const M2& m2, F&& f, bool antimorphism,
                                     const ATree<typename M1::Element>& t) {
    using E2 = typename M2::Element;
    if (!t) return nullptr;
    std::vector<ATree<E2>> kids;
    kids.reserve(t->kids.size());
    for (const auto& k : t->kids) kids.push_back(lift_map(m1, m2, f, antimorphism, k));
    if (antimorphism) std::reverse(kids.begin(), kids.end());
    auto node = make_anode(f(t->elem), std::move(kids));
    return normalize(m2, node);
}

// Verify that f is a coloured operad (anti)morphism on elements up to the
// given arity bound: definedness is preserved and compositions commute.
template <class M1, class M2, class F>
bool check_elementwise_morphism(const M1& m1, const M2& m2, F&& f, bool antimorphism,
                                int arity_bound) {
    for (int n = 2; n <= arity_bound; ++n) {
        for (const auto& x : m1.elements(n)) {
            int ax = m1.arity(x);
            for (int mm = 2; mm + n - 1 <= arity_bound; ++mm) {
                for (const auto& y : m1.elements(mm)) {
                    for (int i = 1; i <= ax; ++i) {
                        auto z = m1.compose(x, i, y);
                        if (!z) continue;
                        int j = antimorphism ? ax - i + 1 : i;
                        auto w = m2.compose(f(x), j, f(y));
                        if (!w || !(*w == f(*z))) return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace nco

#endif
