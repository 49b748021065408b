#ifndef NCO_DUAL_HPP
#define NCO_DUAL_HPP

#include <algorithm>
#include <vector>

#include "nco/envelope.hpp"
#include "nco/model.hpp"

namespace nco {

// Dual tree of a BNC: one internal node per area, labelled by the area's
// bubble. Implemented order-theoretically: the root area is bounded by the
// base, the maximal coloured diagonals and the edges not below any of
// them; each maximal coloured diagonal opens a sub-configuration, based
// when the diagonal is blue, nonbased when it is red.
inline ATree<Bubble> decompose(const Bnc& c) {
    if (c.n == 1) return nullptr;

    std::vector<std::pair<Arc, bool>> diags;  // (arc, is_blue)
    for (Arc a : c.blue)
        if (is_diagonal(a, c.n)) diags.push_back({a, true});
    for (Arc a : c.red) diags.push_back({a, false});

    auto contained = [](Arc inner, Arc outer) {
        return outer.first <= inner.first && inner.second <= outer.second &&
               !(inner == outer);
    };

    Bubble root;
    root.out = is_based(c) ? 1 : 2;
    std::vector<ATree<Bubble>> kids;

    int v = 1;
    while (v <= c.n) {
        // The longest coloured diagonal from v, if it is maximal.
        Arc best{0, 0};
        bool best_blue = false;
        for (const auto& [a, blue] : diags) {
            if (a.first != v) continue;
            bool maximal = true;
            for (const auto& [b, blue2] : diags)
                if (contained(a, b)) { maximal = false; break; }
            if (maximal && a.second > best.second) {
                best = a;
                best_blue = blue;
            }
        }
        if (best.second > 0) {
            root.border.push_back(best_blue ? '2' : '1');
            // Sub-configuration on [v, best.second], shifted to 1..
            Bnc sub;
            sub.n = best.second - v;
            for (Arc a : c.blue)
                if (v <= a.first && a.second <= best.second && a != best)
                    sub.blue.push_back({a.first - v + 1, a.second - v + 1});
            for (Arc a : c.red)
                if (v <= a.first && a.second <= best.second && a != best)
                    sub.red.push_back({a.first - v + 1, a.second - v + 1});
            if (best_blue) sub.blue.push_back(base_arc(sub));
            sort_arcs(sub);
            kids.push_back(decompose(sub));
            v = best.second;
        } else {
            root.border.push_back(contains_arc(c.blue, {v, v + 1}) ? '2' : '1');
            kids.push_back(nullptr);
            v += 1;
        }
    }
    return make_anode(std::move(root), std::move(kids));
}

// Inverse of decompose: evaluate the dual tree bottom-up with the gluing
// composition. Children are folded right to left so positions stay valid.
inline Bnc flatten(const ATree<Bubble>& t) {
    if (!t) return unit_bnc();
    Bnc acc = bnc_of_bubble(t->elem);
    for (int i = static_cast<int>(t->kids.size()); i >= 1; --i) {
        const auto& k = t->kids[i - 1];
        if (k) acc = compose(acc, i, flatten(k));
    }
    return acc;
}

}  // namespace nco

#endif
