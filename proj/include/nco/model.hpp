#ifndef NCO_MODEL_HPP
#define NCO_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nco/bubble.hpp"
#include "nco/geometry.hpp"

namespace nco {

// A coloured-operad model supplies, for some element type E:
//   int colours() const;
//   int arity(const E&) const;  int out(const E&) const;  int in(const E&, int i) const;
//   std::optional<E> compose(const E&, int i, const E&) const;
//   std::vector<E> elements(int arity) const;   // finite, canonical order
// Elements must be ordered values. Plain operads are the k = 1 case.

// The full 2-coloured operad of bubbles.
struct BulleModel {
    using Element = Bubble;
    int colours() const { return 2; }
    int arity(const Bubble& b) const { return b.arity(); }
    int out(const Bubble& b) const { return b.out; }
    int in(const Bubble& b, int i) const { return b.in(i); }
    std::optional<Bubble> compose(const Bubble& x, int i, const Bubble& y) const {
        return compose_bubble(x, i, y);
    }
    std::vector<Bubble> elements(int n) const { return all_bubbles(n); }
};

// A coloured suboperad of Bulle given by its graded element sets (built by
// closure of a generating set). Composition is inherited.
struct SubBulleModel {
    std::vector<std::set<Bubble>> graded;  // index = arity

    using Element = Bubble;
    int colours() const { return 2; }
    int arity(const Bubble& b) const { return b.arity(); }
    int out(const Bubble& b) const { return b.out; }
    int in(const Bubble& b, int i) const { return b.in(i); }
    std::optional<Bubble> compose(const Bubble& x, int i, const Bubble& y) const {
        return compose_bubble(x, i, y);
    }
    std::vector<Bubble> elements(int n) const {
        if (n < 0 || n >= static_cast<int>(graded.size())) return {};
        return {graded[n].begin(), graded[n].end()};
    }
};

// One element b_n per arity n >= 2; Out = 1, In_1 = 1, In_i = 2 for i >= 2;
// b_n o_1 b_m = b_{n+m-1} and nothing else composes.
struct FasModel {
    using Element = int;  // the arity
    int colours() const { return 2; }
    int arity(int e) const { return e; }
    int out(int) const { return 1; }
    int in(int, int i) const { return i == 1 ? 1 : 2; }
    std::optional<int> compose(int x, int i, int y) const {
        if (i == 1) return x + y - 1;
        return std::nullopt;
    }
    std::vector<int> elements(int n) const {
        if (n < 2) return {};
        return {n};
    }
};

// A single binary element with Out = 1 and both inputs 2: no nontrivial
// composition at all.
struct Alpha2Model {
    using Element = int;  // always 0
    int colours() const { return 2; }
    int arity(int) const { return 2; }
    int out(int) const { return 1; }
    int in(int, int) const { return 2; }
    std::optional<int> compose(int, int, int) const { return std::nullopt; }
    std::vector<int> elements(int n) const {
        if (n == 2) return {0};
        return {};
    }
};

// CNCB as a 1-coloured model: total composition, used to evaluate
// presentation trees over BNC generators.
struct CncbModel {
    using Element = Bnc;
    int colours() const { return 1; }
    int arity(const Bnc& c) const { return c.n; }
    int out(const Bnc&) const { return 1; }
    int in(const Bnc&, int) const { return 1; }
    std::optional<Bnc> compose(const Bnc& x, int i, const Bnc& y) const {
        return nco::compose(x, i, y);
    }
    std::vector<Bnc> elements(int) const {
        throw std::logic_error("CncbModel does not enumerate; use closures");
    }
};

}  // namespace nco

#endif
