#ifndef NCO_BUBBLE_HPP
#define NCO_BUBBLE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nco/geometry.hpp"

namespace nco {

// A bubble is a diagonal-free BNC of size >= 2, wholly encoded by its
// output colour (1 = based, 2 = nonbased) and its border word. Letters:
// 1 = uncoloured edge, 2 = blue edge.
struct Bubble {
    int out;             // 1 or 2
    std::string border;  // word over '1','2', length >= 2

    int arity() const { return static_cast<int>(border.size()); }
    int in(int i) const { return border.at(i - 1) - '0'; }  // 1-based

    friend bool operator==(const Bubble& a, const Bubble& b) {
        return a.out == b.out && a.border == b.border;
    }
    friend bool operator<(const Bubble& a, const Bubble& b) {
        if (a.arity() != b.arity()) return a.arity() < b.arity();
        if (a.out != b.out) return a.out < b.out;
        return a.border < b.border;
    }
};

// Composition is substitution in words: defined iff the i-th border letter
// of b1 equals the output colour of b2. The partiality is semantic.
inline std::optional<Bubble> compose_bubble(const Bubble& b1, int i, const Bubble& b2) {
    if (i < 1 || i > b1.arity()) throw std::out_of_range("bubble composition index");
    if (b1.in(i) != b2.out) return std::nullopt;
    Bubble r;
    r.out = b1.out;
    r.border = b1.border.substr(0, i - 1) + b2.border + b1.border.substr(i);
    return r;
}

// Complementary: swap the colours of all edges (output flips with the base).
inline Bubble cpl(const Bubble& b) {
    Bubble r;
    r.out = 3 - b.out;
    r.border = b.border;
    for (char& ch : r.border) ch = (ch == '1') ? '2' : '1';
    return r;
}

// Returned: reflection through the vertical line by the base.
inline Bubble ret(const Bubble& b) {
    Bubble r;
    r.out = b.out;
    r.border = std::string(b.border.rbegin(), b.border.rend());
    return r;
}

// The eight arity-2 bubbles, the generating set. Name encodes
// (first edge, base, second edge) with A = blue, B = uncoloured.
inline const std::array<std::pair<const char*, Bubble>, 8>& bubble_generators() {
    static const std::array<std::pair<const char*, Bubble>, 8> g = {{
        {"AAA", {1, "22"}},
        {"AAB", {1, "21"}},
        {"BAA", {1, "12"}},
        {"BAB", {1, "11"}},
        {"ABA", {2, "22"}},
        {"ABB", {2, "21"}},
        {"BBA", {2, "12"}},
        {"BBB", {2, "11"}},
    }};
    return g;
}

inline Bubble bubble_by_name(const std::string& name) {
    for (const auto& [n, b] : bubble_generators())
        if (name == n) return b;
    throw std::invalid_argument("unknown generator name: " + name);
}

inline std::string bubble_name(const Bubble& b) {
    for (const auto& [n, g] : bubble_generators())
        if (g == b) return n;
    return "";
}

// Literal b:<out>:<border>; arity-2 bubbles also accepted by name.
inline Bubble parse_bubble(const std::string& lit) {
    std::string s = trim(lit);
    if (s.size() == 3 && s[0] != 'b') return bubble_by_name(s);
    auto parts = split(s, ':');
    if (parts.size() != 3 || parts[0] != "b")
        throw std::invalid_argument("bad bubble literal: " + lit);
    Bubble b;
    b.out = std::stoi(parts[1]);
    b.border = parts[2];
    if (b.out != 1 && b.out != 2) throw std::invalid_argument("bubble output must be 1 or 2");
    if (b.border.size() < 2) throw std::invalid_argument("bubble border must have length >= 2");
    for (char ch : b.border)
        if (ch != '1' && ch != '2') throw std::invalid_argument("bubble border letters are 1/2");
    return b;
}

inline std::string bubble_to_string(const Bubble& b) {
    return "b:" + std::to_string(b.out) + ":" + b.border;
}

inline Bubble bubble_of_bnc(const Bnc& c) {
    if (c.n < 2) throw std::invalid_argument("bubbles have size >= 2");
    for (Arc a : c.blue)
        if (is_diagonal(a, c.n)) throw std::invalid_argument("configuration has a blue diagonal");
    if (!c.red.empty()) throw std::invalid_argument("configuration has a red diagonal");
    Bubble b;
    b.out = is_based(c) ? 1 : 2;
    b.border.resize(c.n, '1');
    std::string w = border(c);
    b.border = w;
    return b;
}

inline Bnc bnc_of_bubble(const Bubble& b) {
    Bnc c;
    c.n = b.arity();
    for (int i = 1; i <= c.n; ++i)
        if (b.border[i - 1] == '2') c.blue.push_back({i, i + 1});
    if (b.out == 1) c.blue.push_back(base_arc(c));
    sort_arcs(c);
    return c;
}

// All 2 * 2^n bubbles of a given arity, canonical order.
inline std::vector<Bubble> all_bubbles(int arity) {
    std::vector<Bubble> out;
    if (arity < 2) return out;
    for (int o = 1; o <= 2; ++o) {
        for (i64 mask = 0; mask < (i64(1) << arity); ++mask) {
            Bubble b;
            b.out = o;
            b.border.resize(arity);
            for (int i = 0; i < arity; ++i)
                b.border[i] = (mask >> i) & 1 ? '2' : '1';
            out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nco

#endif
