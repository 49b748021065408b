#ifndef NCO_GEOMETRY_HPP
#define NCO_GEOMETRY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nco/util.hpp"

namespace nco {

// An arc of a polygon with n+1 vertices is a pair 1 <= i < j <= n+1.
using Arc = std::pair<int, int>;

// Bicoloured noncrossing configuration of size n: a polygon with n+1
// vertices, a set of blue arcs and a set of red arcs. The base is the arc
// (1, n+1); vertex numbering is clockwise. Arc vectors are kept sorted so
// equality and ordering are structural.
struct Bnc {
    int n = 1;
    std::vector<Arc> blue;
    std::vector<Arc> red;

    friend bool operator==(const Bnc& a, const Bnc& b) {
        return a.n == b.n && a.blue == b.blue && a.red == b.red;
    }
    friend bool operator<(const Bnc& a, const Bnc& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.blue != b.blue) return a.blue < b.blue;
        return a.red < b.red;
    }
};

inline Bnc unit_bnc() { return Bnc{1, {{1, 2}}, {}}; }

inline Arc base_arc(const Bnc& c) { return {1, c.n + 1}; }

inline bool is_diagonal(Arc a, int n) {
    return a.second != a.first + 1 && !(a.first == 1 && a.second == n + 1);
}

// Strict interleaving; arcs sharing an endpoint never cross.
inline bool arcs_cross(Arc a, Arc b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline bool contains_arc(const std::vector<Arc>& v, Arc a) {
    return std::binary_search(v.begin(), v.end(), a);
}

inline bool is_based(const Bnc& c) { return contains_arc(c.blue, base_arc(c)); }

inline void sort_arcs(Bnc& c) {
    std::sort(c.blue.begin(), c.blue.end());
    std::sort(c.red.begin(), c.red.end());
}

// Reports the first violated invariant, or nullopt when the configuration
// is a valid BNC.
inline std::optional<std::string> validate(const Bnc& c) {
    if (c.n < 1) return "size must be >= 1";
    for (const auto& arcs : {c.blue, c.red})
        for (Arc a : arcs) {
            if (!(1 <= a.first && a.first < a.second && a.second <= c.n + 1))
                return "arc out of range";
        }
    if (c.n == 1) {
        if (!(c.blue == std::vector<Arc>{{1, 2}} && c.red.empty()))
            return "the size-1 configuration is the single blue segment";
        return std::nullopt;
    }
    std::vector<Arc> coloured;
    coloured.reserve(c.blue.size() + c.red.size());
    for (Arc a : c.blue) coloured.push_back(a);
    for (Arc a : c.red) {
        if (contains_arc(c.blue, a)) return "arc is both blue and red";
        if (!is_diagonal(a, c.n)) return "red arc is not a diagonal";
        coloured.push_back(a);
    }
    for (std::size_t i = 0; i < coloured.size(); ++i)
        for (std::size_t j = i + 1; j < coloured.size(); ++j)
            if (arcs_cross(coloured[i], coloured[j])) return "coloured arcs cross";
    for (std::size_t i = 0; i + 1 < c.blue.size(); ++i)
        if (c.blue[i] == c.blue[i + 1]) return "duplicate blue arc";
    for (std::size_t i = 0; i + 1 < c.red.size(); ++i)
        if (c.red[i] == c.red[i + 1]) return "duplicate red arc";
    return std::nullopt;
}

// Border word over {1,2}: letter i is 2 when the edge (i, i+1) is coloured
// (blue; edges are never red) and 1 when it is uncoloured.
inline std::string border(const Bnc& c) {
    if (c.n < 2) throw std::invalid_argument("border needs size >= 2");
    std::string w(c.n, '1');
    for (int i = 1; i <= c.n; ++i)
        if (contains_arc(c.blue, {i, i + 1})) w[i - 1] = '2';
    return w;
}

// Gluing composition: the base of d is glued onto the i-th edge of c.
// The seam arc (i, i+m) becomes red when both glued sides are uncoloured,
// blue when both are blue, and uncoloured otherwise.
inline Bnc compose(const Bnc& c, int i, const Bnc& d) {
    if (i < 1 || i > c.n) throw std::out_of_range("composition index out of range");
    int m = d.n;
    Bnc r;
    r.n = c.n + m - 1;
    auto map_c = [&](int v) { return v <= i ? v : v + m - 1; };
    auto map_d = [&](int v) { return v + i - 1; };
    Arc edge_i{i, i + 1};
    Arc d_base = base_arc(d);
    bool edge_blue = contains_arc(c.blue, edge_i);
    bool base_blue = contains_arc(d.blue, d_base);

    for (Arc a : c.blue)
        if (a != edge_i) r.blue.push_back({map_c(a.first), map_c(a.second)});
    for (Arc a : c.red) r.red.push_back({map_c(a.first), map_c(a.second)});
    for (Arc a : d.blue)
        if (a != d_base) r.blue.push_back({map_d(a.first), map_d(a.second)});
    for (Arc a : d.red) r.red.push_back({map_d(a.first), map_d(a.second)});

    Arc seam{i, i + m};
    if (edge_blue && base_blue)
        r.blue.push_back(seam);
    else if (!edge_blue && !base_blue)
        r.red.push_back(seam);
    // mixed: seam stays uncoloured

    sort_arcs(r);
    return r;
}

// Automorphism lifted from the bubble colour swap: blue and red diagonals
// exchange, blue and uncoloured edges exchange (base included).
inline Bnc cpl_prime(const Bnc& c) {
    if (c.n == 1) return c;
    Bnc r;
    r.n = c.n;
    for (Arc a : c.blue) {
        if (is_diagonal(a, c.n))
            r.red.push_back(a);
        // blue edge -> uncoloured
    }
    for (Arc a : c.red) r.blue.push_back(a);
    for (int i = 1; i <= c.n; ++i) {
        Arc e{i, i + 1};
        if (!contains_arc(c.blue, e)) r.blue.push_back(e);
    }
    Arc b = base_arc(c);
    if (!contains_arc(c.blue, b)) r.blue.push_back(b);
    sort_arcs(r);
    return r;
}

// Antiautomorphism: reflection through the vertical line by the base,
// v -> n+2-v, colours preserved.
inline Bnc ret_prime(const Bnc& c) {
    Bnc r;
    r.n = c.n;
    auto refl = [&](Arc a) {
        int p = c.n + 2 - a.second, q = c.n + 2 - a.first;
        return Arc{p, q};
    };
    for (Arc a : c.blue) r.blue.push_back(refl(a));
    for (Arc a : c.red) r.red.push_back(refl(a));
    sort_arcs(r);
    return r;
}

struct BncStats {
    int y1;     // blue diagonals, a blue base counting as one
    int y2;     // red diagonals, an uncoloured base counting as one
    int areas;  // y1 + y2 = internal nodes of the dual tree
};

inline BncStats stats(const Bnc& c) {
    if (c.n < 2) throw std::invalid_argument("stats needs size >= 2");
    int y1 = 0, y2 = 0;
    for (Arc a : c.blue)
        if (is_diagonal(a, c.n)) ++y1;
    y1 += is_based(c) ? 1 : 0;
    y2 = static_cast<int>(c.red.size()) + (is_based(c) ? 0 : 1);
    return {y1, y2, y1 + y2};
}

// Brute-force oracle: every arc of the polygon is uncoloured, blue or red;
// keep the colourings that validate. 3^{(n+1)n/2} candidates, so this is
// desk scale only (59049 at n = 4, 14.3M at n = 5).
inline std::vector<Bnc> enumerate_direct(int n, int jobs = 1) {
    if (n == 1) return {unit_bnc()};
    if (n > 5) throw std::invalid_argument("oracle bound exceeded (max 5)");
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) arcs.push_back({i, j});
    int na = static_cast<int>(arcs.size());
    i64 total = 1;
    for (int i = 0; i < na; ++i) total *= 3;

    auto body = [&](i64 lo, i64 hi, std::vector<Bnc>& out) {
        for (i64 code = lo; code < hi; ++code) {
            Bnc c;
            c.n = n;
            i64 v = code;
            for (int i = 0; i < na; ++i) {
                int col = static_cast<int>(v % 3);
                v /= 3;
                if (col == 1) c.blue.push_back(arcs[i]);
                else if (col == 2) c.red.push_back(arcs[i]);
            }
            sort_arcs(c);
            if (!validate(c)) out.push_back(std::move(c));
        }
    };
    std::vector<Bnc> all;
    parallel_chunks<std::vector<Bnc>>(total, jobs, body, [&](std::vector<Bnc>& part) {
        all.insert(all.end(), part.begin(), part.end());
    });
    std::sort(all.begin(), all.end());
    return all;
}

// Text literal: n=<size>;B=<i-j>,...;R=<i-j>,...  (empty lists allowed).
inline std::string bnc_to_string(const Bnc& c) {
    std::string s = "n=" + std::to_string(c.n) + ";B=";
    for (std::size_t i = 0; i < c.blue.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.blue[i].first) + "-" + std::to_string(c.blue[i].second);
    }
    s += ";R=";
    for (std::size_t i = 0; i < c.red.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.red[i].first) + "-" + std::to_string(c.red[i].second);
    }
    return s;
}

inline Bnc parse_bnc(const std::string& lit) {
    auto parts = split(trim(lit), ';');
    if (parts.size() != 3 || parts[0].substr(0, 2) != "n=" || parts[1].substr(0, 2) != "B=" ||
        parts[2].substr(0, 2) != "R=")
        throw std::invalid_argument("bad BNC literal: " + lit);
    Bnc c;
    c.n = std::stoi(parts[0].substr(2));
    auto parse_arcs = [](const std::string& s, std::vector<Arc>& out) {
        if (s.empty()) return;
        for (const auto& tok : split(s, ',')) {
            auto ij = split(tok, '-');
            if (ij.size() != 2) throw std::invalid_argument("bad arc: " + tok);
            out.push_back({std::stoi(ij[0]), std::stoi(ij[1])});
        }
    };
    parse_arcs(parts[1].substr(2), c.blue);
    parse_arcs(parts[2].substr(2), c.red);
    sort_arcs(c);
    if (auto err = validate(c)) throw std::invalid_argument("invalid BNC: " + *err);
    return c;
}

// SVG export: regular polygon, thick blue arcs, dotted red arcs.
inline std::string bnc_to_svg(const Bnc& c) {
    const double R = 180.0, cx = 200.0, cy = 200.0, pi = 3.14159265358979323846;
    int V = c.n + 1;
    std::vector<std::pair<double, double>> pt(V + 1);
    for (int v = 1; v <= V; ++v) {
        // base (1, n+1) drawn at the bottom
        double ang = pi / 2 + pi / V + 2 * pi * (v - 1) / V;
        pt[v] = {cx + R * std::cos(ang + pi), cy - R * std::sin(ang + pi)};
    }
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400' "
          "viewBox='0 0 400 400'>\n";
    auto line = [&](Arc a, const char* style) {
        os << "  <line x1='" << pt[a.first].first << "' y1='" << pt[a.first].second
           << "' x2='" << pt[a.second].first << "' y2='" << pt[a.second].second << "' "
           << style << "/>\n";
    };
    for (int i = 1; i <= c.n; ++i) line({i, i + 1}, "stroke='#999' stroke-width='1'");
    line(base_arc(c), "stroke='#999' stroke-width='1'");
    for (Arc a : c.blue) line(a, "stroke='#15c' stroke-width='4' stroke-linecap='round'");
    for (Arc a : c.red)
        line(a, "stroke='#c22' stroke-width='2' stroke-dasharray='2,5' stroke-linecap='round'");
    for (int v = 1; v <= V; ++v)
        os << "  <text x='" << pt[v].first << "' y='" << pt[v].second
           << "' font-size='11' fill='#333' dx='-3' dy='-5'>" << v << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace nco

#endif
