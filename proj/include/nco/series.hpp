#ifndef NCO_SERIES_HPP
#define NCO_SERIES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nco/util.hpp"

namespace nco {

// Univariate truncated power series with exact integer coefficients.
struct TruncSeries {
    int N = 0;
    std::vector<i64> c;  // c[n] = coefficient of t^n, size N+1

    TruncSeries() = default;
    explicit TruncSeries(int order) : N(order), c(order + 1, 0) {}

    static TruncSeries t(int order) {
        TruncSeries s(order);
        if (order >= 1) s.c[1] = 1;
        return s;
    }

    i64 at(int n) const { return (n >= 0 && n <= N) ? c[n] : 0; }

    TruncSeries& operator+=(const TruncSeries& o) {
        for (int n = 0; n <= std::min(N, o.N); ++n) c[n] = checked_add(c[n], o.c[n]);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        for (int n = 0; n <= std::min(N, o.N); ++n) c[n] = checked_add(c[n], -o.c[n]);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.N, b.N));
        for (int i = 0; i <= a.N; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; i + j <= r.N && j <= b.N; ++j) {
                if (!b.c[j]) continue;
                r.c[i + j] = checked_add(r.c[i + j], checked_mul(a.c[i], b.c[j]));
            }
        }
        return r;
    }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; });
    }
};

// Multivariate truncated series over a fixed variable list. Truncation is
// either by total degree or by the degree in one distinguished variable
// (the arity variable t for refined series).
class MultiSeries {
public:
    using Mono = std::vector<int>;

    MultiSeries(int nvars, int order, int trunc_var = -1)
        : nvars_(nvars), N_(order), trunc_var_(trunc_var) {}

    int nvars() const { return nvars_; }
    int order() const { return N_; }
    int trunc_var() const { return trunc_var_; }

    bool keeps(const Mono& m) const {
        int d = trunc_var_ < 0 ? std::accumulate(m.begin(), m.end(), 0) : m[trunc_var_];
        return d <= N_;
    }

    void add_term(const Mono& m, i64 v) {
        if (v == 0 || !keeps(m)) return;
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            coeffs_.emplace(m, v);
        } else {
            it->second = checked_add(it->second, v);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    i64 at(const Mono& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<Mono, i64>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    static MultiSeries var(int nvars, int order, int v, int trunc_var = -1) {
        MultiSeries s(nvars, order, trunc_var);
        Mono m(nvars, 0);
        m[v] = 1;
        s.add_term(m, 1);
        return s;
    }

    static MultiSeries constant(int nvars, int order, i64 v, int trunc_var = -1) {
        MultiSeries s(nvars, order, trunc_var);
        s.add_term(Mono(nvars, 0), v);
        return s;
    }

    MultiSeries& operator+=(const MultiSeries& o) {
        for (const auto& [m, v] : o.coeffs_) add_term(m, v);
        return *this;
    }
    MultiSeries& operator-=(const MultiSeries& o) {
        for (const auto& [m, v] : o.coeffs_) add_term(m, -v);
        return *this;
    }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r(a.nvars_, std::min(a.N_, b.N_), a.trunc_var_);
        Mono m(a.nvars_, 0);
        for (const auto& [ma, va] : a.coeffs_) {
            for (const auto& [mb, vb] : b.coeffs_) {
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                if (r.keeps(m)) r.add_term(m, checked_mul(va, vb));
            }
        }
        return r;
    }

    MultiSeries pow(int e) const {
        MultiSeries r = constant(nvars_, N_, 1, trunc_var_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Substitute each variable by a series over a (possibly different)
    // variable space. All images must share nvars/order/trunc mode.
    MultiSeries substitute(const std::vector<MultiSeries>& images) const {
        const MultiSeries& proto = images.at(0);
        MultiSeries r(proto.nvars_, proto.N_, proto.trunc_var_);
        for (const auto& [m, v] : coeffs_) {
            MultiSeries term = constant(proto.nvars_, proto.N_, v, proto.trunc_var_);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) term = term * images[i];
            r += term;
        }
        return r;
    }

    TruncSeries to_univariate() const {
        TruncSeries s(N_);
        for (const auto& [m, v] : coeffs_) {
            int d = std::accumulate(m.begin(), m.end(), 0);
            s.c[d] = checked_add(s.c[d], v);
        }
        return s;
    }

private:
    int nvars_;
    int N_;
    int trunc_var_;
    std::map<Mono, i64> coeffs_;
};

// num/den expanded as a truncated series; den must have constant term +-1.
inline MultiSeries expand_rational(const MultiSeries& num, const MultiSeries& den, int order) {
    int nv = num.nvars();
    if (den.trunc_var() >= 0)
        throw std::invalid_argument("expand_rational: needs total-degree truncation");
    MultiSeries::Mono zero(nv, 0);
    i64 c0 = den.at(zero);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("expand_rational: denominator constant term must be +-1");
    // den = c0 (1 - u) with val(u) >= 1, so 1/den = c0 (1 + u + u^2 + ...).
    MultiSeries u(nv, order, den.trunc_var());
    if (c0 == 1)
        u = MultiSeries::constant(nv, order, 1, den.trunc_var()) - den;
    else
        u = MultiSeries::constant(nv, order, 1, den.trunc_var()) + den;
    MultiSeries inv = MultiSeries::constant(nv, order, 1, den.trunc_var());
    MultiSeries upow = MultiSeries::constant(nv, order, 1, den.trunc_var());
    for (int i = 1; i <= order; ++i) {
        upow = upow * u;
        if (upow.is_zero()) break;
        inv += upow;
    }
    MultiSeries r = num * inv;
    if (c0 == -1) {
        MultiSeries neg(nv, order, den.trunc_var());
        neg -= r;
        return neg;
    }
    return r;
}

// One term of a polynomial identity P(t, y1, y2, F) = 0: coefficient times
// t^te y1^y1e y2^y2e F^fe. Univariate equations use y1e = y2e = 0.
struct EquationTerm {
    i64 coef;
    int t_e;
    int y1_e;
    int y2_e;
    int f_e;
};

// Check P(t, F) == 0 mod t^{N+1} for a univariate Hilbert series.
// Returns the first failing order, or nullopt on success.
inline std::optional<int> check_poly_equation(const std::vector<EquationTerm>& terms,
                                              const TruncSeries& F, int N) {
    TruncSeries acc(N);
    std::vector<TruncSeries> fpow{TruncSeries(N)};
    fpow[0].c[0] = 1;
    for (const auto& tm : terms) {
        while (static_cast<int>(fpow.size()) <= tm.f_e) fpow.push_back(fpow.back() * F);
        TruncSeries term = fpow[tm.f_e];
        TruncSeries shifted(N);
        for (int n = 0; n + tm.t_e <= N; ++n)
            shifted.c[n + tm.t_e] = checked_add(shifted.c[n + tm.t_e], checked_mul(tm.coef, term.c[n]));
        acc += shifted;
    }
    for (int n = 0; n <= N; ++n)
        if (acc.c[n] != 0) return n;
    return std::nullopt;
}

// Same check for a refined series over variables (t, y1, y2), truncated by
// the degree in t.
inline std::optional<int> check_poly_equation_refined(const std::vector<EquationTerm>& terms,
                                                      const MultiSeries& F, int N) {
    MultiSeries acc(3, N, 0);
    std::vector<MultiSeries> fpow{MultiSeries::constant(3, N, 1, 0)};
    for (const auto& tm : terms) {
        while (static_cast<int>(fpow.size()) <= tm.f_e) fpow.push_back(fpow.back() * F);
        MultiSeries mono(3, N, 0);
        mono.add_term({tm.t_e, tm.y1_e, tm.y2_e}, tm.coef);
        acc += mono * fpow[tm.f_e];
    }
    if (acc.is_zero()) return std::nullopt;
    int worst = N + 1;
    for (const auto& [m, v] : acc.coeffs())
        if (v != 0) worst = std::min(worst, m[0]);
    return worst;
}

}  // namespace nco

#endif
