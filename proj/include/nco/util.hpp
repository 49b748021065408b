#ifndef NCO_UTIL_HPP
#define NCO_UTIL_HPP

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nco {

using i64 = long long;

// Series coefficients are exact: any overflow aborts the computation
// instead of wrapping.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in series arithmetic");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in series arithmetic");
    return r;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Chunked parallel map-reduce over [0, n). With jobs <= 1 runs inline.
// The reducer sees chunk results in index order, so output is
// deterministic regardless of the thread count.
template <class Result, class Body, class Reduce>
void parallel_chunks(i64 n, int jobs, Body body, Reduce reduce) {
    if (jobs <= 1 || n < 1024) {
        Result acc{};
        body(0, n, acc);
        reduce(acc);
        return;
    }
    int nt = jobs;
    std::vector<Result> results(nt);
    std::vector<std::thread> threads;
    i64 chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        i64 lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, t, lo, hi] { body(lo, hi, results[t]); });
    }
    for (auto& th : threads) th.join();
    for (auto& r : results) reduce(r);
}

}  // namespace nco

#endif
