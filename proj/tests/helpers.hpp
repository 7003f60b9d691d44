// Test-side oracles, deliberately independent of the implementation paths
// they are used to check.

#ifndef QMDS_TESTS_HELPERS_HPP
#define QMDS_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qmds/field.hpp"

namespace testutil {

// --- naive GF(p)[x] arithmetic on int vectors (little-endian) -----------

inline std::vector<int> naive_polymod(std::vector<long long> a, const std::vector<int>& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= deg; --i) {
        const long long top = ((a[i] % p) + p) % p;
        if (!top) continue;
        for (int j = 0; j <= deg; ++j) a[i - deg + j] -= top * f[j];
    }
    std::vector<int> out(deg, 0);
    for (int i = 0; i < deg && i < static_cast<int>(a.size()); ++i) out[i] = static_cast<int>(((a[i] % p) + p) % p);
    return out;
}

inline std::vector<int> naive_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& f, int p) {
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
    return naive_polymod(std::move(prod), f, p);
}

inline bool naive_is_one(const std::vector<int>& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

// Multiplicative order of the residue x in GF(p)[x]/(f), or 0 if x never
// returns to 1 within `limit` steps (e.g. when x is not a unit).
inline long long naive_order_of_x(const std::vector<int>& f, int p, long long limit) {
    const int deg = static_cast<int>(f.size()) - 1;
    std::vector<int> x(deg, 0);
    if (deg > 1) x[1] = 1;
    std::vector<int> cur = x;  // x^e at the top of iteration e
    for (long long e = 1; e <= limit; ++e) {
        if (naive_is_one(cur)) return e;
        cur = naive_mulmod(cur, x, f, p);
    }
    return 0;
}

// Exhaustive scan over monic degree-`deg` polynomials in lexicographic order
// of the little-endian coefficient vector; returns the first one for which x
// has multiplicative order exactly p^deg - 1.
inline std::vector<int> naive_lex_first_primitive(int p, int deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    const long long group = count - 1;
    std::vector<int> f(deg + 1, 0);
    f[deg] = 1;
    for (long long counter = 0; counter < count; ++counter) {
        long long v = counter;
        for (int i = deg - 1; i >= 0; --i) {
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        if (f[0] == 0) continue;
        if (naive_order_of_x(f, p, group) == group) return f;
    }
    return {};
}

// --- exact rank over GF(q^2) via plain row reduction ---------------------

inline long long naive_rank(const qmds::Field& f, std::vector<qmds::felt> a, long long rows, long long cols) {
    long long rank = 0;
    for (long long c = 0; c < cols && rank < rows; ++c) {
        long long pivot = -1;
        for (long long r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r * cols + c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (long long j = 0; j < cols; ++j)
            std::swap(a[static_cast<std::size_t>(pivot * cols + j)], a[static_cast<std::size_t>(rank * cols + j)]);
        const qmds::felt inv = f.inv(a[static_cast<std::size_t>(rank * cols + c)]);
        for (long long r = rank + 1; r < rows; ++r) {
            const qmds::felt factor = f.mul(a[static_cast<std::size_t>(r * cols + c)], inv);
            if (factor == 0) continue;
            for (long long j = c; j < cols; ++j)
                a[static_cast<std::size_t>(r * cols + j)] = f.sub(
                    a[static_cast<std::size_t>(r * cols + j)], f.mul(factor, a[static_cast<std::size_t>(rank * cols + j)]));
        }
        ++rank;
    }
    return rank;
}

// --- deterministic draws for tests ---------------------------------------

class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }
    qmds::felt nonzero_element(const qmds::Field& f) {
        return f.omega_pow(static_cast<long long>(below(static_cast<std::uint64_t>(f.group_order()))));
    }
    qmds::felt element(const qmds::Field& f) {
        return static_cast<qmds::felt>(below(static_cast<std::uint64_t>(f.order())));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace testutil

#endif
