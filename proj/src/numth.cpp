#include "qmds/numth.hpp"

#include <algorithm>

namespace qmds {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        long long pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool prime_power(long long q, long long* p, int* m) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    if (p) *p = f[0].first;
    if (m) *m = f[0].second;
    return true;
}

bool is_odd_prime_power(long long q) {
    long long p;
    return prime_power(q, &p, nullptr) && p != 2;
}

unsigned long long binom_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);  // exact at each step
        if (c > cap) return cap + 1;
    }
    return static_cast<unsigned long long>(c);
}

long long mod_reduce(long long a, long long mod) {
    long long r = a % mod;
    return r < 0 ? r + mod : r;
}

}  // namespace qmds
