#include "qmds/defsets.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "qmds/numth.hpp"

namespace qmds {

CodeShape CodeShape::make(long long q, long long r) {
    if (!is_odd_prime_power(q) || q < 3)
        fail(errc::invalid_q, "q = " + std::to_string(q) + " is not an odd prime power");
    if (r < 1 || (q + 1) % r != 0)
        fail(errc::invalid_argument, "r = " + std::to_string(r) + " does not divide q+1 = " + std::to_string(q + 1));
    CodeShape s;
    s.q = q;
    s.r = r;
    s.lambda = (q + 1) / r;
    s.n = s.lambda * (q - 1);
    s.rn = q * q - 1;
    assert(s.r * s.n == s.rn);
    assert(std::gcd(s.q, s.n) == 1);
    return s;
}

const char* family_name(SetFamily f) noexcept {
    switch (f) {
        case SetFamily::even: return "even";
        case SetFamily::odd: return "odd";
        case SetFamily::custom: return "custom";
    }
    return "custom";
}

DefiningSet DefiningSet::custom(const CodeShape& shape, std::vector<long long> elements) {
    for (auto& z : elements) z = mod_reduce(z, shape.rn);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (long long z : elements)
        if (z % shape.r != 1 % shape.r)
            fail(errc::elements_outside_omega,
                 "element " + std::to_string(z) + " is not of the form 1 + i*r mod rn");
    DefiningSet out;
    out.shape = shape;
    out.elements = std::move(elements);
    out.family = SetFamily::custom;
    out.delta = static_cast<long long>(out.elements.size());
    return out;
}

std::vector<long long> cyclotomic_coset(long long j, long long modulus, long long multiplier) {
    assert(modulus >= 1);
    std::vector<long long> out;
    long long cur = mod_reduce(j, modulus);
    const long long start = cur;
    do {
        out.push_back(cur);
        cur = mod_reduce(cur * mod_reduce(multiplier, modulus), modulus);
    } while (cur != start);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> omega_set(const CodeShape& shape) {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(shape.n));
    for (long long i = 0; i < shape.n; ++i) out.push_back(mod_reduce(1 + i * shape.r, shape.rn));
    std::sort(out.begin(), out.end());
    return out;
}

long long delta_max_even(const CodeShape& shape) { return (shape.r + 2) * (shape.q + 1) / (2 * shape.r) - 2; }
long long delta_max_odd(const CodeShape& shape) { return (shape.r + 1) * (shape.q + 1) / (2 * shape.r) - 2; }

namespace {

// Shared body of the two constructions: base = 1 + offset*(q+1), then delta
// consecutive steps of r. The i-indices cover [offset*lambda, offset*lambda + delta - 1].
DefiningSet arithmetic_run(const CodeShape& shape, long long offset, long long delta, SetFamily family) {
    std::vector<long long> elements;
    elements.reserve(static_cast<std::size_t>(delta));
    const long long base = 1 + offset * (shape.q + 1);
    for (long long j = 0; j < delta; ++j) elements.push_back(mod_reduce(base + j * shape.r, shape.rn));
    DefiningSet out = DefiningSet::custom(shape, std::move(elements));
    assert(out.delta == delta && "run must not collide with itself mod rn");
    out.family = family;
    return out;
}

}  // namespace

DefiningSet defining_set_even(const CodeShape& shape, long long delta) {
    if (shape.r % 2 != 0) fail(errc::odd_r, "the even-r construction needs r even, got r = " + std::to_string(shape.r));
    if (shape.r == shape.q + 1) fail(errc::r_too_large, "r = q+1 is excluded from the even-r construction");
    if (delta < 1 || delta > delta_max_even(shape))
        fail(errc::delta_out_of_range, "delta = " + std::to_string(delta) + " outside [1, " +
                                           std::to_string(delta_max_even(shape)) + "]");
    return arithmetic_run(shape, (shape.r - 2) / 2, delta, SetFamily::even);
}

DefiningSet defining_set_odd(const CodeShape& shape, long long delta) {
    if (shape.r % 2 == 0) fail(errc::even_r, "the odd-r construction needs r odd, got r = " + std::to_string(shape.r));
    if (shape.r == 1) fail(errc::r_one, "r = 1 is excluded from the odd-r construction");
    if (delta < 1 || delta > delta_max_odd(shape))
        fail(errc::delta_out_of_range, "delta = " + std::to_string(delta) + " outside [1, " +
                                           std::to_string(delta_max_odd(shape)) + "]");
    return arithmetic_run(shape, (shape.r - 1) / 2, delta, SetFamily::odd);
}

std::vector<long long> neg_q_set(const DefiningSet& z) {
    std::vector<long long> out;
    out.reserve(z.elements.size());
    const long long neg_q = mod_reduce(-z.shape.q, z.shape.rn);
    for (long long e : z.elements) out.push_back(mod_reduce(e * neg_q, z.shape.rn));
    std::sort(out.begin(), out.end());
    return out;
}

bool dual_containing(const DefiningSet& z) {
    const std::vector<long long> image = neg_q_set(z);
    std::vector<long long> both;
    std::set_intersection(z.elements.begin(), z.elements.end(), image.begin(), image.end(),
                          std::back_inserter(both));
    return both.empty();
}

DefiningSet dual_defining_set(const DefiningSet& z) {
    std::vector<long long> out;
    const long long neg_q = mod_reduce(-z.shape.q, z.shape.rn);
    for (long long w : omega_set(z.shape)) {
        const long long img = mod_reduce(w * neg_q, z.shape.rn);
        if (!std::binary_search(z.elements.begin(), z.elements.end(), img)) out.push_back(w);
    }
    return DefiningSet::custom(z.shape, std::move(out));
}

long long bch_run_bound(const DefiningSet& z) {
    if (z.elements.empty()) return 1;
    const long long n = z.shape.n;
    std::vector<long long> idx;
    idx.reserve(z.elements.size());
    for (long long e : z.elements) idx.push_back(((e - 1) / z.shape.r) % n);
    std::sort(idx.begin(), idx.end());
    if (static_cast<long long>(idx.size()) == n) return n + 1;
    long long best = 1, run = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        run = (idx[i] == idx[i - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    // Cyclic wrap: a run ending at n-1 continues at 0.
    if (idx.front() == 0 && idx.back() == n - 1) {
        long long head = 1;
        while (head < static_cast<long long>(idx.size()) && idx[static_cast<std::size_t>(head)] == head) ++head;
        long long tail = 1;
        while (tail < static_cast<long long>(idx.size()) &&
               idx[idx.size() - 1 - static_cast<std::size_t>(tail)] == n - 1 - tail)
            ++tail;
        best = std::max(best, head + tail);
    }
    return best + 1;
}

std::string elements_to_string(const std::vector<long long>& elements) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) os << ',';
        os << elements[i];
    }
    os << '}';
    return os.str();
}

}  // namespace qmds
