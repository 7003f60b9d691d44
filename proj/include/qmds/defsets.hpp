#ifndef QMDS_DEFSETS_HPP
#define QMDS_DEFSETS_HPP

#include <string>
#include <vector>

#include "qmds/error.hpp"

namespace qmds {

// The (q, r) shape shared by every code of length n = lambda*(q-1) with
// lambda*r = q+1. Here r*n = q^2 - 1 exactly, which is what makes every
// q^2-cyclotomic coset modulo rn a singleton.
struct CodeShape {
    long long q = 0;
    long long r = 0;
    long long lambda = 0;
    long long n = 0;
    long long rn = 0;

    // Validates q odd prime power and r a positive divisor of q+1.
    static CodeShape make(long long q, long long r);

    friend bool operator==(const CodeShape&, const CodeShape&) = default;
};

enum class SetFamily { even, odd, custom };

const char* family_name(SetFamily f) noexcept;

// A subset of Omega = {1 + i*r : 0 <= i <= n-1} (mod rn), stored sorted and
// reduced, identifying an eta-constacyclic code of dimension n - |elements|.
struct DefiningSet {
    CodeShape shape;
    std::vector<long long> elements;
    SetFamily family = SetFamily::custom;
    long long delta = 0;  // |elements|

    // Sorts, dedupes, reduces mod rn; rejects anything outside Omega.
    static DefiningSet custom(const CodeShape& shape, std::vector<long long> elements);
};

// Orbit of j under repeated multiplication by `multiplier`, modulo `modulus`.
std::vector<long long> cyclotomic_coset(long long j, long long modulus, long long multiplier);

// Omega = {1 + i*r mod rn : 0 <= i <= n-1}, sorted.
std::vector<long long> omega_set(const CodeShape& shape);

// Z = {1 + r(j-1) + ((r-2)/2)(q+1) : j = 1..delta}; requires r even, r != q+1,
// and 1 <= delta <= (r+2)(q+1)/(2r) - 2.
DefiningSet defining_set_even(const CodeShape& shape, long long delta);

// Z = {1 + r(j-1) + ((r-1)/2)(q+1) : j = 1..delta}; requires r odd, r >= 3,
// and 1 <= delta <= (r+1)(q+1)/(2r) - 2.
DefiningSet defining_set_odd(const CodeShape& shape, long long delta);

long long delta_max_even(const CodeShape& shape);
long long delta_max_odd(const CodeShape& shape);

// {-q*z mod rn : z in Z}, sorted. An involution on subsets of Omega.
std::vector<long long> neg_q_set(const DefiningSet& z);

// True iff Z and Z^{-q} are disjoint, i.e. the code contains its Hermitian dual.
bool dual_containing(const DefiningSet& z);

// Defining set of the Hermitian dual: {z in Omega : -q*z mod rn not in Z}.
DefiningSet dual_defining_set(const DefiningSet& z);

// 1 + the longest cyclic run of consecutive values among {(z-1)/r mod n}; a
// lower bound on the code's minimum distance.
long long bch_run_bound(const DefiningSet& z);

std::string elements_to_string(const std::vector<long long>& elements);

}  // namespace qmds

#endif
