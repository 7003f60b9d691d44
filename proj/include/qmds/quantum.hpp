#ifndef QMDS_QUANTUM_HPP
#define QMDS_QUANTUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qmds/hermitian.hpp"

namespace qmds {

enum class Family { even, odd };

const char* family_tag(Family f) noexcept;

enum class ProofKind { none, minor_exhaustive, minor_sampled };

struct DistanceProof {
    ProofKind kind = ProofKind::none;
    unsigned long long count = 0;  // subsets checked when sampled
    std::uint64_t seed = 0;
};

struct VerifyStatus {
    bool dual_containing = false;
    long long bch = 0;
    DistanceProof distance_proof;
};

// An [[n, k, d]]_q record with its construction provenance and verification
// status. For family-built records k = n - 2*delta and d = delta + 1, so the
// quantum Singleton bound k <= n - 2d + 2 is met with equality.
struct QuantumCodeParams {
    long long q = 0;
    long long n = 0;
    long long k = 0;
    long long d = 0;
    Family family = Family::even;
    long long lambda = 0;
    long long r = 0;
    long long delta = 0;
    std::vector<long long> defining_set;
    VerifyStatus verified;

    bool mds() const { return k == n - 2 * d + 2; }
    // Whether (r, d) falls in the range not covered by earlier constructions:
    // d > (q+1)/2 with r != 2 for the even family, d >= (q+1)/2 for the odd.
    bool new_range() const;
};

// Largest admissible d: (q+1)/2 + lambda - 1 (even) or (q+1)/2 + lambda/2 - 1 (odd).
long long d_max(Family family, const CodeShape& shape);

// Wraps a dual-containing [n, k, d]-classical code as [[n, 2k-n, proven_d]]_q.
// proven_d must be an actually certified distance, at most n - k + 1.
QuantumCodeParams quantum_from_classical(const ConstacyclicCode& code, long long proven_d);

// The two constructions: build the classical precursor with delta = d - 1,
// machine-check dual containment and the BCH floor, and wrap.
std::pair<ConstacyclicCode, QuantumCodeParams> family_even(const std::shared_ptr<const Field>& field,
                                                           long long r, long long d);
std::pair<ConstacyclicCode, QuantumCodeParams> family_odd(const std::shared_ptr<const Field>& field,
                                                          long long r, long long d);
std::pair<ConstacyclicCode, QuantumCodeParams> family_even(long long q, long long r, long long d);
std::pair<ConstacyclicCode, QuantumCodeParams> family_odd(long long q, long long r, long long d);

// Every admissible (r, d) of both families for this q: even divisors r != q+1
// and odd divisors r >= 3 of q+1, 2 <= d <= d_max. Sorted by (n, d). Checks
// are set-level only (no field construction), so this stays cheap for q <= 100.
std::vector<QuantumCodeParams> enumerate_codes(long long q);

}  // namespace qmds

#endif
