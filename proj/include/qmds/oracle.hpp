#ifndef QMDS_ORACLE_HPP
#define QMDS_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "qmds/quantum.hpp"

namespace qmds {

enum class MdsResult { proven_mds, proven_not_mds, sampled };

const char* mds_result_name(MdsResult r) noexcept;

struct MdsReport {
    MdsResult result = MdsResult::sampled;
    bool exhaustive = false;
    unsigned long long subsets_checked = 0;
    std::vector<long long> witness;  // lexicographically smallest singular column set, when not MDS
    std::uint64_t seed = 0;          // meaningful for sampled runs

    DistanceProof to_proof() const;
};

// Scans delta-subsets of the matrix columns for singular minors, in
// lexicographic order when C(cols, delta) <= budget (exhaustive), otherwise
// `budget` seeded uniform samples. Deterministic for fixed (budget, seed).
MdsReport scan_minors(const Field& f, const ParityCheckMatrix& h, unsigned long long budget,
                      std::uint64_t seed);

// Exact distance certificate for an [n, n-delta] code: every delta-subset of
// parity-check columns nonsingular proves d = delta + 1 (a lighter codeword
// would force delta dependent columns, and Singleton caps d at delta + 1); a
// singular minor is a witness that the code is not MDS.
MdsReport mds_check(const ConstacyclicCode& code, unsigned long long budget, std::uint64_t seed);

struct CrosscheckReport {
    long long q = 0;
    long long r = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long true_cases = 0;
    long long false_cases = 0;
};

// Draws `trials` random subsets of Omega (sizes uniform in [0, n]) and checks
// that the defining-set criterion, generator divisibility, and the Gram
// membership test all agree on dual containment. A disagreement throws
// errc::equivalence_violation naming the witness set.
CrosscheckReport containment_crosscheck(const std::shared_ptr<const Field>& field, const CodeShape& shape,
                                    long long trials, std::uint64_t seed);

struct FamilyVerification {
    QuantumCodeParams params;
    MdsReport proof;
};

// Enumerates one family for q and runs mds_check on every classical
// precursor. A proven_not_mds entry falsifies the construction for that
// instance; callers must treat it as a hard failure.
std::vector<FamilyVerification> verify_family(long long q, Family family, unsigned long long budget,
                                              std::uint64_t seed);

}  // namespace qmds

#endif
