#include "qmds/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "qmds/numth.hpp"

namespace qmds {

const char* mds_result_name(MdsResult r) noexcept {
    switch (r) {
        case MdsResult::proven_mds: return "proven_mds";
        case MdsResult::proven_not_mds: return "proven_not_mds";
        case MdsResult::sampled: return "sampled";
    }
    return "sampled";
}

DistanceProof MdsReport::to_proof() const {
    DistanceProof p;
    if (result == MdsResult::proven_mds) {
        p.kind = ProofKind::minor_exhaustive;
        p.count = subsets_checked;
    } else if (result == MdsResult::sampled) {
        p.kind = ProofKind::minor_sampled;
        p.count = subsets_checked;
        p.seed = seed;
    }
    return p;
}

namespace {

// Engine-level draws only; std::uniform_int_distribution is not portable
// across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

  private:
    std::mt19937_64 eng_;
};

// Rank-deficiency test of the delta x delta minor picked by `cols`, by exact
// Gaussian elimination into scratch storage.
bool minor_singular(const Field& f, const ParityCheckMatrix& h, const std::vector<long long>& cols,
                    std::vector<felt>& scratch) {
    const long long d = static_cast<long long>(cols.size());
    scratch.resize(static_cast<std::size_t>(d * d));
    for (long long r = 0; r < d; ++r)
        for (long long c = 0; c < d; ++c) scratch[static_cast<std::size_t>(r * d + c)] = h.at(r, cols[static_cast<std::size_t>(c)]);

    for (long long col = 0; col < d; ++col) {
        long long pivot = -1;
        for (long long r = col; r < d; ++r)
            if (scratch[static_cast<std::size_t>(r * d + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return true;
        if (pivot != col)
            for (long long c = col; c < d; ++c)
                std::swap(scratch[static_cast<std::size_t>(pivot * d + c)], scratch[static_cast<std::size_t>(col * d + c)]);
        const felt inv_p = f.inv(scratch[static_cast<std::size_t>(col * d + col)]);
        for (long long r = col + 1; r < d; ++r) {
            const felt factor = f.mul(scratch[static_cast<std::size_t>(r * d + col)], inv_p);
            if (factor == 0) continue;
            for (long long c = col; c < d; ++c)
                scratch[static_cast<std::size_t>(r * d + c)] =
                    f.sub(scratch[static_cast<std::size_t>(r * d + c)], f.mul(factor, scratch[static_cast<std::size_t>(col * d + c)]));
        }
    }
    return false;
}

bool next_combination(std::vector<long long>& c, long long n) {
    const long long k = static_cast<long long>(c.size());
    long long i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (long long j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

}  // namespace

MdsReport scan_minors(const Field& f, const ParityCheckMatrix& h, unsigned long long budget,
                      std::uint64_t seed) {
    const long long n = h.cols;
    const long long delta = h.rows;
    MdsReport report;
    report.seed = seed;
    std::vector<felt> scratch;

    if (delta == 0) {
        report.result = MdsResult::proven_mds;
        report.exhaustive = true;
        report.subsets_checked = 1;  // the empty minor
        return report;
    }

    const unsigned long long total = binom_capped(static_cast<int>(n), static_cast<int>(delta), budget);
    if (total <= budget) {
        report.exhaustive = true;
        std::vector<long long> cols(static_cast<std::size_t>(delta));
        std::iota(cols.begin(), cols.end(), 0);
        do {
            ++report.subsets_checked;
            if (minor_singular(f, h, cols, scratch)) {
                // Lexicographic iteration makes this the smallest witness.
                report.result = MdsResult::proven_not_mds;
                report.witness = cols;
                return report;
            }
        } while (next_combination(cols, n));
        report.result = MdsResult::proven_mds;
        return report;
    }

    Rng rng(seed);
    std::vector<long long> pool(static_cast<std::size_t>(n));
    std::vector<long long> cols(static_cast<std::size_t>(delta));
    std::optional<std::vector<long long>> witness;
    for (unsigned long long t = 0; t < budget; ++t) {
        std::iota(pool.begin(), pool.end(), 0);
        for (long long i = 0; i < delta; ++i) {
            const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            cols[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
        }
        std::sort(cols.begin(), cols.end());
        ++report.subsets_checked;
        if (minor_singular(f, h, cols, scratch) && (!witness || cols < *witness)) witness = cols;
    }
    if (witness) {
        report.result = MdsResult::proven_not_mds;
        report.witness = *witness;
    } else {
        report.result = MdsResult::sampled;
    }
    return report;
}

MdsReport mds_check(const ConstacyclicCode& code, unsigned long long budget, std::uint64_t seed) {
    return scan_minors(*code.field, parity_check(code), budget, seed);
}

CrosscheckReport containment_crosscheck(const std::shared_ptr<const Field>& field, const CodeShape& shape,
                                    long long trials, std::uint64_t seed) {
    if (trials < 1) fail(errc::invalid_argument, "trials must be >= 1");
    CrosscheckReport report{shape.q, shape.r, trials, seed, 0, 0};
    Rng rng(seed);
    const std::vector<long long> omega = omega_set(shape);
    std::vector<long long> pool;
    for (long long t = 0; t < trials; ++t) {
        const auto size = static_cast<long long>(rng.below(static_cast<std::uint64_t>(shape.n + 1)));
        pool = omega;
        std::vector<long long> picked;
        picked.reserve(static_cast<std::size_t>(size));
        for (long long i = 0; i < size; ++i) {
            const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(shape.n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            picked.push_back(pool[static_cast<std::size_t>(i)]);
        }
        DefiningSet z = DefiningSet::custom(shape, std::move(picked));
        const bool by_sets = dual_containing(z);
        const ConstacyclicCode code = build_code(field, std::move(z));
        const bool by_divisibility = contains_dual_by_divisibility(code);
        const bool by_gram = gram_check(code);
        if (by_sets != by_divisibility || by_sets != by_gram)
            fail(errc::equivalence_violation,
                 "containment routes disagree (sets=" + std::to_string(by_sets) +
                     ", divisibility=" + std::to_string(by_divisibility) + ", gram=" + std::to_string(by_gram) +
                     ") on Z = " + elements_to_string(code.zset.elements));
        ++(by_sets ? report.true_cases : report.false_cases);
    }
    return report;
}

std::vector<FamilyVerification> verify_family(long long q, Family family, unsigned long long budget,
                                              std::uint64_t seed) {
    long long p = 0;
    int m = 0;
    if (!prime_power(q, &p, &m) || p == 2)
        fail(errc::invalid_q, "q = " + std::to_string(q) + " is not an odd prime power");
    const auto field = Field::build(static_cast<int>(p), m);

    std::vector<FamilyVerification> out;
    for (const QuantumCodeParams& rec : enumerate_codes(q)) {
        if (rec.family != family) continue;
        auto [code, params] = family == Family::even ? family_even(field, rec.r, rec.d)
                                                     : family_odd(field, rec.r, rec.d);
        MdsReport report = mds_check(code, budget, seed);
        params.verified.distance_proof = report.to_proof();
        out.push_back({std::move(params), std::move(report)});
    }
    return out;
}

}  // namespace qmds
