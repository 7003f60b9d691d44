// Acceptance suite: end-to-end checks of the headline claims, one line per
// criterion. Exits nonzero if any criterion fails its stated budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmds/numth.hpp"
#include "qmds/oracle.hpp"
#include "run_cli.hpp"

using namespace qmds;
using testutil::read_file;
using testutil::run_command;

namespace {

const std::string cli = QMDS_CLI_PATH;
const std::string golden = QMDS_GOLDEN_DIR;

struct Criterion {
    std::string label;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

bool check(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// --- 1: byte-exact table reproduction ------------------------------------

bool table_reproduction(std::string& detail) {
    bool ok = true;
    const std::vector<std::pair<std::string, std::string>> cases{
        {" enumerate --q 23 --family even --new-only --format text", "/table1_q23_even_new.txt"},
        {" enumerate --q 17 --family odd --new-only --format text", "/table2_q17_odd_new.txt"},
        {" enumerate --q 29 --family odd --new-only --format text", "/table3_q29_odd_new.txt"},
        {" enumerate --q 17 --family odd --new-only --format csv", "/table2_q17_odd_new.csv"},
    };
    for (const auto& [args, file] : cases) {
        const auto run = run_command(cli + args);
        ok &= check(run.exit_code == 0, detail, "exit code for" + args);
        const std::string want = read_file(golden + file);
        ok &= check(!want.empty() && run.out == want, detail, "golden mismatch for" + args);
    }
    // the four q=19, r=4 codes: [[90,70,11]] .. [[90,64,14]]
    for (long long d = 11; d <= 14; ++d) {
        const auto run = run_command(cli + " build --q 19 --r 4 --d " + std::to_string(d));
        ok &= check(run.exit_code == 0, detail, "build --q 19 --r 4 failed");
        const auto j = nlohmann::json::parse(run.out, nullptr, false);
        ok &= check(!j.is_discarded() && j["n"] == 90 && j["k"] == 90 - 2 * d + 2 && j["d"] == d &&
                        j["checks"]["dual_containing"] == true && j["checks"]["mds"] == true,
                    detail, "q=19 record for d=" + std::to_string(d));
    }
    return ok;
}

// --- 2: three-way dual containment, exhaustive to q = 49 ------------------

bool containment_three_ways(std::string& detail) {
    bool ok = true;
    long long instances = 0;
    for (long long q = 3; q <= 49; ++q) {
        if (!is_odd_prime_power(q)) continue;
        long long p;
        int m;
        prime_power(q, &p, &m);
        const auto field = Field::build(static_cast<int>(p), m);
        for (long long r : divisors(q + 1)) {
            const bool even_ok = r % 2 == 0 && r != q + 1;
            const bool odd_ok = r % 2 == 1 && r >= 3;
            if (!even_ok && !odd_ok) continue;
            const CodeShape s = CodeShape::make(q, r);
            const long long dmax = even_ok ? delta_max_even(s) : delta_max_odd(s);
            for (long long delta = 1; delta <= dmax; ++delta) {
                const DefiningSet z = even_ok ? defining_set_even(s, delta) : defining_set_odd(s, delta);
                const ConstacyclicCode code = build_code(field, z);
                const bool a = dual_containing(code.zset);
                const bool b = contains_dual_by_divisibility(code);
                const bool c = gram_check(code);
                ++instances;
                if (!(a && b && c)) {
                    ok = check(false, detail,
                               "containment failed at q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                   " delta=" + std::to_string(delta));
                }
            }
        }
    }
    ok &= check(instances > 1000, detail, "instance sweep unexpectedly small");
    return ok;
}

// --- 3: exact distance proofs via minor exhaustion -------------------------

bool distance_proofs(std::string& detail) {
    bool ok = true;
    long long proven = 0;
    bool covered_q11_n40_d6 = false;
    for (long long q : {5, 7, 11, 13}) {
        const unsigned long long budget = q == 11 ? 4000000ull : 1000000ull;
        long long p;
        int m;
        prime_power(q, &p, &m);
        const auto field = Field::build(static_cast<int>(p), m);
        for (const auto& rec : enumerate_codes(q)) {
            if (binom_capped(static_cast<int>(rec.n), static_cast<int>(rec.delta), budget) > budget) continue;
            auto [code, params] = rec.family == Family::even ? family_even(field, rec.r, rec.d)
                                                             : family_odd(field, rec.r, rec.d);
            const MdsReport report = mds_check(code, budget, 1);
            const bool good = report.result == MdsResult::proven_mds && report.exhaustive &&
                              rec.d == rec.delta + 1 && rec.d == code.shape.n - code.k + 1;
            if (!good)
                ok = check(false, detail,
                           "distance proof failed at q=" + std::to_string(q) + " r=" + std::to_string(rec.r) +
                               " delta=" + std::to_string(rec.delta));
            ++proven;
            if (q == 11 && rec.n == 40 && rec.delta == 6) covered_q11_n40_d6 = true;
        }
    }
    ok &= check(covered_q11_n40_d6, detail, "q=11 n=40 delta=6 not covered by the raised budget");
    ok &= check(proven >= 40, detail, "too few instances proven");
    return ok;
}

// --- 4: quantum Singleton equality and d-range maxima, q <= 100 ------------

bool singleton_accounting(std::string& detail) {
    bool ok = true;
    for (long long q = 3; q <= 100; ++q) {
        if (!is_odd_prime_power(q)) continue;
        std::vector<std::pair<std::pair<long long, Family>, long long>> observed_max;
        for (const auto& rec : enumerate_codes(q)) {
            if (rec.k != rec.n - 2 * rec.d + 2 || !rec.mds())
                ok = check(false, detail, "Singleton violated at q=" + std::to_string(q));
            auto key = std::pair(rec.r, rec.family);
            bool found = false;
            for (auto& [k2, v] : observed_max)
                if (k2 == key) {
                    v = std::max(v, rec.d);
                    found = true;
                }
            if (!found) observed_max.push_back({key, rec.d});
        }
        for (const auto& [key, dmax_seen] : observed_max) {
            const auto [r, family] = key;
            const CodeShape s = CodeShape::make(q, r);
            const long long expected = family == Family::even ? (q + 1) / 2 + s.lambda - 1
                                                              : (q + 1) / 2 + s.lambda / 2 - 1;
            if (dmax_seen != expected || expected != d_max(family, s))
                ok = check(false, detail,
                           "d-range maximum mismatch at q=" + std::to_string(q) + " r=" + std::to_string(r));
        }
    }
    return ok;
}

// --- 5: randomized equivalence oracle --------------------------------------

bool randomized_oracle(std::string& detail) {
    bool ok = true;
    const std::uint64_t seed = 42;
    long long total_trials = 0;
    for (long long q : {5, 7, 9, 13}) {
        long long p;
        int m;
        prime_power(q, &p, &m);
        const auto field = Field::build(static_cast<int>(p), m);
        const auto rs = divisors(q + 1);
        const long long per_shape = 2500 / static_cast<long long>(rs.size());
        long long trues = 0, falses = 0;
        for (long long r : rs) {
            try {
                const CrosscheckReport rep =
                    containment_crosscheck(field, CodeShape::make(q, r), per_shape, seed + static_cast<std::uint64_t>(r));
                trues += rep.true_cases;
                falses += rep.false_cases;
                total_trials += rep.trials;
            } catch (const Error& e) {
                return check(false, detail, std::string("equivalence violation: ") + e.what());
            }
        }
        ok &= check(trues >= 100, detail, "fewer than 100 true cases at q=" + std::to_string(q));
        ok &= check(falses >= 100, detail, "fewer than 100 false cases at q=" + std::to_string(q));
    }
    ok &= check(total_trials == 10000, detail, "trial count is not 10^4");
    return ok;
}

// --- 6: property suites in isolation ---------------------------------------

bool property_suites(std::string& detail) {
    const auto run = run_command(std::string(QMDS_PROPERTY_TESTS_PATH));
    return check(run.exit_code == 0, detail, "property test binary failed");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"golden table reproduction (q = 23 even, 17/29 odd, 19 builds), byte-exact", 5.0, table_reproduction},
        {"dual containment three ways, all families, q <= 49", 60.0, containment_three_ways},
        {"exact minimum-distance proofs by minor exhaustion, q in {5,7,11,13}", 600.0, distance_proofs},
        {"quantum Singleton equality and d-range maxima, q <= 100", 600.0, singleton_accounting},
        {"randomized dual-containment oracle, 10^4 sets, q in {5,7,9,13}", 120.0, randomized_oracle},
        {"property suites pass in isolation", 600.0, property_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].limit_seconds) {
            ok = false;
            if (detail.empty()) detail = "exceeded time limit";
        }
        std::printf("[%s] criterion %zu: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), secs, detail.empty() ? "" : "; ", detail.c_str());
        std::fflush(stdout);
        failures += !ok;
    }
    return failures == 0 ? 0 : 1;
}
