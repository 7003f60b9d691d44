#include "qmds.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "qmds/numth.hpp"
#include "qmds/serialize.hpp"

using namespace qmds;

struct qmds_field {
    std::shared_ptr<const Field> impl;
};

struct qmds_code {
    ConstacyclicCode impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_errmsg(char** errmsg, const std::string& s) {
    if (errmsg) *errmsg = dup_string(s);
}

qmds_status map_errc(errc code) {
    switch (code) {
        case errc::ok: return QMDS_OK;
        case errc::invalid_argument: return QMDS_ERR_INVALID_ARGUMENT;
        case errc::not_prime: return QMDS_ERR_NOT_PRIME;
        case errc::even_characteristic: return QMDS_ERR_EVEN_CHARACTERISTIC;
        case errc::division_by_zero: return QMDS_ERR_DIVISION_BY_ZERO;
        case errc::field_mismatch: return QMDS_ERR_FIELD_MISMATCH;
        case errc::length_mismatch: return QMDS_ERR_LENGTH_MISMATCH;
        case errc::message_too_long: return QMDS_ERR_MESSAGE_TOO_LONG;
        case errc::not_a_codeword: return QMDS_ERR_NOT_A_CODEWORD;
        case errc::odd_r: return QMDS_ERR_ODD_R;
        case errc::even_r: return QMDS_ERR_EVEN_R;
        case errc::r_one: return QMDS_ERR_R_ONE;
        case errc::r_too_large: return QMDS_ERR_R_TOO_LARGE;
        case errc::delta_out_of_range: return QMDS_ERR_DELTA_OUT_OF_RANGE;
        case errc::d_out_of_range: return QMDS_ERR_D_OUT_OF_RANGE;
        case errc::elements_outside_omega: return QMDS_ERR_ELEMENTS_OUTSIDE_OMEGA;
        case errc::not_dual_containing: return QMDS_ERR_NOT_DUAL_CONTAINING;
        case errc::dimension_contradiction: return QMDS_ERR_DIMENSION_CONTRADICTION;
        case errc::internal_divisibility_failure: return QMDS_ERR_INTERNAL_DIVISIBILITY_FAILURE;
        case errc::equivalence_violation: return QMDS_ERR_EQUIVALENCE_VIOLATION;
        case errc::invalid_q: return QMDS_ERR_INVALID_Q;
    }
    return QMDS_ERR_UNKNOWN;
}

template <typename Fn>
qmds_status guarded(char** errmsg, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        set_errmsg(errmsg, e.what());
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        return QMDS_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_errmsg(errmsg, e.what());
        return QMDS_ERR_UNKNOWN;
    }
}

Format to_format(qmds_format f) {
    switch (f) {
        case QMDS_FORMAT_CSV: return Format::csv;
        case QMDS_FORMAT_TEXT: return Format::text;
        default: return Format::json;
    }
}

std::shared_ptr<const Field> field_for_q(long long q) {
    long long p = 0;
    int m = 0;
    if (!prime_power(q, &p, &m) || p == 2)
        fail(errc::invalid_q, "q = " + std::to_string(q) + " is not an odd prime power");
    return Field::build(static_cast<int>(p), m);
}

std::vector<QuantumCodeParams> filtered_records(long long q, qmds_family family, bool new_only) {
    std::vector<QuantumCodeParams> records;
    for (auto& rec : enumerate_codes(q)) {
        if (family == QMDS_FAMILY_EVEN && rec.family != Family::even) continue;
        if (family == QMDS_FAMILY_ODD && rec.family != Family::odd) continue;
        if (new_only && !rec.new_range()) continue;
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace

extern "C" {

const char* qmds_status_name(qmds_status status) {
    switch (status) {
        case QMDS_OK: return "ok";
        case QMDS_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QMDS_ERR_NOT_PRIME: return "not_prime";
        case QMDS_ERR_EVEN_CHARACTERISTIC: return "even_characteristic";
        case QMDS_ERR_DIVISION_BY_ZERO: return "division_by_zero";
        case QMDS_ERR_FIELD_MISMATCH: return "field_mismatch";
        case QMDS_ERR_LENGTH_MISMATCH: return "length_mismatch";
        case QMDS_ERR_MESSAGE_TOO_LONG: return "message_too_long";
        case QMDS_ERR_NOT_A_CODEWORD: return "not_a_codeword";
        case QMDS_ERR_ODD_R: return "odd_r";
        case QMDS_ERR_EVEN_R: return "even_r";
        case QMDS_ERR_R_ONE: return "r_one";
        case QMDS_ERR_R_TOO_LARGE: return "r_too_large";
        case QMDS_ERR_DELTA_OUT_OF_RANGE: return "delta_out_of_range";
        case QMDS_ERR_D_OUT_OF_RANGE: return "d_out_of_range";
        case QMDS_ERR_ELEMENTS_OUTSIDE_OMEGA: return "elements_outside_omega";
        case QMDS_ERR_NOT_DUAL_CONTAINING: return "not_dual_containing";
        case QMDS_ERR_DIMENSION_CONTRADICTION: return "dimension_contradiction";
        case QMDS_ERR_INTERNAL_DIVISIBILITY_FAILURE: return "internal_divisibility_failure";
        case QMDS_ERR_EQUIVALENCE_VIOLATION: return "equivalence_violation";
        case QMDS_ERR_INVALID_Q: return "invalid_q";
        case QMDS_ERR_VERIFICATION_FAILED: return "verification_failed";
        case QMDS_ERR_NOMEM: return "nomem";
        case QMDS_ERR_UNKNOWN: break;
    }
    return "unknown";
}

const char* qmds_version(void) { return "1.0.0"; }

void qmds_string_free(char* s) { std::free(s); }

qmds_status qmds_field_create(int p, int m, qmds_field** out, char** errmsg) {
    if (!out) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&] {
        *out = new qmds_field{Field::build(p, m)};
        return QMDS_OK;
    });
}

void qmds_field_destroy(qmds_field* field) { delete field; }

long long qmds_field_q(const qmds_field* field) { return field ? field->impl->q() : 0; }

long long qmds_field_order(const qmds_field* field) { return field ? field->impl->order() : 0; }

qmds_status qmds_field_to_json(const qmds_field* field, char** out) {
    if (!field || !out) return QMDS_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        *out = dup_string(field_to_json(*field->impl).dump());
        return *out ? QMDS_OK : QMDS_ERR_NOMEM;
    });
}

qmds_status qmds_code_create(const qmds_field* field, long long r, long long d, qmds_code** out,
                             char** errmsg) {
    if (!field || !out) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&] {
        auto built = r % 2 == 0 ? family_even(field->impl, r, d) : family_odd(field->impl, r, d);
        *out = new qmds_code{std::move(built.first)};
        return QMDS_OK;
    });
}

qmds_status qmds_code_create_custom(const qmds_field* field, long long r, const long long* elements,
                                    size_t count, qmds_code** out, char** errmsg) {
    if (!field || !out || (count > 0 && !elements)) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&] {
        const CodeShape shape = CodeShape::make(field->impl->q(), r);
        DefiningSet z = DefiningSet::custom(shape, {elements, elements + count});
        *out = new qmds_code{build_code(field->impl, std::move(z))};
        return QMDS_OK;
    });
}

void qmds_code_destroy(qmds_code* code) { delete code; }

long long qmds_code_length(const qmds_code* code) { return code ? code->impl.shape.n : 0; }

long long qmds_code_dimension(const qmds_code* code) { return code ? code->impl.k : 0; }

long long qmds_code_bch_bound(const qmds_code* code) { return code ? bch_bound(code->impl) : 0; }

qmds_status qmds_code_contains_dual(const qmds_code* code, int* result) {
    if (!code || !result) return QMDS_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        *result = contains_dual(code->impl) ? 1 : 0;
        return QMDS_OK;
    });
}

qmds_status qmds_code_to_json(const qmds_code* code, char** out) {
    if (!code || !out) return QMDS_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        *out = dup_string(code_to_json(code->impl).dump());
        return *out ? QMDS_OK : QMDS_ERR_NOMEM;
    });
}

qmds_status qmds_code_mds_check(const qmds_code* code, uint64_t budget, uint64_t seed, char** report) {
    if (!code || !report) return QMDS_ERR_INVALID_ARGUMENT;
    return guarded(nullptr, [&] {
        const MdsReport r = mds_check(code->impl, budget, seed);
        nlohmann::json j{{"method", r.exhaustive ? "exhaustive" : "sampled"},
                         {"subsets_checked", r.subsets_checked},
                         {"result", mds_result_name(r.result)}};
        if (!r.witness.empty()) j["witness"] = r.witness;
        if (!r.exhaustive) j["seed"] = r.seed;
        *report = dup_string(j.dump());
        return *report ? QMDS_OK : QMDS_ERR_NOMEM;
    });
}

qmds_status qmds_enumerate(long long q, qmds_family family, int new_only, qmds_format format,
                           char** out, char** errmsg) {
    if (!out) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&] {
        *out = dup_string(render_enumeration(filtered_records(q, family, new_only != 0), to_format(format)));
        return *out ? QMDS_OK : QMDS_ERR_NOMEM;
    });
}

qmds_status qmds_build_record(long long q, long long r, long long d, qmds_format format, char** out,
                              char** errmsg) {
    if (!out) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&] {
        auto field = field_for_q(q);
        auto [code, params] = r % 2 == 0 ? family_even(field, r, d) : family_odd(field, r, d);
        *out = dup_string(render_build_record(code, params, to_format(format)));
        return *out ? QMDS_OK : QMDS_ERR_NOMEM;
    });
}

qmds_status qmds_verify(long long q, qmds_family family, uint64_t budget, uint64_t seed,
                        long long trials, qmds_format format, int* verified, char** out,
                        char** errmsg) {
    if (!out) return QMDS_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (verified) *verified = 0;
    return guarded(errmsg, [&] {
        std::vector<FamilyVerification> instances;
        for (Family fam : {Family::even, Family::odd}) {
            if (family == QMDS_FAMILY_EVEN && fam != Family::even) continue;
            if (family == QMDS_FAMILY_ODD && fam != Family::odd) continue;
            auto batch = verify_family(q, fam, budget, seed);
            std::move(batch.begin(), batch.end(), std::back_inserter(instances));
        }
        bool ok = true;
        for (const auto& inst : instances)
            if (inst.proof.result == MdsResult::proven_not_mds) ok = false;

        // One randomized equivalence crosscheck per shape touched above.
        std::vector<CrosscheckReport> crosschecks;
        if (trials > 0) {
            auto field = field_for_q(q);
            std::vector<long long> seen;
            for (const auto& inst : instances) {
                if (std::find(seen.begin(), seen.end(), inst.params.r) != seen.end()) continue;
                seen.push_back(inst.params.r);
                crosschecks.push_back(
                    containment_crosscheck(field, CodeShape::make(q, inst.params.r), trials, seed));
            }
        }
        if (verified) *verified = ok ? 1 : 0;
        *out = dup_string(render_verification(instances, crosschecks, ok, to_format(format)));
        if (!*out) return QMDS_ERR_NOMEM;
        return ok ? QMDS_OK : QMDS_ERR_VERIFICATION_FAILED;
    });
}

}  // extern "C"
