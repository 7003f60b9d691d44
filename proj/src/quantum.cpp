#include "qmds/quantum.hpp"

#include <algorithm>

#include "qmds/numth.hpp"

namespace qmds {

const char* family_tag(Family f) noexcept { return f == Family::even ? "even" : "odd"; }

bool QuantumCodeParams::new_range() const {
    const long long half = (q + 1) / 2;
    return family == Family::even ? (r != 2 && d > half) : d >= half;
}

long long d_max(Family family, const CodeShape& shape) {
    return family == Family::even ? (shape.q + 1) / 2 + shape.lambda - 1
                                  : (shape.q + 1) / 2 + shape.lambda / 2 - 1;
}

QuantumCodeParams quantum_from_classical(const ConstacyclicCode& code, long long proven_d) {
    if (!contains_dual(code))
        fail(errc::not_dual_containing, "C does not contain its Hermitian dual; construction inapplicable");
    if (proven_d < 1 || proven_d > code.shape.n - code.k + 1)
        fail(errc::invalid_argument, "proven distance exceeds the classical Singleton bound");
    QuantumCodeParams p;
    p.q = code.shape.q;
    p.n = code.shape.n;
    p.k = 2 * code.k - code.shape.n;
    p.d = proven_d;
    p.family = code.shape.r % 2 == 0 ? Family::even : Family::odd;
    p.lambda = code.shape.lambda;
    p.r = code.shape.r;
    p.delta = code.shape.n - code.k;
    p.defining_set = code.zset.elements;
    p.verified.dual_containing = true;
    p.verified.bch = bch_bound(code);
    return p;
}

namespace {

std::pair<ConstacyclicCode, QuantumCodeParams> build_family(const std::shared_ptr<const Field>& field,
                                                            long long r, long long d, Family family) {
    const CodeShape shape = CodeShape::make(field->q(), r);
    if (d < 2 || d > d_max(family, shape))
        fail(errc::d_out_of_range, "d = " + std::to_string(d) + " outside [2, " +
                                       std::to_string(d_max(family, shape)) + "]");
    DefiningSet z = family == Family::even ? defining_set_even(shape, d - 1) : defining_set_odd(shape, d - 1);
    ConstacyclicCode code = build_code(field, std::move(z));
    QuantumCodeParams params = quantum_from_classical(code, d);  // throws if containment fails
    return {std::move(code), std::move(params)};
}

}  // namespace

std::pair<ConstacyclicCode, QuantumCodeParams> family_even(const std::shared_ptr<const Field>& field,
                                                           long long r, long long d) {
    return build_family(field, r, d, Family::even);
}

std::pair<ConstacyclicCode, QuantumCodeParams> family_odd(const std::shared_ptr<const Field>& field,
                                                          long long r, long long d) {
    return build_family(field, r, d, Family::odd);
}

namespace {

std::shared_ptr<const Field> field_for(long long q) {
    long long p = 0;
    int m = 0;
    if (!prime_power(q, &p, &m) || p == 2)
        fail(errc::invalid_q, "q = " + std::to_string(q) + " is not an odd prime power");
    return Field::build(static_cast<int>(p), m);
}

}  // namespace

std::pair<ConstacyclicCode, QuantumCodeParams> family_even(long long q, long long r, long long d) {
    return family_even(field_for(q), r, d);
}

std::pair<ConstacyclicCode, QuantumCodeParams> family_odd(long long q, long long r, long long d) {
    return family_odd(field_for(q), r, d);
}

std::vector<QuantumCodeParams> enumerate_codes(long long q) {
    if (!is_odd_prime_power(q) || q < 3)
        fail(errc::invalid_q, "q = " + std::to_string(q) + " is not an odd prime power");
    std::vector<QuantumCodeParams> out;
    for (long long r : divisors(q + 1)) {
        Family family;
        if (r % 2 == 0 && r != q + 1)
            family = Family::even;
        else if (r % 2 == 1 && r >= 3)
            family = Family::odd;
        else
            continue;
        const CodeShape shape = CodeShape::make(q, r);
        for (long long d = 2; d <= d_max(family, shape); ++d) {
            DefiningSet z = family == Family::even ? defining_set_even(shape, d - 1)
                                                   : defining_set_odd(shape, d - 1);
            QuantumCodeParams p;
            p.q = q;
            p.n = shape.n;
            p.k = shape.n - 2 * (d - 1);
            p.d = d;
            p.family = family;
            p.lambda = shape.lambda;
            p.r = r;
            p.delta = d - 1;
            p.verified.dual_containing = dual_containing(z);
            p.verified.bch = bch_run_bound(z);
            p.defining_set = std::move(z.elements);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), [](const QuantumCodeParams& a, const QuantumCodeParams& b) {
        return std::tie(a.n, a.d) < std::tie(b.n, b.d);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QuantumCodeParams& a, const QuantumCodeParams& b) {
                              return std::tie(a.n, a.d) == std::tie(b.n, b.d);
                          }),
              out.end());
    return out;
}

}  // namespace qmds
