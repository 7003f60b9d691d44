#include "qmds/code.hpp"

#include <cassert>

#include "qmds/numth.hpp"

namespace qmds {

ConstacyclicCode build_code(std::shared_ptr<const Field> field, DefiningSet z) {
    if (!field || field->q() != z.shape.q)
        fail(errc::field_mismatch, "field does not realize GF(q^2) for q = " + std::to_string(z.shape.q));
    for (long long e : z.elements)
        if (e < 0 || e >= z.shape.rn || e % z.shape.r != 1 % z.shape.r)
            fail(errc::elements_outside_omega, "defining set element " + std::to_string(e) + " is outside Omega");
    const Field& f = *field;
    ConstacyclicCode code{std::move(field), z.shape, 0, DefiningSet{}, Poly(f), 0};
    code.eta = f.omega_pow(code.shape.lambda * (code.shape.q - 1));
    code.gen = Poly::from_roots(f, z.elements);
    code.k = code.shape.n - static_cast<long long>(z.elements.size());
    code.zset = std::move(z);

    // eta has order exactly r, and g must divide x^n - eta; both are
    // structural guarantees of the construction, so failures are fatal.
    assert(f.pow(code.eta, code.shape.r) == 1);
    const Poly ambient = Poly::binomial_xn_minus(f, code.shape.n, code.eta);
    if (!code.gen.divides(ambient))
        fail(errc::internal_divisibility_failure, "generator does not divide x^n - eta");
    return code;
}

std::vector<felt> encode(const ConstacyclicCode& code, const Poly& message) {
    if (message.degree() >= code.k)
        fail(errc::message_too_long, "message degree " + std::to_string(message.degree()) +
                                         " >= dimension " + std::to_string(code.k));
    return (message * code.gen).padded(static_cast<std::size_t>(code.shape.n));
}

bool is_codeword(const ConstacyclicCode& code, std::span<const felt> word) {
    if (static_cast<long long>(word.size()) != code.shape.n)
        fail(errc::length_mismatch, "word length != n");
    const Field& f = *code.field;
    for (long long z : code.zset.elements) {
        const felt root = f.omega_pow(z);
        felt acc = 0;
        for (std::size_t i = word.size(); i-- > 0;) acc = f.add(f.mul(acc, root), word[i]);
        if (acc != 0) return false;
    }
    return true;
}

std::vector<felt> constacyclic_shift(const ConstacyclicCode& code, std::span<const felt> word) {
    if (!is_codeword(code, word)) fail(errc::not_a_codeword, "shift requires a codeword");
    std::vector<felt> out(word.size());
    out[0] = code.field->mul(code.eta, word.back());
    for (std::size_t i = 1; i < word.size(); ++i) out[i] = word[i - 1];
    return out;
}

long long bch_bound(const ConstacyclicCode& code) { return bch_run_bound(code.zset); }

ParityCheckMatrix parity_check(const ConstacyclicCode& code) {
    const Field& f = *code.field;
    ParityCheckMatrix h;
    h.rows = static_cast<long long>(code.zset.elements.size());
    h.cols = code.shape.n;
    h.a.reserve(static_cast<std::size_t>(h.rows * h.cols));
    for (long long z : code.zset.elements)
        for (long long i = 0; i < h.cols; ++i) h.a.push_back(f.omega_pow(z * i));
    return h;
}

}  // namespace qmds
