#include "qmds/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmds {

felt hermitian_inner(const Field& f, std::span<const felt> x, std::span<const felt> y) {
    if (x.size() != y.size()) fail(errc::length_mismatch, "hermitian inner product needs equal lengths");
    felt acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], f.conj(y[i])));
    return acc;
}

ConstacyclicCode dual_code(const ConstacyclicCode& code) {
    return build_code(code.field, dual_defining_set(code.zset));
}

bool contains_dual_by_divisibility(const ConstacyclicCode& code) {
    // Ideal containment reverses divisibility: C' subseteq C iff g_C | g_C'.
    return code.gen.divides(dual_code(code).gen);
}

std::vector<std::vector<felt>> hermitian_dual_basis(const ConstacyclicCode& code) {
    const Field& f = *code.field;
    const long long n = code.shape.n;
    const long long k = code.k;
    const long long delta = n - k;

    // Constraint row i is the conjugated shift x^i * g, so the matrix is
    // already in echelon form with pivot conj(g_0) at column i; g(0) != 0
    // because every root is a power of omega. Kernel vectors come from
    // back-substitution, one per free column k..n-1.
    std::vector<felt> gbar(static_cast<std::size_t>(delta) + 1);
    for (long long t = 0; t <= delta; ++t) gbar[static_cast<std::size_t>(t)] = f.conj(code.gen.coeff(static_cast<std::size_t>(t)));
    if (gbar[0] == 0) throw std::logic_error("generator with zero constant term");
    const felt pivot_inv = f.inv(gbar[0]);

    std::vector<std::vector<felt>> basis;
    basis.reserve(static_cast<std::size_t>(delta));
    for (long long free_col = k; free_col < n; ++free_col) {
        std::vector<felt> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free_col)] = 1;
        for (long long i = k - 1; i >= 0; --i) {
            felt acc = 0;
            const long long hi = std::min(i + delta, n - 1);
            for (long long j = i + 1; j <= hi; ++j)
                acc = f.add(acc, f.mul(gbar[static_cast<std::size_t>(j - i)], v[static_cast<std::size_t>(j)]));
            v[static_cast<std::size_t>(i)] = f.mul(f.neg(acc), pivot_inv);
        }
        basis.push_back(std::move(v));
    }
    if (static_cast<long long>(basis.size()) != delta)
        fail(errc::dimension_contradiction, "dual basis size != n - k");
    return basis;
}

bool gram_check(const ConstacyclicCode& code) {
    for (const auto& v : hermitian_dual_basis(code))
        if (!is_codeword(code, v)) return false;
    return true;
}

bool contains_dual(const ConstacyclicCode& code) {
    const bool by_sets = dual_containing(code.zset);
    const bool by_divisibility = contains_dual_by_divisibility(code);
    if (by_sets != by_divisibility)
        fail(errc::equivalence_violation,
             "defining-set and divisibility routes disagree on Z = " + elements_to_string(code.zset.elements));
    return by_divisibility;
}

}  // namespace qmds
