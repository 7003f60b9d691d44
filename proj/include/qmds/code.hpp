#ifndef QMDS_CODE_HPP
#define QMDS_CODE_HPP

#include <memory>
#include <span>

#include "qmds/defsets.hpp"
#include "qmds/poly.hpp"

namespace qmds {

// An eta-constacyclic code over GF(q^2): the ideal of F[x]/(x^n - eta)
// generated by g(x) = prod_{z in Z}(x - omega^z). eta = omega^{lambda(q-1)}
// has multiplicative order exactly r. Immutable after build; queries are pure.
struct ConstacyclicCode {
    std::shared_ptr<const Field> field;
    CodeShape shape;
    felt eta = 0;
    DefiningSet zset;
    Poly gen;
    long long k = 0;  // dimension, n - |Z|
};

// Builds the code and verifies g | x^n - eta (a failure indicates a bug, not
// bad input). The field must realize GF(q^2) for the shape's q.
ConstacyclicCode build_code(std::shared_ptr<const Field> field, DefiningSet z);

// Non-systematic encoding: coefficients of message(x) * g(x), padded to n.
std::vector<felt> encode(const ConstacyclicCode& code, const Poly& message);

// True iff c(omega^z) = 0 for every z in Z.
bool is_codeword(const ConstacyclicCode& code, std::span<const felt> word);

// (c_0,...,c_{n-1}) -> (eta*c_{n-1}, c_0,...,c_{n-2}); input must be a codeword.
std::vector<felt> constacyclic_shift(const ConstacyclicCode& code, std::span<const felt> word);

long long bch_bound(const ConstacyclicCode& code);

// |Z| x n matrix with row z having entries omega^{z*i}; its kernel is the code.
struct ParityCheckMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<felt> a;  // row-major

    felt at(long long r, long long c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
};

ParityCheckMatrix parity_check(const ConstacyclicCode& code);

}  // namespace qmds

#endif
