#include "qmds/field.hpp"

#include <cassert>

#include "qmds/numth.hpp"

namespace qmds {

namespace {

// Little-endian polynomials over GF(p), used only during field construction.
using PPoly = std::vector<int>;

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;  // f monic, degree 2m
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
    }
    for (auto& c : prod) c %= p;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        const long long top = prod[i] % p;
        if (!top) continue;
        for (int j = 0; j <= deg; ++j) prod[i - deg + j] = (prod[i - deg + j] - top * f[j]) % p;
    }
    PPoly out(deg, 0);
    for (int i = 0; i < deg; ++i) out[i] = static_cast<int>(((prod[i] % p) + p) % p);
    return out;
}

PPoly pow_x_mod(long long e, const PPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    PPoly result(deg, 0), base(deg, 0);
    result[0] = 1;
    base[1 % deg] = 1;  // deg >= 2 always
    while (e > 0) {
        if (e & 1) result = pmul_mod(result, base, f, p);
        base = pmul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const PPoly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

// f is primitive iff x is a unit of order exactly p^deg - 1 in GF(p)[x]/(f);
// that forces the quotient to be a field, so irreducibility comes for free.
bool is_primitive(const PPoly& f, int p, long long n, const std::vector<long long>& prime_factors) {
    if (f[0] == 0) return false;  // x not a unit
    if (!is_one(pow_x_mod(n, f, p))) return false;
    for (long long ell : prime_factors)
        if (is_one(pow_x_mod(n / ell, f, p))) return false;
    return true;
}

}  // namespace

std::shared_ptr<const Field> Field::build(int p, int m) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (p == 2) fail(errc::even_characteristic, "characteristic 2 is not supported (q must be odd)");
    if (m < 1) fail(errc::invalid_argument, "m must be >= 1");

    const int deg = 2 * m;
    long long order = 1;
    for (int i = 0; i < deg; ++i) {
        order *= p;
        if (order > (1ll << 31))
            fail(errc::invalid_argument, "field too large: tables need q^2 <= 2^31");
    }
    const long long n = order - 1;

    std::vector<long long> prime_factors;
    for (auto [prime, _] : factorize(n)) prime_factors.push_back(prime);

    // Scan monic candidates in lexicographic order of the little-endian
    // coefficient vector: c0 varies slowest.
    PPoly f(deg + 1, 0);
    f[deg] = 1;
    bool found = false;
    for (long long counter = 0; counter < order && !found; ++counter) {
        long long v = counter;
        for (int i = deg - 1; i >= 0; --i) {  // c0 gets the most significant digit
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        found = is_primitive(f, p, n, prime_factors);
    }
    assert(found && "a primitive polynomial of every degree exists over any prime field");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = 1;
    for (int i = 0; i < m; ++i) field->q_ *= p;
    field->order_ = order;
    field->group_order_ = n;
    field->modulus_ = f;
    field->omega_ = static_cast<felt>(p);  // the residue class of x, index p

    // exp table by repeated multiplication with x (shift + reduce).
    field->exp_.assign(static_cast<std::size_t>(n), 0);
    field->log_.assign(static_cast<std::size_t>(order), -1);
    std::vector<std::vector<int>> coeff_of(static_cast<std::size_t>(order));
    PPoly cur(deg, 0);
    cur[0] = 1;
    for (long long e = 0; e < n; ++e) {
        felt idx = 0;
        for (int i = deg - 1; i >= 0; --i) idx = idx * static_cast<felt>(p) + static_cast<felt>(cur[i]);
        assert(field->log_[idx] == -1 && "omega powers must be distinct");
        field->exp_[static_cast<std::size_t>(e)] = idx;
        field->log_[idx] = e;
        coeff_of[idx] = cur;
        const int top = cur[deg - 1];
        for (int i = deg - 1; i >= 1; --i) cur[i] = ((cur[i - 1] - top * f[i]) % p + p) % p;
        cur[0] = ((-top * f[0]) % p + p) % p;
    }
    assert(is_one(cur) && "omega^(q^2-1) must be 1");

    // Zech logarithms: zech[k] = log(1 + omega^k), -1 where the sum vanishes.
    field->zech_.assign(static_cast<std::size_t>(n), -1);
    for (long long k = 0; k < n; ++k) {
        std::vector<int> s = coeff_of[field->exp_[static_cast<std::size_t>(k)]];
        s[0] = (s[0] + 1) % p;
        felt idx = 0;
        for (int i = deg - 1; i >= 0; --i) idx = idx * static_cast<felt>(p) + static_cast<felt>(s[i]);
        field->zech_[static_cast<std::size_t>(k)] = idx == 0 ? -1 : field->log_[idx];
    }
    return field;
}

felt Field::pow(felt a, long long e) const {
    if (a == 0) {
        if (e < 0) fail(errc::division_by_zero, "0 raised to a negative power");
        return e == 0 ? 1 : 0;
    }
    const long long r = static_cast<long long>(mod_order(e));
    return exp_[static_cast<std::size_t>(log_[a] * r % group_order_)];
}

std::vector<int> Field::coeffs(felt a) const {
    std::vector<int> out(static_cast<std::size_t>(2 * m_), 0);
    felt v = a;
    for (int i = 0; i < 2 * m_; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<felt>(p_));
        v /= static_cast<felt>(p_);
    }
    return out;
}

felt Field::element(std::span<const int> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(2 * m_))
        fail(errc::invalid_argument, "coefficient vector must have length 2m");
    felt idx = 0;
    for (int i = 2 * m_ - 1; i >= 0; --i) {
        const int c = ((coeffs[static_cast<std::size_t>(i)] % p_) + p_) % p_;
        idx = idx * static_cast<felt>(p_) + static_cast<felt>(c);
    }
    return idx;
}

felt Field::from_int(long long c) const { return static_cast<felt>(mod_reduce(c, p_)); }

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::ok: return "ok";
        case errc::invalid_argument: return "invalid_argument";
        case errc::not_prime: return "not_prime";
        case errc::even_characteristic: return "even_characteristic";
        case errc::division_by_zero: return "division_by_zero";
        case errc::field_mismatch: return "field_mismatch";
        case errc::length_mismatch: return "length_mismatch";
        case errc::message_too_long: return "message_too_long";
        case errc::not_a_codeword: return "not_a_codeword";
        case errc::odd_r: return "odd_r";
        case errc::even_r: return "even_r";
        case errc::r_one: return "r_one";
        case errc::r_too_large: return "r_too_large";
        case errc::delta_out_of_range: return "delta_out_of_range";
        case errc::d_out_of_range: return "d_out_of_range";
        case errc::elements_outside_omega: return "elements_outside_omega";
        case errc::not_dual_containing: return "not_dual_containing";
        case errc::dimension_contradiction: return "dimension_contradiction";
        case errc::internal_divisibility_failure: return "internal_divisibility_failure";
        case errc::equivalence_violation: return "equivalence_violation";
        case errc::invalid_q: return "invalid_q";
    }
    return "unknown";
}

}  // namespace qmds
