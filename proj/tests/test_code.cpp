#include <doctest.h>

#include "helpers.hpp"
#include "qmds/code.hpp"
#include "qmds/numth.hpp"

using namespace qmds;

namespace {

Poly random_message(const ConstacyclicCode& code, testutil::TestRng& rng) {
    if (code.k == 0) return Poly(*code.field);
    std::vector<felt> c(static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(code.k))) + 1);
    for (auto& x : c) x = rng.element(*code.field);
    return Poly(*code.field, std::move(c));
}

}  // namespace

TEST_CASE("build_code on the empty set gives the full ambient code") {
    auto f = Field::build(5, 1);
    const CodeShape s = CodeShape::make(5, 2);
    const ConstacyclicCode code = build_code(f, DefiningSet::custom(s, {}));
    CHECK(code.gen == Poly::one(*f));
    CHECK(code.k == 12);
    CHECK(bch_bound(code) == 1);
}

TEST_CASE("build_code q=5 negacyclic example") {
    auto f = Field::build(5, 1);
    const ConstacyclicCode code = build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {1, 3, 5, 7}));
    CHECK(code.gen.degree() == 4);
    CHECK(code.k == 8);
    CHECK(code.eta == f->omega_pow(12));
    CHECK(code.eta == f->neg(f->one()));  // negacyclic
}

TEST_CASE("build_code q=17 r=9 gives a [32, 24] code over GF(289)") {
    auto f = Field::build(17, 1);
    const CodeShape s = CodeShape::make(17, 9);
    const ConstacyclicCode code = build_code(f, defining_set_odd(s, 8));
    CHECK(code.shape.n == 32);
    CHECK(code.k == 24);
    CHECK(code.gen.degree() == 8);
    CHECK(f->order() == 289);
}

TEST_CASE("eta has multiplicative order exactly r") {
    for (long long q : {5, 9, 17}) {
        auto fptr = [&] {
            long long p;
            int m;
            prime_power(q, &p, &m);
            return Field::build(static_cast<int>(p), m);
        }();
        for (long long r : divisors(q + 1)) {
            const CodeShape s = CodeShape::make(q, r);
            const ConstacyclicCode code = build_code(fptr, DefiningSet::custom(s, {}));
            CHECK(fptr->pow(code.eta, r) == fptr->one());
            for (long long e = 1; e < r; ++e) CHECK(fptr->pow(code.eta, e) != fptr->one());
        }
    }
}

TEST_CASE("build_code rejects a mismatched field") {
    auto f = Field::build(7, 1);
    CHECK_THROWS_AS(build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {1})), Error);
}

TEST_CASE("build_code rejects raw sets outside Omega") {
    auto f = Field::build(5, 1);
    DefiningSet z;  // bypasses the checked constructors on purpose
    z.shape = CodeShape::make(5, 2);
    z.elements = {2};
    z.delta = 1;
    try {
        build_code(f, z);
        FAIL("expected elements_outside_omega");
    } catch (const Error& e) {
        CHECK(e.code() == errc::elements_outside_omega);
    }
}

TEST_CASE("encode and membership") {
    auto f = Field::build(5, 1);
    const ConstacyclicCode code = build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {1, 3, 5, 7}));

    CHECK(encode(code, Poly(*f)) == std::vector<felt>(12, 0));
    CHECK(encode(code, Poly::one(*f)) == code.gen.padded(12));
    CHECK(is_codeword(code, std::vector<felt>(12, 0)));
    CHECK(is_codeword(code, code.gen.padded(12)));

    // unit vector e_0 evaluates to the constant 1 at every root
    std::vector<felt> e0(12, 0);
    e0[0] = 1;
    CHECK_FALSE(is_codeword(code, e0));

    // nonzero vectors lighter than the distance floor can never be codewords
    testutil::TestRng wrng(77);
    for (int t = 0; t < 50; ++t) {
        std::vector<felt> w(12, 0);
        const auto weight = 1 + wrng.below(static_cast<std::uint64_t>(code.gen.degree()));
        for (std::uint64_t placed = 0; placed < weight;) {
            const auto pos = static_cast<std::size_t>(wrng.below(12));
            if (w[pos] == 0) {
                w[pos] = wrng.nonzero_element(*f);
                ++placed;
            }
        }
        CHECK_FALSE(is_codeword(code, w));
    }

    testutil::TestRng rng(5);
    for (int t = 0; t < 100; ++t) CHECK(is_codeword(code, encode(code, random_message(code, rng))));

    Poly too_long(*f, std::vector<felt>(9, 1));
    CHECK_THROWS_AS(encode(code, too_long), Error);
    CHECK_THROWS_AS(is_codeword(code, std::vector<felt>(11, 0)), Error);
}

TEST_CASE("constacyclic shift") {
    auto f = Field::build(5, 1);
    const ConstacyclicCode code = build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {1, 3, 5, 7}));
    const long long n = code.shape.n;

    CHECK(constacyclic_shift(code, std::vector<felt>(12, 0)) == std::vector<felt>(12, 0));

    testutil::TestRng rng(9);
    for (int t = 0; t < 25; ++t) {
        const auto c = encode(code, random_message(code, rng));
        auto shifted = constacyclic_shift(code, c);
        CHECK(is_codeword(code, shifted));
        // n shifts multiply by x^n = eta
        for (long long i = 1; i < n; ++i) shifted = constacyclic_shift(code, shifted);
        std::vector<felt> scaled(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) scaled[i] = f->mul(code.eta, c[i]);
        CHECK(shifted == scaled);
    }

    std::vector<felt> not_codeword(12, 0);
    not_codeword[0] = 1;
    CHECK_THROWS_AS(constacyclic_shift(code, not_codeword), Error);
}

TEST_CASE("bch bound on codes") {
    auto f = Field::build(5, 1);
    const CodeShape s = CodeShape::make(5, 2);
    CHECK(bch_bound(build_code(f, DefiningSet::custom(s, {}))) == 1);
    CHECK(bch_bound(build_code(f, defining_set_even(s, 4))) == 5);
    CHECK(bch_bound(build_code(f, DefiningSet::custom(s, {1, 5}))) == 2);  // gapped i-indices {0, 2}
}

TEST_CASE("parity check matrix annihilates the code and has full rank") {
    auto f = Field::build(5, 1);
    const ConstacyclicCode code = build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {1, 3, 5, 7}));
    const ParityCheckMatrix h = parity_check(code);
    CHECK(h.rows == 4);
    CHECK(h.cols == 12);

    const auto g = encode(code, Poly::one(*f));
    for (long long r = 0; r < h.rows; ++r) {
        felt dot = 0;
        for (long long c = 0; c < h.cols; ++c) dot = f->add(dot, f->mul(h.at(r, c), g[static_cast<std::size_t>(c)]));
        CHECK(dot == 0);
    }

    CHECK(testutil::naive_rank(*f, h.a, h.rows, h.cols) == h.rows);

    const ParityCheckMatrix empty = parity_check(build_code(f, DefiningSet::custom(CodeShape::make(5, 2), {})));
    CHECK(empty.rows == 0);
}

TEST_CASE("kernel of the parity check has dimension k") {
    // rank-nullity, checked by elimination across several instances
    auto f = Field::build(7, 1);
    for (long long r : {2, 4}) {
        const CodeShape s = CodeShape::make(7, r);
        for (long long delta = 1; delta <= delta_max_even(s); ++delta) {
            const ConstacyclicCode code = build_code(f, defining_set_even(s, delta));
            const ParityCheckMatrix h = parity_check(code);
            const long long rank = testutil::naive_rank(*f, h.a, h.rows, h.cols);
            CHECK(s.n - rank == code.k);
        }
    }
}
