#ifndef QMDS_POLY_HPP
#define QMDS_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

// Dense univariate polynomial over GF(q^2), little-endian coefficients with no
// trailing zeros (the zero polynomial has an empty coefficient vector), so
// degree queries are O(1) and equality is structural. Pure value semantics.
class Poly {
  public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<felt> coeffs) : field_(&f), c_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Field& f, felt c);
    static Poly one(const Field& f) { return constant(f, 1); }
    // prod_{e in exponents} (x - omega^e)
    static Poly from_roots(const Field& f, std::span<const long long> exponents);
    // x^n - eta
    static Poly binomial_xn_minus(const Field& f, long long n, felt eta);

    const Field& field() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    felt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<felt>& coeffs() const { return c_; }
    std::vector<felt> padded(std::size_t n) const;

    felt eval(felt a) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    // (quotient, remainder) with deg(remainder) < deg(b); b must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    bool divides(const Poly& other) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_same_field(const Poly& a, const Poly& b) {
        if (a.field_ != b.field_) fail(errc::field_mismatch, "polynomials over different fields");
    }
    const Field* field_;
    std::vector<felt> c_;
};

}  // namespace qmds

#endif
