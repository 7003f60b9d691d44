#ifndef QMDS_FIELD_HPP
#define QMDS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qmds/error.hpp"

namespace qmds {

// Canonical index of a field element: the base-p encoding of its coefficient
// vector over GF(p). 0 and 1 are the additive and multiplicative identities.
using felt = std::uint32_t;

// GF(p^{2m}) = GF(q^2) with a fixed primitive element omega. The modulus is the
// lexicographically smallest (by little-endian coefficient vector) monic
// primitive polynomial of degree 2m over GF(p), so two builds with the same
// (p, m) are bit-identical. Immutable after construction; all operations are
// pure and safe for concurrent use. Memory is O(q^2) table entries.
class Field {
  public:
    static std::shared_ptr<const Field> build(int p, int m);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; }
    long long order() const { return order_; }              // q^2
    long long group_order() const { return group_order_; }  // q^2 - 1
    const std::vector<int>& modulus() const { return modulus_; }

    felt zero() const { return 0; }
    felt one() const { return 1; }
    felt omega() const { return omega_; }

    // Addition via Zech logarithms: a + b = a(1 + b/a), one table hop.
    felt add(felt a, felt b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        const long long la = log_[a];
        const long long z = zech_[mod_order(log_[b] - la)];
        return z < 0 ? 0 : exp_[mod_order(la + z)];
    }
    felt neg(felt a) const {
        return a == 0 ? 0 : exp_[mod_order(log_[a] + group_order_ / 2)];  // -1 = omega^{(q^2-1)/2}
    }
    felt sub(felt a, felt b) const { return add(a, neg(b)); }
    felt mul(felt a, felt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[mod_order(log_[a] + log_[b])];
    }
    felt inv(felt a) const {
        if (a == 0) fail(errc::division_by_zero, "inv(0) in GF(q^2)");
        return exp_[mod_order(-log_[a])];
    }
    felt pow(felt a, long long e) const;
    // a -> a^q, the m-fold Frobenius; an involution on GF(q^2).
    felt conj(felt a) const {
        if (a == 0) return 0;
        return exp_[static_cast<std::size_t>(log_[a] * q_ % group_order_)];
    }
    // omega^e for any integer e (reduced mod q^2 - 1).
    felt omega_pow(long long e) const { return exp_[mod_order(e)]; }
    // The unique e in [0, q^2 - 2] with omega^e = a; table lookup.
    long long dlog(felt a) const {
        if (a == 0) fail(errc::division_by_zero, "discrete_log(0)");
        return log_[a];
    }

    // Little-endian coefficient vector over GF(p), length exactly 2m.
    std::vector<int> coeffs(felt a) const;
    felt element(std::span<const int> coeffs) const;
    felt from_int(long long c) const;  // embed via the prime subfield

  private:
    Field() = default;

    std::size_t mod_order(long long e) const {
        long long r = e % group_order_;
        return static_cast<std::size_t>(r < 0 ? r + group_order_ : r);
    }

    int p_ = 0;
    int m_ = 0;
    long long q_ = 0;
    long long order_ = 0;
    long long group_order_ = 0;
    felt omega_ = 0;
    std::vector<int> modulus_;       // monic, degree 2m, little-endian
    std::vector<felt> exp_;          // exp_[e] = omega^e, e in [0, q^2 - 2]
    std::vector<long long> log_;     // inverse of exp_; log_[0] = -1 sentinel
    std::vector<long long> zech_;    // zech_[k] = log(1 + omega^k), -1 when zero
};

// A field element tagged with its field, for API-level arithmetic. Operations
// on elements of different Field instances throw errc::field_mismatch.
class FieldElement {
  public:
    FieldElement(const Field& f, felt v) : field_(&f), v_(v) {}

    const Field& field() const { return *field_; }
    felt index() const { return v_; }
    std::vector<int> coeffs() const { return field_->coeffs(v_); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.field_, a.field_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.field_, a.field_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.field_, a.field_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.field_, a.field_->mul(a.v_, b.field_->inv(b.v_))};
    }
    FieldElement operator-() const { return {*field_, field_->neg(v_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }

  private:
    void check(const FieldElement& other) const {
        if (field_ != other.field_) fail(errc::field_mismatch, "elements from different fields");
    }
    const Field* field_;
    felt v_;
};

}  // namespace qmds

#endif
