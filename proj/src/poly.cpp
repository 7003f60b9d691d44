#include "qmds/poly.hpp"

#include <algorithm>

namespace qmds {

Poly Poly::constant(const Field& f, felt c) {
    Poly out(f);
    if (c != 0) out.c_.push_back(c);
    return out;
}

Poly Poly::from_roots(const Field& f, std::span<const long long> exponents) {
    // Incremental multiplication by (x - omega^e); degree grows by one per root.
    std::vector<felt> c;
    c.reserve(exponents.size() + 1);
    c.push_back(1);
    for (long long e : exponents) {
        const felt root = f.omega_pow(e);
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = f.sub(c[i - 1], f.mul(root, c[i]));
        c[0] = f.mul(f.neg(root), c[0]);
    }
    return Poly(f, std::move(c));
}

Poly Poly::binomial_xn_minus(const Field& f, long long n, felt eta) {
    std::vector<felt> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = f.neg(eta);
    c.back() = 1;
    return Poly(f, std::move(c));
}

std::vector<felt> Poly::padded(std::size_t n) const {
    std::vector<felt> out(n, 0);
    std::copy(c_.begin(), c_.end(), out.begin());
    return out;
}

felt Poly::eval(felt a) const {
    felt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), c_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    const Field& f = *a.field_;
    std::vector<felt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    const Field& f = *a.field_;
    std::vector<felt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    const Field& f = *a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<felt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = *a.field_;
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<felt> rem = a.c_;
    std::vector<felt> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const felt lead_inv = f.inv(b.c_.back());
    for (std::size_t i = rem.size(); i-- >= b.c_.size();) {
        const felt factor = f.mul(rem[i], lead_inv);
        if (factor != 0) {
            quo[i - (b.c_.size() - 1)] = factor;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[i - (b.c_.size() - 1) + j] = f.sub(rem[i - (b.c_.size() - 1) + j], f.mul(factor, b.c_[j]));
        }
        if (i == 0) break;
    }
    rem.resize(b.c_.size() - 1);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

bool Poly::divides(const Poly& other) const {
    return divmod(other, *this).second.is_zero();
}

}  // namespace qmds
