#include "charcycle/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace charcycle {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::degree_in(const std::vector<int>& vars) const {
    int d = 0;
    for (int v : vars)
        d += exps_[v];
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += other.exps_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_)
        return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

std::optional<Monomial> Monomial::try_divide(const Monomial& divisor) const {
    if (!divisor.divides(*this))
        return std::nullopt;
    Monomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= divisor.exps_[i];
    r.degree_ = degree_ - divisor.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.degree_ = 0;
    for (size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.degree_ = 0;
    for (size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] > 0 && b.exps_[i] > 0)
            return false;
    return true;
}

Monomial Monomial::set_exponent(int i, int e) const {
    Monomial r = *this;
    r.degree_ += e - r.exps_[i];
    r.exps_[i] = e;
    return r;
}

} // namespace charcycle
