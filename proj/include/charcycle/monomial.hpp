#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace charcycle {

/// Exponent vector of fixed length (one entry per ring variable).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    int size() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[i]; }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }
    const std::vector<int>& exponents() const { return exps_; }

    /// Total degree restricted to a variable subset.
    int degree_in(const std::vector<int>& vars) const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    std::optional<Monomial> try_divide(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    Monomial set_exponent(int i, int e) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    /// Arbitrary strict total order, for use as a container key only.
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

  private:
    std::vector<int> exps_;
    int degree_ = 0;
};

} // namespace charcycle
