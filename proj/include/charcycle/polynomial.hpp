#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "charcycle/monomial.hpp"
#include "charcycle/order.hpp"
#include "charcycle/ring.hpp"

namespace charcycle {

using Rational = mpq_class;

struct Term {
    Rational coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial over Q. Terms are kept canonical:
/// no zero coefficients, no duplicate monomials, sorted descending by
/// grevlex (the ring default order); coefficients in lowest terms.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, Rational value);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial monomial(RingPtr ring, Monomial m, Rational coeff = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    /// Multiplication by a single term.
    Polynomial times_term(const Rational& coeff, const Monomial& m) const;
    Polynomial pow(int e) const;

    Polynomial partial_derivative(int var) const;

    /// Maximal term under `order`; throws MisuseError on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Exact division; returns false if `divisor` does not divide exactly.
    bool try_exact_divide(const Polynomial& divisor, Polynomial& quotient) const;

    /// GCD of the monomials (the monomial content).
    Monomial monomial_content() const;

    /// True if every term has the same total degree in `vars`.
    bool homogeneous_in(const std::vector<int>& vars) const;

    /// Map into `target` by variable name. Exponents of variables missing
    /// from `target` must be zero.
    Polynomial map_to_ring(const RingPtr& target) const;

    std::string to_string() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Sort a term vector descending under `order` (no merging).
void sort_terms(std::vector<Term>& terms, const MonomialOrder& order);

} // namespace charcycle
