#pragma once

#include <optional>
#include <vector>

#include "charcycle/ideal.hpp"

namespace charcycle {

/// Raised where an operation needs a nonempty variety (unit ideal input).
struct EmptyVarietyError : Error {
    using Error::Error;
};

/// Hilbert series of R/in(I) written as numerator / (1-t)^nvars, together
/// with the derived dimension (pole order at 1) and degree (numerator value
/// at 1 after stripping the (1-t) factors).
struct HilbertSeries {
    std::vector<mpz_class> numerator; // coefficient of t^i at index i
    int nvars = 0;
    int dimension = 0;
    mpz_class degree;

    /// Coefficients of the series expansion up to t^max_degree.
    std::vector<mpz_class> counts(int max_degree) const;
};

HilbertSeries hilbert_series(const Ideal& ideal);

/// Krull dimension of V(I); EmptyVarietyError on the unit ideal.
int dimension(const Ideal& ideal);

/// Degree from the Hilbert series leading data; EmptyVarietyError on units.
mpz_class degree(const Ideal& ideal);

/// Multiplicity of the generic point of V(prime) along the scheme cut out by
/// `ideal`, for `prime` a minimal prime of it: deg(primary part) / deg(prime).
/// `minimal_primes` may pass the known minimal primes to avoid recomputation.
long multiplicity_along(const Ideal& ideal, const Ideal& prime,
                        const std::vector<Ideal>* minimal_primes = nullptr);

} // namespace charcycle
