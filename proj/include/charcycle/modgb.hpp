#pragma once

#include <vector>

#include "charcycle/ideal.hpp"

namespace charcycle {

/// Element of a free module R^k.
struct VectorPolynomial {
    std::vector<Polynomial> components;
    int rank() const { return static_cast<int>(components.size()); }
    bool is_zero() const;
};

struct Submodule {
    int rank = 0;
    std::vector<VectorPolynomial> generators;
};

/// Kernel of phi: R^k -> R^m / I R^m, phi(s) = A s, for an m x k matrix A.
/// Computed by a module Groebner basis (position-over-term with grevlex)
/// of the columns of A augmented with I e_i, projected to the s-coordinates.
Submodule kernel_mod(const std::vector<std::vector<Polynomial>>& rows, const Ideal& ideal);

} // namespace charcycle
