#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "charcycle/polynomial.hpp"

namespace charcycle {

/// Ideal of a polynomial ring: a generator list plus a cache of reduced
/// Groebner bases keyed by monomial order. Values are immutable; copies
/// share the cache.
class Ideal {
  public:
    explicit Ideal(RingPtr ring);
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced Groebner basis under `order` (cached).
    const std::vector<Polynomial>& groebner_basis(
        const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    /// Remainder of division by the reduced basis; zero iff p is a member.
    Polynomial normal_form(const Polynomial& p,
                           const MonomialOrder& order = MonomialOrder::grevlex()) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    bool contains_ideal(const Ideal& other) const;

    /// Rabinowitsch test: p lies in the radical iff 1 in I + (1 - t p).
    bool radical_contains(const Polynomial& p) const;

    Ideal plus(const std::vector<Polynomial>& extra) const;
    Ideal plus(const Ideal& other) const;

    /// Ideal quotient (I : f).
    Ideal quotient(const Polynomial& f) const;
    /// Ideal quotient (I : J) = intersection of (I : g) over generators g.
    Ideal quotient(const Ideal& other) const;

    /// Saturation (I : f^inf) by the extra-variable trick.
    Ideal saturate(const Polynomial& f) const;
    /// Saturation (I : J^inf); the unit ideal saturates to I itself.
    Ideal saturate(const Ideal& other) const;

    /// I intersected with the subring omitting `vars` (block-order basis),
    /// returned as an ideal of the same ring.
    Ideal eliminate(const std::vector<int>& vars) const;

    static Ideal intersect(const Ideal& a, const Ideal& b);

    /// Generators mapped by variable name into `target`.
    Ideal map_to_ring(const RingPtr& target) const;

    /// Canonical identity: the printed reduced grevlex basis.
    const std::string& canonical_key() const;

    static bool same_ideal(const Ideal& a, const Ideal& b);

  private:
    struct Cache;
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Remainder of p on division by `basis` under `order` (full tail reduction).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order);

/// Buchberger with the coprime and chain criteria; returns the reduced basis,
/// sorted ascending by leading monomial.
std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   const MonomialOrder& order);

} // namespace charcycle
