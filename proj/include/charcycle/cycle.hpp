#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charcycle/conormal.hpp"
#include "charcycle/decompose.hpp"
#include "charcycle/ideal.hpp"

namespace charcycle {

class ComputeCache;

/// One irreducible conormal component: a prime ideal q in the doubled ring
/// together with its base projection q cap R.
struct ConormalComponent {
    Ideal conormal;  // in the doubled ring
    Ideal base;      // in the base ring
    int dim = 0;     // dim V(q)
    int base_dim = 0;

    ConormalComponent(Ideal q, Ideal base_ideal, int d, int bd)
        : conormal(std::move(q)), base(std::move(base_ideal)), dim(d), base_dim(bd) {}
    static ConormalComponent from_conormal(const Ideal& q, const RingPtr& base_ring);
    const std::string& key() const { return conormal.canonical_key(); }
};

/// Formal sum of conormal components with positive integer multiplicities,
/// keyed by the canonical reduced basis of the component ideal. The empty
/// sum is the cycle of the zero module.
class CharCycle {
  public:
    CharCycle() = default;
    CharCycle(RingPtr doubled, RingPtr base)
        : doubled_(std::move(doubled)), base_(std::move(base)) {}

    const RingPtr& doubled_ring() const { return doubled_; }
    const RingPtr& base_ring() const { return base_; }

    bool is_zero() const { return comps_.empty(); }
    size_t size() const { return comps_.size(); }

    void add(ConormalComponent comp, long multiplicity);
    long multiplicity_of(const std::string& key) const;
    std::optional<ConormalComponent> component(const std::string& key) const;

    /// Deterministic iteration, ascending canonical key.
    const std::map<std::string, std::pair<ConormalComponent, long>>& entries() const {
        return comps_;
    }

    CharCycle plus(const CharCycle& other) const;
    /// Componentwise multiset intersection (min of multiplicities).
    static CharCycle common(const CharCycle& a, const CharCycle& b);
    /// Multiset difference; `other` must be a sub-multiset.
    CharCycle minus(const CharCycle& other) const;
    bool submultiset_of(const CharCycle& other) const;

    bool operator==(const CharCycle& other) const;
    bool operator!=(const CharCycle& other) const { return !(*this == other); }

  private:
    RingPtr doubled_;
    RingPtr base_;
    std::map<std::string, std::pair<ConormalComponent, long>> comps_;
};

enum class Strategy { Single, Iterative };

/// Shared state for the localization pipeline: the component-level memo and
/// the factor pool handed to the decomposer.
struct LocalizeContext {
    ComputeCache* cache = nullptr;
    std::vector<Polynomial> factor_hints;
};

/// CC(R) = T*_X X: the zero section, multiplicity one.
CharCycle zero_section(const RingPtr& doubled);

/// A polynomial together with its (optional) factor list for the iterative
/// strategy.
struct Localizer {
    Polynomial poly;
    std::vector<Polynomial> factors; // empty: treat poly as a single factor

    const std::vector<Polynomial>& factor_list() const;
};

/// Theorem propBMM: CC(M_f) from CC(M). Components where f vanishes are
/// dropped; surviving components keep their multiplicity and contribute the
/// components of the divisor of f in their relative conormal, with
/// multiplicities from the Hilbert degree ratio.
CharCycle localize_cycle(const CharCycle& cycle, const Localizer& f, Strategy strategy,
                         LocalizeContext* ctx = nullptr);

/// Base projection of a component (Alg 3.2 step 1b).
Ideal component_support(const ConormalComponent& comp);

/// Deduplicated base projections of all components.
std::vector<Ideal> support(const CharCycle& cycle);

/// Conormal component of the subvariety V(I) (used for declared cycles).
ConormalComponent component_of_variety(const Ideal& base_ideal);

} // namespace charcycle
