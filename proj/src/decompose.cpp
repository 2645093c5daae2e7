#include "charcycle/decompose.hpp"

#include <algorithm>
#include <map>
#include <iostream>
#include <numeric>
#include <random>

#include "charcycle/conormal.hpp"
#include "charcycle/hilbert.hpp"

namespace charcycle {

namespace {

bool is_monomial_ideal(const Ideal& ideal) {
    for (const auto& g : ideal.groebner_basis())
        if (g.terms().size() != 1)
            return false;
    return true;
}

std::vector<Monomial> minimal_monomial_gens(const Ideal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.groebner_basis())
        gens.push_back(g.terms().front().mono);
    return gens;
}

// ---------------------------------------------------------------------------
// Exact route for monomial ideals: irreducible decomposition by splitting,
// irredundantized; associated primes are the radicals of the irredundant
// irreducible components.
// ---------------------------------------------------------------------------

// An irreducible monomial ideal, stored as var -> exponent of its pure-power
// generators.
using PurePowers = std::map<int, int>;

void monomial_irreducible_split(std::vector<Monomial> gens, std::vector<PurePowers>& leaves) {
    // minimalize
    std::vector<Monomial> min;
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    for (const auto& m : gens) {
        bool red = false;
        for (const auto& kept : min)
            if (kept.divides(m)) {
                red = true;
                break;
            }
        if (!red)
            min.push_back(m);
    }
    for (size_t i = 0; i < min.size(); ++i) {
        const Monomial& m = min[i];
        int vars_used = 0, first_var = -1;
        for (int v = 0; v < m.size(); ++v)
            if (m.exponent(v) > 0) {
                ++vars_used;
                if (first_var < 0)
                    first_var = v;
            }
        if (vars_used >= 2) {
            // m = u * v with u the first variable power: split into I+(u), I+(v)
            Monomial u = Monomial(m.size()).set_exponent(first_var, m.exponent(first_var));
            Monomial v = *m.try_divide(u);
            std::vector<Monomial> a = min, b = min;
            a[i] = u;
            b[i] = v;
            monomial_irreducible_split(std::move(a), leaves);
            monomial_irreducible_split(std::move(b), leaves);
            return;
        }
    }
    // every generator is a pure power: irreducible
    PurePowers pp;
    for (const auto& m : min)
        for (int v = 0; v < m.size(); ++v)
            if (m.exponent(v) > 0) {
                auto [it, fresh] = pp.emplace(v, m.exponent(v));
                if (!fresh)
                    it->second = std::min(it->second, m.exponent(v));
            }
    leaves.push_back(std::move(pp));
}

bool pure_power_member(const Monomial& m, const PurePowers& pp) {
    for (const auto& [v, e] : pp)
        if (m.exponent(v) >= e)
            return true;
    return false;
}

// generators of the intersection of irreducible components: lcm closure
std::vector<Monomial> intersect_pure_powers(const std::vector<PurePowers>& comps, int nvars) {
    std::vector<Monomial> gens = {Monomial(nvars)};
    bool first = true;
    for (const auto& pp : comps) {
        std::vector<Monomial> cur;
        for (const auto& [v, e] : pp)
            cur.push_back(Monomial(nvars).set_exponent(v, e));
        if (first) {
            gens = std::move(cur);
            first = false;
            continue;
        }
        std::vector<Monomial> next;
        for (const auto& a : gens)
            for (const auto& b : cur)
                next.push_back(Monomial::lcm(a, b));
        gens = std::move(next);
    }
    return gens;
}

ComponentList monomial_associated_primes(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    std::vector<PurePowers> leaves;
    monomial_irreducible_split(minimal_monomial_gens(ideal), leaves);
    // dedupe
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    // irredundantize: drop any component containing the intersection of the rest
    for (bool changed = true; changed && leaves.size() > 1;) {
        changed = false;
        for (size_t i = 0; i < leaves.size(); ++i) {
            std::vector<PurePowers> others;
            for (size_t j = 0; j < leaves.size(); ++j)
                if (j != i)
                    others.push_back(leaves[j]);
            bool contains_all = true;
            for (const auto& m : intersect_pure_powers(others, ring->nvars()))
                if (!pure_power_member(m, leaves[i])) {
                    contains_all = false;
                    break;
                }
            if (contains_all) {
                leaves.erase(leaves.begin() + i);
                changed = true;
                break;
            }
        }
    }
    // radicals, deduped
    std::vector<std::vector<int>> radicals;
    for (const auto& pp : leaves) {
        std::vector<int> vars;
        for (const auto& [v, e] : pp)
            vars.push_back(v);
        radicals.push_back(std::move(vars));
    }
    std::sort(radicals.begin(), radicals.end());
    radicals.erase(std::unique(radicals.begin(), radicals.end()), radicals.end());

    ComponentList result;
    for (const auto& vars : radicals) {
        std::vector<Polynomial> gens;
        for (int v : vars)
            gens.push_back(Polynomial::variable(ring, v));
        Ideal prime(ring, std::move(gens));
        bool minimal = true;
        for (const auto& other : radicals) {
            if (other == vars)
                continue;
            if (std::includes(vars.begin(), vars.end(), other.begin(), other.end())) {
                minimal = false;
                break;
            }
        }
        result.push_back({prime, minimal ? PrimeFlag::Minimal : PrimeFlag::Embedded,
                          ring->nvars() - static_cast<int>(vars.size())});
    }
    std::sort(result.begin(), result.end(), [](const Component& a, const Component& b) {
        if (a.dim != b.dim)
            return a.dim > b.dim;
        return a.prime.canonical_key() < b.prime.canonical_key();
    });
    return result;
}

// ---------------------------------------------------------------------------
// General route: recursive splitting on factorizable basis elements.
// ---------------------------------------------------------------------------

struct SplitContext {
    std::vector<Polynomial> candidates;
    int node_budget = 20000;
};

// Deterministic pseudo-random polynomials for the primality spot test,
// seeded from the ideal's canonical key.
std::vector<Polynomial> random_test_polys(const Ideal& ideal, int count) {
    const RingPtr& ring = ideal.ring();
    std::seed_seq seq(ideal.canonical_key().begin(), ideal.canonical_key().end());
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
    std::vector<Polynomial> out;
    for (int i = 0; i < count; ++i) {
        Polynomial p = Polynomial::constant(ring, coeff(rng));
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            Monomial m(ring->nvars());
            int deg = 1 + static_cast<int>(rng() % 2);
            for (int d = 0; d < deg; ++d) {
                int v = var(rng);
                m = m.set_exponent(v, m.exponent(v) + 1);
            }
            p = p + Polynomial::monomial(ring, m, coeff(rng));
        }
        if (!p.is_zero())
            out.push_back(std::move(p));
    }
    return out;
}

// Try to write `p` as a product g*h with g from the candidate pool (or a
// structural factor); returns g with both g and p/g outside `ideal`.
std::optional<Polynomial> find_factor(const Ideal& ideal, const Polynomial& p,
                                      const SplitContext& ctx) {
    const RingPtr& ring = ideal.ring();
    auto usable = [&](const Polynomial& g, const Polynomial& h) {
        return !g.is_constant() && !h.is_constant() && !ideal.contains(g) && !ideal.contains(h);
    };

    // monomial content: p = x^e * core
    Monomial content = p.monomial_content();
    if (!content.is_one()) {
        for (int v = 0; v < ring->nvars(); ++v)
            if (content.exponent(v) > 0) {
                Polynomial g = Polynomial::variable(ring, v);
                Polynomial h(ring);
                if (p.try_exact_divide(g, h) && usable(g, h))
                    return g;
            }
        Polynomial core(ring);
        Polynomial content_poly = Polynomial::monomial(ring, content);
        if (p.try_exact_divide(content_poly, core) && usable(core, content_poly))
            return core;
    }

    // trial division by the candidate pool
    for (const auto& cand : ctx.candidates) {
        if (cand.is_constant() || cand.degree() >= p.degree() + 1)
            continue;
        Polynomial h(ring);
        if (p.try_exact_divide(cand, h) && usable(cand, h))
            return cand;
    }

    const auto& terms = p.terms();

    // power binomials: u1^d + c u2^d picks up the factor u1 - e u2 whenever
    // e^d = -c; the exact division validates each candidate
    if (terms.size() == 2) {
        const Monomial &m1 = terms[0].mono, &m2 = terms[1].mono;
        Rational c = terms[1].coeff / terms[0].coeff;
        int d = 0;
        for (int v = 0; v < ring->nvars(); ++v) {
            for (const Monomial* m : {&m1, &m2}) {
                int e = m->exponent(v);
                if (e > 0)
                    d = d == 0 ? e : std::gcd(d, e);
            }
        }
        for (int root = 2; root <= d; ++root) {
            if (d % root != 0)
                continue;
            mpz_class anum = abs(c.get_num());
            mpz_class aden = c.get_den();
            mpz_class rn, rd;
            if (!mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), root))
                continue;
            if (!mpz_root(rd.get_mpz_t(), aden.get_mpz_t(), root))
                continue;
            Monomial u1(ring->nvars()), u2(ring->nvars());
            for (int v = 0; v < ring->nvars(); ++v) {
                u1 = u1.set_exponent(v, m1.exponent(v) / root);
                u2 = u2.set_exponent(v, m2.exponent(v) / root);
            }
            for (int sign : {1, -1}) {
                Rational e(rn * sign, rd);
                e.canonicalize();
                Polynomial g = Polynomial::monomial(ring, u1) + Polynomial::monomial(ring, u2, e);
                Polynomial h(ring);
                if (p.try_exact_divide(g, h) && usable(g, h))
                    return g;
            }
        }
    }

    // four-term products of two binomials
    if (terms.size() == 4) {
        // largest term factors as (largest of g) * (largest of h)
        for (int partner : {1, 2}) {
            const Monomial& m0 = terms[0].mono;
            const Monomial& mp = terms[partner].mono;
            Monomial u1 = Monomial::gcd(m0, mp);
            if (auto v1 = m0.try_divide(u1)) {
                auto u2 = terms[partner].mono.try_divide(*v1); // mp = u2 * v1
                if (u2) {
                    Rational a = terms[partner].coeff / terms[0].coeff;
                    Polynomial g =
                        Polynomial::monomial(ring, u1) + Polynomial::monomial(ring, *u2, a);
                    Polynomial h(ring);
                    if (p.try_exact_divide(g, h) && usable(g, h))
                        return g;
                }
            }
        }
    }

    // perfect squares of binomials: a^2 m1^2 + 2ab m1 m2 + b^2 m2^2
    if (terms.size() == 3) {
        const Monomial &m1 = terms[0].mono, &m3 = terms[2].mono;
        bool even = true;
        Monomial u1(ring->nvars()), u2(ring->nvars());
        for (int v = 0; v < ring->nvars() && even; ++v) {
            if (m1.exponent(v) % 2 || m3.exponent(v) % 2)
                even = false;
            else {
                u1 = u1.set_exponent(v, m1.exponent(v) / 2);
                u2 = u2.set_exponent(v, m3.exponent(v) / 2);
            }
        }
        if (even && u1 * u2 == terms[1].mono) {
            Rational ratio = terms[2].coeff / terms[0].coeff;
            mpz_class rn, rd;
            if (ratio > 0 &&
                mpz_root(rn.get_mpz_t(), mpq_class(ratio).get_num().get_mpz_t(), 2) &&
                mpz_root(rd.get_mpz_t(), mpq_class(ratio).get_den().get_mpz_t(), 2)) {
                for (int sign : {1, -1}) {
                    Rational b(rn * sign, rd);
                    b.canonicalize();
                    Polynomial g =
                        Polynomial::monomial(ring, u1) + Polynomial::monomial(ring, u2, b);
                    Polynomial h(ring);
                    if (p.try_exact_divide(g, h) && usable(g, h))
                        return g;
                }
            }
        }
    }

    return std::nullopt;
}

// Randomized zero-divisor search; a found witness doubles as a splitter.
std::optional<Polynomial> primality_witness(const Ideal& ideal) {
    std::vector<Polynomial> probes = random_test_polys(ideal, 10);
    std::vector<Polynomial> reduced;
    for (const auto& p : probes) {
        Polynomial r = ideal.normal_form(p);
        if (!r.is_zero())
            reduced.push_back(std::move(r));
    }
    for (size_t i = 0; i < reduced.size(); ++i)
        for (size_t j = i; j < reduced.size(); ++j)
            if (ideal.contains(reduced[i] * reduced[j]))
                return reduced[i];
    return std::nullopt;
}

bool trace_enabled() {
    static const bool on = std::getenv("CHARCYCLE_TRACE") != nullptr;
    return on;
}

void split_into_primes(const Ideal& ideal, SplitContext& ctx, std::vector<Ideal>& leaves) {
    if (--ctx.node_budget < 0)
        throw EngineError("prime decomposition exceeded its node budget");
    const auto& gb = ideal.groebner_basis();
    if (gb.empty())
        throw EngineError("cannot decompose the zero ideal");
    if (ideal.is_unit())
        return;

    std::vector<const Polynomial*> by_degree;
    for (const auto& g : gb)
        by_degree.push_back(&g);
    std::sort(by_degree.begin(), by_degree.end(),
              [](const Polynomial* a, const Polynomial* b) { return a->degree() < b->degree(); });
    for (const Polynomial* g : by_degree) {
        if (auto factor = find_factor(ideal, *g, ctx)) {
            if (trace_enabled())
                std::cerr << "[split] on " << factor->to_string() << " from "
                          << g->to_string() << "\n";
            split_into_primes(ideal.saturate(*factor), ctx, leaves);
            split_into_primes(ideal.plus({*factor}), ctx, leaves);
            return;
        }
    }
    if (auto witness = primality_witness(ideal)) {
        if (trace_enabled())
            std::cerr << "[split] witness " << witness->to_string() << "\n";
        split_into_primes(ideal.saturate(*witness), ctx, leaves);
        split_into_primes(ideal.plus({*witness}), ctx, leaves);
        return;
    }
    if (trace_enabled())
        std::cerr << "[leaf] " << ideal.canonical_key() << "\n";
    leaves.push_back(ideal);
}

ComponentList general_minimal_primes(const Ideal& ideal,
                                     const std::vector<Polynomial>& factor_hints) {
    SplitContext ctx;
    for (const auto& h : factor_hints)
        if (!h.is_zero() && !h.is_constant())
            ctx.candidates.push_back(h.map_to_ring(ideal.ring()));
    std::vector<Ideal> leaves;
    split_into_primes(ideal, ctx, leaves);

    // dedupe by canonical basis, keep inclusion-minimal
    std::map<std::string, Ideal> unique;
    for (const auto& leaf : leaves)
        unique.emplace(leaf.canonical_key(), leaf);
    std::vector<Ideal> primes;
    for (auto& [key, p] : unique)
        primes.push_back(std::move(p));
    ComponentList result;
    for (size_t i = 0; i < primes.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < primes.size(); ++j) {
            if (i == j)
                continue;
            if (primes[i].contains_ideal(primes[j]) &&
                primes[i].canonical_key() != primes[j].canonical_key()) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            result.push_back({primes[i], PrimeFlag::Minimal, dimension(primes[i])});
    }
    std::sort(result.begin(), result.end(), [](const Component& a, const Component& b) {
        if (a.dim != b.dim)
            return a.dim > b.dim;
        return a.prime.canonical_key() < b.prime.canonical_key();
    });
    return result;
}

// Pseudo-primary part of `ideal` along minimal prime `target`: saturate away
// the other minimal components, then purify by witnesses g outside the prime
// with (Q : g) != Q.
Ideal purified_primary_part(const Ideal& ideal, const Ideal& target,
                            const std::vector<Component>& min_primes) {
    Ideal part = ideal;
    for (const auto& comp : min_primes) {
        if (Ideal::same_ideal(comp.prime, target))
            continue;
        for (const auto& g : comp.prime.groebner_basis())
            if (!target.contains(g)) {
                part = part.saturate(g);
                break;
            }
    }
    const RingPtr& ring = ideal.ring();
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Polynomial> pool;
        for (int v = 0; v < ring->nvars(); ++v)
            pool.push_back(Polynomial::variable(ring, v));
        for (const auto& p : random_test_polys(part, 6))
            pool.push_back(p);
        for (const auto& g : pool) {
            if (target.contains(g))
                continue;
            Ideal sat = part.saturate(g);
            if (!Ideal::same_ideal(sat, part)) {
                part = sat;
                changed = true;
                break;
            }
        }
    }
    return part;
}

ComponentList general_associated_primes(const Ideal& ideal,
                                        const std::vector<Polynomial>& factor_hints, int depth) {
    ComponentList result = general_minimal_primes(ideal, factor_hints);
    if (depth > 5)
        return result;
    // top part: intersection of the (purified) primary parts of the minimal
    // primes; a strict residual betrays embedded structure
    bool first = true;
    Ideal top(ideal.ring());
    for (const auto& comp : result) {
        Ideal part = purified_primary_part(ideal, comp.prime, result);
        top = first ? part : Ideal::intersect(top, part);
        first = false;
    }
    if (first || top.contains_ideal(ideal) == false)
        return result;
    bool equal = ideal.contains_ideal(top);
    if (equal)
        return result;
    Ideal residual = ideal.quotient(top);
    if (residual.is_unit() || Ideal::same_ideal(residual, ideal))
        return result;
    for (const auto& comp : general_associated_primes(residual, factor_hints, depth + 1)) {
        bool known = false;
        for (const auto& existing : result)
            if (Ideal::same_ideal(existing.prime, comp.prime)) {
                known = true;
                break;
            }
        if (!known)
            result.push_back({comp.prime, PrimeFlag::Embedded, comp.dim});
    }
    std::sort(result.begin(), result.end(), [](const Component& a, const Component& b) {
        if (a.dim != b.dim)
            return a.dim > b.dim;
        return a.prime.canonical_key() < b.prime.canonical_key();
    });
    return result;
}

} // namespace

ComponentList minimal_primes(const Ideal& ideal, const std::vector<Polynomial>& factor_hints) {
    if (ideal.is_unit())
        return {};
    if (ideal.is_zero())
        return {{ideal, PrimeFlag::Minimal, ideal.ring()->nvars()}};
    if (is_monomial_ideal(ideal)) {
        ComponentList all = monomial_associated_primes(ideal);
        ComponentList min;
        for (auto& c : all)
            if (c.flag == PrimeFlag::Minimal)
                min.push_back(std::move(c));
        return min;
    }
    return general_minimal_primes(ideal, factor_hints);
}

ComponentList associated_primes(const Ideal& ideal, const std::vector<Polynomial>& factor_hints) {
    if (ideal.is_unit())
        return {};
    if (ideal.is_zero())
        return {{ideal, PrimeFlag::Minimal, ideal.ring()->nvars()}};
    if (is_monomial_ideal(ideal))
        return monomial_associated_primes(ideal);
    return general_associated_primes(ideal, factor_hints, 0);
}

ComponentList conormal_components(const Ideal& divisor, const RingPtr& base_ring,
                                  const std::vector<Polynomial>& factor_hints) {
    const RingPtr& doubled = divisor.ring();
    if (!doubled->doubled())
        throw MisuseError("conormal_components needs the doubled ring");
    int n = doubled->base_count();
    std::vector<Polynomial> base_hints;
    for (const auto& h : factor_hints)
        if (!h.is_zero() && !h.is_constant())
            base_hints.push_back(h.map_to_ring(base_ring));

    ComponentList result;
    Ideal residual = divisor;
    for (int round = 0;; ++round) {
        if (residual.is_unit())
            break;
        if (round > 4 * n + 8)
            throw EngineError("unresolved component: divisor peeling did not terminate");
        Ideal base = residual.eliminate(doubled->fiber_indices()).map_to_ring(base_ring);
        std::string before = residual.canonical_key();
        bool progress = false;
        for (const auto& bc : minimal_primes(base, base_hints)) {
            Ideal p = conormal_variety_ideal(bc.prime);
            if (!p.contains_ideal(divisor))
                continue;
            bool known = false;
            for (const auto& existing : result)
                if (Ideal::same_ideal(existing.prime, p)) {
                    known = true;
                    break;
                }
            if (!known) {
                result.push_back({p, PrimeFlag::Minimal, dimension(p)});
                progress = true;
            }
            residual = residual.saturate(p);
        }
        if (!progress && !residual.is_unit() && residual.canonical_key() == before)
            throw EngineError("unresolved component: no conormal component over V(" +
                              base.canonical_key() + ")");
    }
    std::sort(result.begin(), result.end(), [](const Component& a, const Component& b) {
        return a.prime.canonical_key() < b.prime.canonical_key();
    });
    return result;
}

long refine_embedded(const Ideal& y_ideal, const Polynomial& f, const Ideal& p_embedded) {
    const RingPtr doubled = p_embedded.ring();
    if (!doubled->doubled())
        throw MisuseError("refine_embedded: prime must live in the doubled ring");
    DivisorIdeal divisor = divisor_ideal(ConormalInput(y_ideal, f));
    ComponentList comps = conormal_components(divisor.ideal, y_ideal.ring(), {f});
    for (const auto& c : comps)
        if (Ideal::same_ideal(c.prime, p_embedded))
            throw MisuseError("refine_embedded: prime is a minimal component, not embedded");
    if (!p_embedded.contains_ideal(divisor.ideal))
        throw MisuseError("refine_embedded: prime does not contain the divisor ideal");

    // restrict Y to the prime's base projection and rerun the construction
    Ideal base_projection =
        p_embedded.eliminate(doubled->fiber_indices()).map_to_ring(y_ideal.ring());
    Ideal restricted = y_ideal.plus(base_projection);
    if (restricted.radical_contains(f))
        return 0; // the divisor dies on the restricted base
    DivisorIdeal local = divisor_ideal(ConormalInput(restricted, f));
    ComponentList local_comps = conormal_components(local.ideal, y_ideal.ring(), {f});
    std::vector<Ideal> primes;
    for (const auto& c : local_comps)
        primes.push_back(c.prime);
    for (const auto& c : local_comps)
        if (Ideal::same_ideal(c.prime, p_embedded))
            return multiplicity_along(local.ideal, p_embedded, &primes);
    return 0;
}

} // namespace charcycle
