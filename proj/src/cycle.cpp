#include "charcycle/cycle.hpp"

#include <sstream>

#include "charcycle/cache.hpp"
#include "charcycle/hilbert.hpp"
#include "charcycle/parse.hpp"

namespace charcycle {

ConormalComponent ConormalComponent::from_conormal(const Ideal& q, const RingPtr& base_ring) {
    const RingPtr& doubled = q.ring();
    if (!doubled->doubled())
        throw MisuseError("conormal component needs a doubled ring");
    Ideal base = q.eliminate(doubled->fiber_indices()).map_to_ring(base_ring);
    int dim = dimension(q);
    int base_dim = base.is_zero() ? base_ring->nvars() : dimension(base);
    return ConormalComponent(q, std::move(base), dim, base_dim);
}

void CharCycle::add(ConormalComponent comp, long multiplicity) {
    if (multiplicity == 0)
        return;
    if (multiplicity < 0)
        throw MisuseError("cycle multiplicities must be positive");
    std::string key = comp.key();
    auto [it, fresh] = comps_.emplace(std::move(key), std::make_pair(std::move(comp), multiplicity));
    if (!fresh)
        it->second.second += multiplicity;
}

long CharCycle::multiplicity_of(const std::string& key) const {
    auto it = comps_.find(key);
    return it == comps_.end() ? 0 : it->second.second;
}

std::optional<ConormalComponent> CharCycle::component(const std::string& key) const {
    auto it = comps_.find(key);
    if (it == comps_.end())
        return std::nullopt;
    return it->second.first;
}

CharCycle CharCycle::plus(const CharCycle& other) const {
    CharCycle out = *this;
    if (!out.doubled_)
        out.doubled_ = other.doubled_;
    if (!out.base_)
        out.base_ = other.base_;
    for (const auto& [key, entry] : other.comps_)
        out.add(entry.first, entry.second);
    return out;
}

CharCycle CharCycle::common(const CharCycle& a, const CharCycle& b) {
    CharCycle out(a.doubled_, a.base_);
    for (const auto& [key, entry] : a.comps_) {
        long m = std::min(entry.second, b.multiplicity_of(key));
        if (m > 0)
            out.add(entry.first, m);
    }
    return out;
}

CharCycle CharCycle::minus(const CharCycle& other) const {
    CharCycle out(doubled_, base_);
    for (const auto& [key, entry] : comps_) {
        long m = entry.second - other.multiplicity_of(key);
        if (m < 0)
            throw MisuseError("cycle subtraction would go negative");
        if (m > 0)
            out.add(entry.first, m);
    }
    for (const auto& [key, entry] : other.comps_)
        if (!comps_.count(key))
            throw MisuseError("cycle subtraction: component not present");
    return out;
}

bool CharCycle::submultiset_of(const CharCycle& other) const {
    for (const auto& [key, entry] : comps_)
        if (entry.second > other.multiplicity_of(key))
            return false;
    return true;
}

bool CharCycle::operator==(const CharCycle& other) const {
    if (comps_.size() != other.comps_.size())
        return false;
    for (const auto& [key, entry] : comps_)
        if (other.multiplicity_of(key) != entry.second)
            return false;
    return true;
}

CharCycle zero_section(const RingPtr& doubled) {
    if (!doubled->doubled())
        throw MisuseError("zero_section needs a doubled ring");
    int n = doubled->base_count();
    std::vector<std::string> base_names(doubled->variables().begin(),
                                        doubled->variables().begin() + n);
    RingPtr base = Ring::make(std::move(base_names));
    std::vector<Polynomial> gens;
    for (int v = 0; v < n; ++v)
        gens.push_back(Polynomial::variable(doubled, n + v));
    CharCycle cc(doubled, base);
    cc.add(ConormalComponent::from_conormal(Ideal(doubled, std::move(gens)), base), 1);
    return cc;
}

const std::vector<Polynomial>& Localizer::factor_list() const {
    static const std::vector<Polynomial> empty;
    if (!factors.empty())
        return factors;
    return empty;
}

namespace {

std::string serialize_components(const std::vector<std::pair<ConormalComponent, long>>& comps) {
    std::ostringstream os;
    for (const auto& [comp, mult] : comps) {
        os << mult << "|";
        bool first = true;
        for (const auto& g : comp.conormal.groebner_basis()) {
            os << (first ? "" : ",") << g.to_string();
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::vector<std::pair<ConormalComponent, long>> deserialize_components(const std::string& text,
                                                                       const RingPtr& doubled,
                                                                       const RingPtr& base) {
    std::vector<std::pair<ConormalComponent, long>> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        auto bar = line.find('|');
        if (bar == std::string::npos)
            throw Error("bad cache line");
        long mult = std::stol(line.substr(0, bar));
        std::vector<Polynomial> gens;
        std::string rest = line.substr(bar + 1);
        size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            std::string piece =
                comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
            if (!piece.empty())
                gens.push_back(parse_polynomial(piece, doubled));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        out.emplace_back(ConormalComponent::from_conormal(Ideal(doubled, std::move(gens)), base),
                         mult);
    }
    return out;
}

// One localization cell: the divisor of f over the base variety of `comp`,
// decomposed into weighted conormal components. Memoized.
std::vector<std::pair<ConormalComponent, long>> localize_component(const ConormalComponent& comp,
                                                                   const Polynomial& f,
                                                                   LocalizeContext* ctx) {
    const RingPtr& doubled = comp.conormal.ring();
    const RingPtr& base_ring = comp.base.ring();
    std::string cache_key;
    if (ctx && ctx->cache) {
        cache_key = "cell/v1|" + comp.base.canonical_key() + "|" + f.to_string();
        if (auto hit = ctx->cache->get(cache_key))
            return deserialize_components(*hit, doubled, base_ring);
    }

    std::vector<Polynomial> hints;
    hints.push_back(f);
    if (ctx)
        for (const auto& h : ctx->factor_hints)
            hints.push_back(h);
    for (const auto& g : comp.base.generators())
        hints.push_back(g);

    DivisorIdeal divisor = divisor_ideal(ConormalInput(comp.base, f));
    ComponentList parts = conormal_components(divisor.ideal, base_ring, hints);
    std::vector<Ideal> primes;
    for (const auto& part : parts)
        primes.push_back(part.prime);

    int n = doubled->base_count();
    std::vector<std::pair<ConormalComponent, long>> out;
    for (const auto& part : parts) {
        if (part.dim != n) {
            std::ostringstream os;
            os << "holonomicity violation: divisor component of dimension " << part.dim
               << " (expected " << n << ") over V(" << comp.base.canonical_key() << ") at f = "
               << f.to_string();
            throw EngineError(os.str());
        }
        long mult = multiplicity_along(divisor.ideal, part.prime, &primes);
        out.emplace_back(ConormalComponent::from_conormal(part.prime, base_ring), mult);
    }

    if (ctx && ctx->cache)
        ctx->cache->put(cache_key, serialize_components(out));
    return out;
}

CharCycle localize_once(const CharCycle& cycle, const Polynomial& f, LocalizeContext* ctx) {
    if (f.is_zero())
        throw MisuseError("localization at zero");
    if (f.is_constant())
        return cycle; // M_c = M for units
    CharCycle out(cycle.doubled_ring(), cycle.base_ring());
    for (const auto& [key, entry] : cycle.entries()) {
        const ConormalComponent& comp = entry.first;
        long mult = entry.second;
        if (comp.base.radical_contains(f))
            continue; // f(X_i) = 0: the whole contribution is dropped
        out.add(comp, mult);
        for (const auto& [gamma, gamma_mult] : localize_component(comp, f, ctx))
            out.add(gamma, mult * gamma_mult);
    }
    return out;
}

} // namespace

CharCycle localize_cycle(const CharCycle& cycle, const Localizer& f, Strategy strategy,
                         LocalizeContext* ctx) {
    if (cycle.is_zero()) {
        if (f.poly.is_zero())
            throw MisuseError("localization at zero");
        return cycle;
    }
    if (strategy == Strategy::Iterative && !f.factors.empty()) {
        CharCycle current = cycle;
        for (const auto& factor : f.factors)
            current = localize_once(current, factor, ctx);
        return current;
    }
    return localize_once(cycle, f.poly, ctx);
}

Ideal component_support(const ConormalComponent& comp) { return comp.base; }

std::vector<Ideal> support(const CharCycle& cycle) {
    std::map<std::string, Ideal> seen;
    for (const auto& [key, entry] : cycle.entries())
        seen.emplace(entry.first.base.canonical_key(), entry.first.base);
    std::vector<Ideal> out;
    for (auto& [k, ideal] : seen)
        out.push_back(std::move(ideal));
    return out;
}

ConormalComponent component_of_variety(const Ideal& base_ideal) {
    Ideal q = conormal_variety_ideal(base_ideal);
    return ConormalComponent::from_conormal(q, base_ideal.ring());
}

} // namespace charcycle
