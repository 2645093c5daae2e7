#include "charcycle/cech.hpp"

#include <bit>

#include "charcycle/hilbert.hpp"

namespace charcycle {

namespace {

int popcount(uint32_t x) { return std::popcount(x); }

} // namespace

Hypercube build_hypercube(const CharCycle& cc_m, std::vector<Localizer> factors,
                          Strategy strategy, LocalizeContext* ctx) {
    Hypercube cube;
    cube.s = static_cast<int>(factors.size());
    if (cube.s < 1)
        throw MisuseError("build_hypercube needs at least one generator");
    if (cube.s > 30)
        throw MisuseError("too many generators");
    for (const auto& f : factors)
        if (f.poly.is_zero())
            throw MisuseError("zero generator in the Cech complex");
    cube.factors = std::move(factors);
    uint32_t count = 1u << cube.s;
    cube.vertices.resize(count);
    cube.vertices[0] = cc_m;
    for (uint32_t alpha = 1; alpha < count; ++alpha) {
        int j = std::countr_zero(alpha);
        uint32_t parent = alpha & (alpha - 1);
        const CharCycle& from = cube.vertices[parent];
        if (from.is_zero()) {
            cube.vertices[alpha] = from; // localizing the zero module
            continue;
        }
        cube.vertices[alpha] = localize_cycle(from, cube.factors[j], strategy, ctx);
    }
    return cube;
}

PrunedCube prune(const Hypercube& cube) {
    PrunedCube out;
    out.s = cube.s;
    out.vertices = cube.vertices;
    out.removed.resize(cube.s);
    uint32_t count = 1u << cube.s;
    for (int j = 0; j < cube.s; ++j) {
        uint32_t bit = 1u << j;
        for (uint32_t alpha = 0; alpha < count; ++alpha) {
            if (alpha & bit)
                continue;
            CharCycle shared = CharCycle::common(out.vertices[alpha], out.vertices[alpha | bit]);
            if (shared.is_zero())
                continue;
            out.vertices[alpha] = out.vertices[alpha].minus(shared);
            out.vertices[alpha | bit] = out.vertices[alpha | bit].minus(shared);
            out.removed[j].emplace(alpha, std::move(shared));
        }
    }
    return out;
}

std::map<int, CharCycle> local_cohomology_cycles(const PrunedCube& pruned) {
    std::map<int, CharCycle> result;
    uint32_t count = 1u << pruned.s;
    for (uint32_t alpha = 0; alpha < count; ++alpha) {
        int r = popcount(alpha);
        auto it = result.find(r);
        if (it == result.end())
            result.emplace(r, pruned.vertices[alpha]);
        else
            it->second = it->second.plus(pruned.vertices[alpha]);
    }
    return result;
}

bool euler_conserved(const Hypercube& cube, const std::map<int, CharCycle>& cohomology) {
    std::map<std::string, long> lhs, rhs;
    uint32_t count = 1u << cube.s;
    for (uint32_t alpha = 0; alpha < count; ++alpha) {
        int sign = popcount(alpha) % 2 == 0 ? 1 : -1;
        for (const auto& [key, entry] : cube.vertices[alpha].entries())
            lhs[key] += sign * entry.second;
    }
    for (const auto& [r, cc] : cohomology) {
        int sign = r % 2 == 0 ? 1 : -1;
        for (const auto& [key, entry] : cc.entries())
            rhs[key] += sign * entry.second;
    }
    auto trim = [](std::map<std::string, long>& m) {
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    trim(lhs);
    trim(rhs);
    return lhs == rhs;
}

std::vector<CharCycle> decompose_direct_sum(const CharCycle& cc,
                                            const std::vector<CharCycle>& parts) {
    CharCycle total(cc.doubled_ring(), cc.base_ring());
    for (const auto& part : parts)
        total = total.plus(part);
    if (total != cc)
        throw MisuseError("direct-sum split does not partition the cycle");
    return parts;
}

CechResult run_cech(const CharCycle& cc_m, std::vector<Localizer> factors, Strategy strategy,
                    LocalizeContext* ctx) {
    CechResult result;
    result.cube = build_hypercube(cc_m, std::move(factors), strategy, ctx);
    result.pruned = prune(result.cube);
    result.cohomology = local_cohomology_cycles(result.pruned);
    if (!euler_conserved(result.cube, result.cohomology))
        throw EngineError("pruning broke Euler-characteristic conservation");
    return result;
}

LyubeznikResult lyubeznik_table(const std::vector<Localizer>& generators, const RingPtr& base,
                                Strategy strategy, LocalizeContext* ctx) {
    if (generators.empty())
        throw MisuseError("lyubeznik_table needs generators");
    int n = base->nvars();
    RingPtr doubled = doubled_ring(base);

    std::vector<Polynomial> ideal_gens;
    for (const auto& g : generators)
        ideal_gens.push_back(g.poly);
    Ideal ideal(base, ideal_gens);
    if (ideal.is_unit())
        throw MisuseError("lyubeznik_table: unit ideal");
    int d = dimension(ideal);

    LyubeznikResult result;
    CechResult first = run_cech(zero_section(doubled), generators, strategy, ctx);
    result.ideal_cohomology = std::move(first.cohomology);

    result.table.d = d;
    result.table.lambda.assign(d + 1, std::vector<long>(d + 1, 0));

    // the origin's conormal T*_E X = V(x_1..x_n)
    std::vector<Polynomial> origin_gens;
    for (int v = 0; v < n; ++v)
        origin_gens.push_back(Polynomial::variable(doubled, v));
    std::string origin_key = Ideal(doubled, origin_gens).canonical_key();

    std::vector<Localizer> variables;
    for (int v = 0; v < n; ++v)
        variables.push_back({Polynomial::variable(base, v), {}});

    for (const auto& [r, cc] : result.ideal_cohomology) {
        if (cc.is_zero())
            continue;
        int i = n - r;
        if (i < 0 || i > d)
            throw EngineError("local cohomology outside the expected range");
        CechResult at_m = run_cech(cc, variables, strategy, ctx);
        for (const auto& [p, hp] : at_m.cohomology) {
            long lam = hp.multiplicity_of(origin_key);
            // H^p_m is supported at the origin: nothing but T*_E X may occur
            for (const auto& [key, entry] : hp.entries())
                if (key != origin_key)
                    throw EngineError("H^p_m carries a component away from the origin");
            if (lam != 0) {
                if (p < 0 || p > d)
                    throw EngineError("lambda index out of range");
                result.table.lambda[p][i] += lam;
            }
        }
        result.maximal_ideal_runs.emplace(r, std::move(at_m));
    }
    return result;
}

} // namespace charcycle
