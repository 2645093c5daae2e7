#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "charcycle/cycle.hpp"

namespace charcycle {

/// The Cech complex of M with respect to f_1..f_s, seen as an s-hypercube of
/// localizations: vertex alpha holds CC(M_{f_alpha}), f_alpha the product of
/// the chosen generators. Vertices index by bitmask.
struct Hypercube {
    int s = 0;
    std::vector<Localizer> factors;
    std::vector<CharCycle> vertices; // size 2^s

    const CharCycle& vertex(uint32_t alpha) const { return vertices.at(alpha); }
};

/// Pruned subcycles (Algorithm 4.3) plus the removal log per direction.
struct PrunedCube {
    int s = 0;
    std::vector<CharCycle> vertices;
    /// removed[j] lists, per pruning direction j (0-based), the common
    /// multiset removed from each pair (alpha, alpha + e_j).
    std::vector<std::map<uint32_t, CharCycle>> removed;
};

struct LyubeznikTable {
    int d = 0; // dim R/I
    std::vector<std::vector<long>> lambda; // (d+1) x (d+1), upper triangular

    long at(int p, int i) const { return lambda.at(p).at(i); }
};

/// Populate all 2^s vertices by localizing along cube edges (each vertex from
/// a parent with one fewer generator; zero vertices short-circuit upward).
Hypercube build_hypercube(const CharCycle& cc_m, std::vector<Localizer> factors,
                          Strategy strategy, LocalizeContext* ctx = nullptr);

/// Algorithm 4.3: for j = 1..s remove from each edge pair in direction j the
/// component multiset the two current cycles share.
PrunedCube prune(const Hypercube& cube);

/// Theorem T: CC(H^r_I(M)) as the sum of the pruned vertices at level r.
std::map<int, CharCycle> local_cohomology_cycles(const PrunedCube& pruned);

/// Signed conservation check: sum over vertices of (-1)^|alpha| CC equals
/// sum over r of (-1)^r CC(H^r) as formal Z-combinations.
bool euler_conserved(const Hypercube& cube, const std::map<int, CharCycle>& cohomology);

/// Validate a caller-declared direct-sum split of cc (the parts must add up
/// to cc exactly); returns the parts.
std::vector<CharCycle> decompose_direct_sum(const CharCycle& cc,
                                            const std::vector<CharCycle>& parts);

struct CechResult {
    Hypercube cube;
    PrunedCube pruned;
    std::map<int, CharCycle> cohomology;
};

/// Full pipeline for one module cycle.
CechResult run_cech(const CharCycle& cc_m, std::vector<Localizer> factors, Strategy strategy,
                    LocalizeContext* ctx = nullptr);

struct LyubeznikResult {
    LyubeznikTable table;
    std::map<int, CharCycle> ideal_cohomology;        // r -> CC(H^r_I(R))
    std::map<int, CechResult> maximal_ideal_runs;     // r -> pipeline at m
};

/// Lyubeznik numbers of R/I: run the Cech pipeline for I, then for each
/// nonzero H^{n-i}_I(R) run the pipeline at the maximal ideal (x_1..x_n) and
/// read lambda_{p,i} off the multiplicity of the origin's conormal.
LyubeznikResult lyubeznik_table(const std::vector<Localizer>& generators, const RingPtr& base,
                                Strategy strategy, LocalizeContext* ctx = nullptr);

} // namespace charcycle
