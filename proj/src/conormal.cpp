#include "charcycle/conormal.hpp"

#include <map>
#include <mutex>

#include "charcycle/hilbert.hpp"
#include "charcycle/modgb.hpp"

namespace charcycle {

namespace {

std::mutex g_doubled_mu;
std::map<std::vector<std::string>, RingPtr> g_doubled;

// Laplace expansion along the first column, memoized on the (row, column)
// index sets.
class MinorTable {
  public:
    MinorTable(const std::vector<std::vector<Polynomial>>& matrix, RingPtr ring)
        : m_(matrix), ring_(std::move(ring)) {}

    Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols) {
        auto key = std::make_pair(rows, cols);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        Polynomial det(ring_);
        if (rows.empty()) {
            det = Polynomial::constant(ring_, 1);
        } else {
            std::vector<int> subcols(cols.begin() + 1, cols.end());
            for (size_t i = 0; i < rows.size(); ++i) {
                const Polynomial& entry = m_[rows[i]][cols[0]];
                if (entry.is_zero())
                    continue;
                std::vector<int> subrows;
                for (size_t k = 0; k < rows.size(); ++k)
                    if (k != i)
                        subrows.push_back(rows[k]);
                Polynomial cofactor = entry * minor(subrows, subcols);
                det = (i % 2 == 0) ? det + cofactor : det - cofactor;
            }
        }
        memo_.emplace(std::move(key), det);
        return det;
    }

  private:
    const std::vector<std::vector<Polynomial>>& m_;
    RingPtr ring_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo_;
};

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<std::vector<Polynomial>> gradient_rows(const Ideal& base_ideal,
                                                   const Polynomial* f) {
    const RingPtr& ring = base_ideal.ring();
    std::vector<std::vector<Polynomial>> rows;
    auto add_row = [&](const Polynomial& g) {
        std::vector<Polynomial> row;
        for (int v = 0; v < ring->nvars(); ++v)
            row.push_back(g.partial_derivative(v));
        rows.push_back(std::move(row));
    };
    if (f)
        add_row(*f);
    for (const auto& g : base_ideal.generators())
        add_row(g);
    return rows;
}

// J = ({ (dx_1..dx_n) . b : b in ker }) + extension of `extra`, in R[x,dx].
Ideal contract_kernel(const Ideal& base_ideal, const Polynomial* f, const Ideal& extra) {
    const RingPtr& base = base_ideal.ring();
    RingPtr doubled = doubled_ring(base);
    int n = base->nvars();
    std::vector<Polynomial> gens;
    if (base_ideal.is_zero() && !f) {
        // kernel of the zero map is everything: J = (dx_1, ..., dx_n)
        for (int v = 0; v < n; ++v)
            gens.push_back(Polynomial::variable(doubled, n + v));
    } else {
        Submodule kernel = kernel_mod(gradient_rows(base_ideal, f), extra);
        for (const auto& b : kernel.generators) {
            Polynomial dot(doubled);
            for (int v = 0; v < n; ++v)
                dot = dot + Polynomial::variable(doubled, n + v) * b.components[v].map_to_ring(doubled);
            gens.push_back(std::move(dot));
        }
    }
    for (const auto& g : extra.generators())
        gens.push_back(g.map_to_ring(doubled));
    return Ideal(doubled, std::move(gens));
}

// Saturate `ideal` (doubled ring) by a base-ring locus ideal, generator-wise.
Ideal saturate_by_base_locus(Ideal ideal, const Ideal& locus) {
    if (locus.is_unit() || locus.is_zero())
        return ideal;
    const RingPtr& doubled = ideal.ring();
    bool first = true;
    Ideal result(doubled);
    for (const auto& g : locus.generators()) {
        if (g.is_constant())
            return ideal; // unit generator: empty locus
        Ideal s = ideal.saturate(g.map_to_ring(doubled));
        result = first ? s : Ideal::intersect(result, s);
        first = false;
    }
    return first ? ideal : result;
}

} // namespace

ConormalInput::ConormalInput(Ideal base, Polynomial poly)
    : base_ideal(std::move(base)), f(std::move(poly)) {
    require_same_ring(base_ideal.ring(), f.ring(), "ConormalInput");
    if (f.is_zero())
        throw MisuseError("localizing polynomial is zero");
    if (base_ideal.is_unit())
        throw MisuseError("base ideal is the unit ideal");
    if (base_ideal.ring()->doubled())
        throw MisuseError("base data must live in the base ring");
}

RingPtr doubled_ring(const RingPtr& base) {
    std::lock_guard<std::mutex> lock(g_doubled_mu);
    auto it = g_doubled.find(base->variables());
    if (it != g_doubled.end())
        return it->second;
    RingPtr d = Ring::make_doubled(base);
    g_doubled.emplace(base->variables(), d);
    return d;
}

std::vector<Polynomial> jacobian_minors(const Ideal& base_ideal) {
    const RingPtr& ring = base_ideal.ring();
    if (base_ideal.is_zero())
        return {Polynomial::constant(ring, 1)}; // codim 0: smooth everywhere
    int n = ring->nvars();
    int c = n - dimension(base_ideal);
    if (c == 0)
        return {Polynomial::constant(ring, 1)};
    const auto& gens = base_ideal.generators();
    int d = static_cast<int>(gens.size());
    if (c > d)
        throw EngineError("codimension exceeds the number of generators");
    std::vector<std::vector<Polynomial>> jac = gradient_rows(base_ideal, nullptr);
    MinorTable table(jac, ring);
    std::vector<std::vector<int>> row_sets, col_sets;
    subsets_of_size(d, c, row_sets);
    subsets_of_size(n, c, col_sets);
    std::vector<Polynomial> minors;
    for (const auto& rows : row_sets)
        for (const auto& cols : col_sets) {
            Polynomial m = table.minor(rows, cols);
            if (!m.is_zero())
                minors.push_back(std::move(m));
        }
    return minors;
}

Ideal bad_locus_ideal(const Ideal& base_ideal, const Polynomial& f) {
    const RingPtr& ring = base_ideal.ring();
    std::vector<Polynomial> grad;
    for (int v = 0; v < ring->nvars(); ++v)
        grad.push_back(f.partial_derivative(v));
    Ideal critical = base_ideal.plus(grad);
    Ideal singular = base_ideal.plus(jacobian_minors(base_ideal));
    return Ideal::intersect(critical, singular);
}

Ideal relative_conormal_ideal(const ConormalInput& input) {
    if (input.base_ideal.radical_contains(input.f))
        throw ComponentDiesError("f vanishes on Y: component dies under localization");
    const RingPtr& base = input.base_ideal.ring();
    Ideal j = contract_kernel(input.base_ideal, &input.f, input.base_ideal);
    // J_sat = J : (I°)^inf; the bad locus is the union of the critical locus
    // and Sing(Y), so saturating by the two pieces in turn is the same thing.
    std::vector<Polynomial> grad;
    for (int v = 0; v < base->nvars(); ++v)
        grad.push_back(input.f.partial_derivative(v));
    Ideal critical = input.base_ideal.plus(grad);
    Ideal singular = input.base_ideal.plus(jacobian_minors(input.base_ideal));
    Ideal j_sat = saturate_by_base_locus(j, critical);
    j_sat = saturate_by_base_locus(j_sat, singular);
    return j_sat;
}

DivisorIdeal divisor_ideal(const ConormalInput& input) {
    Ideal j_sat = relative_conormal_ideal(input);
    const RingPtr& doubled = j_sat.ring();
    Ideal with_f = input.base_ideal.plus({input.f});
    Ideal j_f = contract_kernel(input.base_ideal, &input.f, with_f);
    std::vector<Polynomial> gens = j_sat.generators();
    gens.push_back(input.f.map_to_ring(doubled));
    for (const auto& g : j_f.generators())
        gens.push_back(g);
    return DivisorIdeal{Ideal(doubled, std::move(gens)), input.base_ideal, input.f};
}

// The conormal of an irreducible Y is computed parametrically: eliminate the
// multipliers from I(Y) + (dx - lambda Jac(Y)). The graph ideal is prime when
// I(Y) is, so the elimination is the honest (prime) vanishing ideal of
// T*_Y X, which the multiplicity bookkeeping depends on.
Ideal conormal_variety_ideal(const Ideal& base_ideal) {
    if (base_ideal.is_unit())
        throw MisuseError("conormal of the empty variety");
    static std::mutex memo_mu;
    static std::map<std::pair<std::vector<std::string>, std::string>, Ideal> memo;
    auto key = std::make_pair(base_ideal.ring()->variables(), base_ideal.canonical_key());
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    const RingPtr& base = base_ideal.ring();
    RingPtr doubled = doubled_ring(base);
    int n = base->nvars();
    const auto& gens = base_ideal.generators();
    int d = static_cast<int>(gens.size());

    std::vector<std::string> names = doubled->variables();
    for (int i = 0; i < d; ++i)
        names.push_back("#l" + std::to_string(i));
    RingPtr ext = Ring::make(names);

    std::vector<Polynomial> graph;
    for (const auto& g : gens)
        graph.push_back(g.map_to_ring(ext));
    for (int j = 0; j < n; ++j) {
        Polynomial eq = Polynomial::variable(ext, n + j);
        for (int i = 0; i < d; ++i)
            eq = eq - Polynomial::variable(ext, 2 * n + i) *
                          gens[i].partial_derivative(j).map_to_ring(ext);
        graph.push_back(std::move(eq));
    }
    std::vector<int> lambdas;
    for (int i = 0; i < d; ++i)
        lambdas.push_back(2 * n + i);
    Ideal eliminated = Ideal(ext, std::move(graph)).eliminate(lambdas);
    Ideal result = eliminated.map_to_ring(doubled);

    std::lock_guard<std::mutex> lock(memo_mu);
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace charcycle
