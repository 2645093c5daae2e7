#include "charcycle/modgb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace charcycle {

namespace {

// Position-over-term: lower position wins, grevlex inside a position. The
// value positions come first so that zero-value elements are exactly those
// whose lead falls in the tracking block.
struct ModMono {
    int pos;
    Monomial mono;
};

const MonomialOrder& grevlex() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

int pot_compare(const ModMono& a, const ModMono& b) {
    if (a.pos != b.pos)
        return a.pos < b.pos ? 1 : -1;
    return grevlex().compare(a.mono, b.mono);
}

struct ModMonoGreater {
    bool operator()(const ModMono& a, const ModMono& b) const { return pot_compare(a, b) > 0; }
};

struct ModMonoLessRaw {
    bool operator()(const ModMono& a, const ModMono& b) const {
        if (a.pos != b.pos)
            return a.pos < b.pos;
        return a.mono < b.mono;
    }
};

using MVec = std::map<ModMono, Rational, ModMonoLessRaw>; // raw-keyed sparse vector

ModMono leading(const MVec& v) {
    auto best = v.begin();
    for (auto it = v.begin(); it != v.end(); ++it)
        if (pot_compare(it->first, best->first) > 0)
            best = it;
    return best->first;
}

void axpy(MVec& target, const Rational& c, const ModMono& shift, const MVec& source) {
    for (const auto& [mm, coeff] : source) {
        ModMono m{mm.pos, mm.mono * shift.mono};
        auto [it, fresh] = target.emplace(m, c * coeff);
        if (!fresh) {
            it->second += c * coeff;
            if (it->second == 0)
                target.erase(it);
        } else if (it->second == 0) {
            target.erase(it);
        }
    }
}

struct ModElem {
    MVec vec;
    ModMono lead{0, Monomial()};
    Rational lead_coeff;
};

ModElem finalize(MVec v) {
    ModElem e;
    e.lead = leading(v);
    e.lead_coeff = v.at(e.lead);
    // monic
    if (e.lead_coeff != 1) {
        Rational inv = Rational(1) / e.lead_coeff;
        for (auto& [m, c] : v)
            c *= inv;
        e.lead_coeff = 1;
    }
    e.vec = std::move(v);
    return e;
}

// Full normal form against the basis.
MVec mod_reduce(MVec work, const std::vector<ModElem>& basis) {
    MVec remainder;
    while (!work.empty()) {
        ModMono lead = leading(work);
        Rational lc = work.at(lead);
        const ModElem* reducer = nullptr;
        for (const auto& b : basis) {
            if (b.lead.pos == lead.pos && b.lead.mono.divides(lead.mono)) {
                reducer = &b;
                break;
            }
        }
        if (!reducer) {
            remainder.emplace(lead, lc);
            work.erase(lead);
            continue;
        }
        ModMono shift{0, *lead.mono.try_divide(reducer->lead.mono)};
        axpy(work, -lc / reducer->lead_coeff, shift, reducer->vec);
    }
    return remainder;
}

struct MPairKey {
    int deg;
    Monomial lcm;
    int pos;
    int i, j;
};

struct MPairLess {
    bool operator()(const MPairKey& a, const MPairKey& b) const {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        int c = grevlex().compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.pos != b.pos)
            return a.pos < b.pos;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<ModElem> module_buchberger(std::vector<MVec> gens) {
    std::vector<ModElem> basis;
    std::set<MPairKey, MPairLess> pairs;
    std::set<std::pair<int, int>> pending;

    auto add_element = [&](MVec v) {
        ModElem e = finalize(std::move(v));
        int idx = static_cast<int>(basis.size());
        for (int k = 0; k < idx; ++k) {
            if (basis[k].lead.pos != e.lead.pos)
                continue; // S-pairs only within one position
            Monomial l = Monomial::lcm(basis[k].lead.mono, e.lead.mono);
            pairs.insert({l.degree(), l, e.lead.pos, k, idx});
            pending.insert({k, idx});
        }
        basis.push_back(std::move(e));
    };

    for (auto& g : gens) {
        MVec r = mod_reduce(std::move(g), basis);
        if (!r.empty())
            add_element(std::move(r));
    }

    while (!pairs.empty()) {
        MPairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        pending.erase({pk.i, pk.j});
        const ModElem& f = basis[pk.i];
        const ModElem& g = basis[pk.j];
        // Chain criterion (the coprime criterion is not valid for modules).
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j || basis[k].lead.pos != pk.pos)
                continue;
            if (!basis[k].lead.mono.divides(pk.lcm))
                continue;
            int lo1 = std::min(pk.i, k), hi1 = std::max(pk.i, k);
            int lo2 = std::min(pk.j, k), hi2 = std::max(pk.j, k);
            if (!pending.count({lo1, hi1}) && !pending.count({lo2, hi2}))
                skip = true;
        }
        if (skip)
            continue;
        MVec s;
        axpy(s, Rational(1), {0, *pk.lcm.try_divide(f.lead.mono)}, f.vec);
        axpy(s, Rational(-1), {0, *pk.lcm.try_divide(g.lead.mono)}, g.vec);
        MVec r = mod_reduce(std::move(s), basis);
        if (!r.empty())
            add_element(std::move(r));
    }

    // Minimalize and tail-reduce for a deterministic generating set.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j])
                continue;
            if (basis[j].lead.pos == basis[i].lead.pos &&
                basis[j].lead.mono.divides(basis[i].lead.mono) &&
                !(basis[i].lead.mono == basis[j].lead.mono && j > i))
                keep[i] = false;
        }
    std::vector<ModElem> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i])
            minimal.push_back(std::move(basis[i]));
    std::vector<ModElem> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModElem> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(finalize(mod_reduce(minimal[i].vec, others)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const ModElem& a, const ModElem& b) {
        return pot_compare(a.lead, b.lead) < 0;
    });
    return reduced;
}

} // namespace

bool VectorPolynomial::is_zero() const {
    for (const auto& p : components)
        if (!p.is_zero())
            return false;
    return true;
}

Submodule kernel_mod(const std::vector<std::vector<Polynomial>>& rows, const Ideal& ideal) {
    const int m = static_cast<int>(rows.size());
    if (m == 0)
        throw MisuseError("kernel_mod: empty matrix");
    const int k = static_cast<int>(rows[0].size());
    RingPtr ring;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k)
            throw MisuseError("kernel_mod: ragged matrix");
        for (const auto& entry : row) {
            if (!ring && entry.ring())
                ring = entry.ring();
            if (entry.ring())
                require_same_ring(ring, entry.ring(), "kernel_mod");
        }
    }
    if (!ring)
        ring = ideal.ring();
    require_same_ring(ring, ideal.ring(), "kernel_mod");

    // Positions [0, m) hold the value A s, positions [m, m+k) track s.
    std::vector<MVec> gens;
    for (int j = 0; j < k; ++j) {
        MVec v;
        for (int i = 0; i < m; ++i)
            for (const auto& t : rows[i][j].terms())
                v.emplace(ModMono{i, t.mono}, t.coeff);
        v.emplace(ModMono{m + j, Monomial(ring->nvars())}, Rational(1));
        gens.push_back(std::move(v));
    }
    for (const auto& h : ideal.generators())
        for (int i = 0; i < m; ++i) {
            MVec v;
            for (const auto& t : h.terms())
                v.emplace(ModMono{i, t.mono}, t.coeff);
            gens.push_back(std::move(v));
        }

    std::vector<ModElem> gb = module_buchberger(std::move(gens));

    Submodule result;
    result.rank = k;
    for (const auto& e : gb) {
        if (e.lead.pos < m)
            continue; // nonzero value part
        std::vector<std::vector<Term>> comps(k);
        for (const auto& [mm, c] : e.vec) {
            if (mm.pos < m)
                throw EngineError("kernel_mod: tracking element with value support");
            comps[mm.pos - m].push_back({c, mm.mono});
        }
        VectorPolynomial vp;
        for (int j = 0; j < k; ++j)
            vp.components.push_back(Polynomial::from_terms(ring, std::move(comps[j])));
        result.generators.push_back(std::move(vp));
    }
    return result;
}

} // namespace charcycle
