#include "charcycle/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charcycle/parse.hpp"

namespace charcycle {

namespace {

struct MonoGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order->compare(a, b) > 0;
    }
};

using Accumulator = std::map<Monomial, Rational, MonoGreater>;

void accumulate(Accumulator& acc, const Monomial& m, const Rational& c) {
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            acc.erase(it);
    } else if (it->second == 0) {
        acc.erase(it);
    }
}

struct BasisElem {
    Polynomial poly; // monic
    Term lead;
};

const Term& fast_leading_term(const Polynomial& p, const MonomialOrder& order) {
    // canonical storage is descending grevlex, so the front term is the
    // grevlex lead
    if (order.kind() == MonomialOrder::Kind::GrevLex)
        return p.terms().front();
    return p.leading_term(order);
}

Polynomial reduce_impl(const Polynomial& p, const std::vector<BasisElem>& basis,
                       const MonomialOrder& order) {
    if (p.is_zero() || basis.empty())
        return p;
    Accumulator work{MonoGreater{&order}};
    for (const auto& t : p.terms())
        accumulate(work, t.mono, t.coeff);
    std::vector<Term> remainder;
    while (!work.empty()) {
        auto lead = work.begin();
        const BasisElem* reducer = nullptr;
        for (const auto& b : basis) {
            if (b.lead.mono.degree() <= lead->first.degree() &&
                b.lead.mono.divides(lead->first)) {
                reducer = &b;
                break;
            }
        }
        if (!reducer) {
            remainder.push_back({lead->second, lead->first});
            work.erase(lead);
            continue;
        }
        Rational c = lead->second / reducer->lead.coeff;
        Monomial shift = *lead->first.try_divide(reducer->lead.mono);
        for (const auto& t : reducer->poly.terms())
            accumulate(work, t.mono * shift, -c * t.coeff);
    }
    return Polynomial::from_terms(p.ring(), std::move(remainder));
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero())
        return p;
    const Term& lt = fast_leading_term(p, order);
    if (lt.coeff == 1)
        return p;
    return p * (Rational(1) / lt.coeff);
}

struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order) {
    std::vector<BasisElem> b;
    b.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero())
            b.push_back({g, fast_leading_term(g, order)});
    return reduce_impl(p, b, order);
}

std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   const MonomialOrder& order) {
    std::vector<BasisElem> basis;
    std::set<PairKey, PairLess> pairs{PairLess{&order}};
    std::set<std::pair<int, int>> pending;

    auto add_element = [&](const Polynomial& p) {
        int idx = static_cast<int>(basis.size());
        Term lt = fast_leading_term(p, order);
        for (int k = 0; k < idx; ++k) {
            Monomial l = Monomial::lcm(basis[k].lead.mono, lt.mono);
            pairs.insert({l.degree(), l, k, idx});
            pending.insert({k, idx});
        }
        basis.push_back({p, std::move(lt)});
    };

    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        Polynomial r = reduce_impl(g, basis, order);
        if (!r.is_zero())
            add_element(make_monic(r, order));
    }

    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        pending.erase({pk.i, pk.j});
        const BasisElem& f = basis[pk.i];
        const BasisElem& g = basis[pk.j];
        // Buchberger's first criterion: coprime leading monomials.
        if (Monomial::coprime(f.lead.mono, g.lead.mono))
            continue;
        // Chain criterion: some other lead divides the lcm and both
        // sub-pairs have already been treated.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j)
                continue;
            if (!basis[k].lead.mono.divides(pk.lcm))
                continue;
            auto key_ik = std::minmax(pk.i, k);
            auto key_jk = std::minmax(pk.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip)
            continue;
        Monomial mf = *pk.lcm.try_divide(f.lead.mono);
        Monomial mg = *pk.lcm.try_divide(g.lead.mono);
        Polynomial s = f.poly.times_term(Rational(1) / f.lead.coeff, mf) -
                       g.poly.times_term(Rational(1) / g.lead.coeff, mg);
        Polynomial r = reduce_impl(s, basis, order);
        if (!r.is_zero())
            add_element(make_monic(r, order));
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j])
                continue;
            if (basis[j].lead.mono.divides(basis[i].lead.mono) &&
                !(basis[i].lead.mono == basis[j].lead.mono && j > i))
                keep[i] = false;
        }
    std::vector<BasisElem> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i])
            minimal.push_back(std::move(basis[i]));

    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(make_monic(reduce_impl(minimal[i].poly, others, order), order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(fast_leading_term(a, order).mono, fast_leading_term(b, order).mono) <
               0;
    });
    return reduced;
}

struct Ideal::Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    std::string canonical;
};

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero())
            continue; // zero generators carry no information
        require_same_ring(ring_, g.ring(), "ideal generators");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(order.cache_key());
        if (it != cache_->bases.end())
            return *it->second;
    }
    auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(ring_, gens_, order));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, fresh] = cache_->bases.emplace(order.cache_key(), std::move(basis));
    return *it->second;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis();
    return !gb.empty() && gb.front().is_constant();
}

Polynomial Ideal::normal_form(const Polynomial& p, const MonomialOrder& order) const {
    require_same_ring(ring_, p.ring(), "normal_form");
    return reduce(p, groebner_basis(order), order);
}

bool Ideal::contains_ideal(const Ideal& other) const {
    for (const auto& g : other.generators())
        if (!contains(g))
            return false;
    return true;
}

bool Ideal::radical_contains(const Polynomial& p) const {
    require_same_ring(ring_, p.ring(), "radical_contains");
    if (p.is_zero())
        return true;
    auto [ext, t] = Ring::with_auxiliary(ring_);
    std::vector<Polynomial> gens;
    for (const auto& g : gens_)
        gens.push_back(g.map_to_ring(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, t) * p.map_to_ring(ext));
    return Ideal(ext, std::move(gens)).is_unit();
}

Ideal Ideal::plus(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> gens = gens_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const Ideal& other) const {
    require_same_ring(ring_, other.ring_, "ideal sum");
    return plus(other.gens_);
}

Ideal Ideal::quotient(const Polynomial& f) const {
    require_same_ring(ring_, f.ring(), "quotient");
    if (f.is_zero())
        throw MisuseError("quotient by zero polynomial");
    if (f.is_constant())
        return *this;
    if (is_zero())
        return Ideal(ring_);
    // (I : f) = (I cap (f)) / f
    Ideal inter = intersect(*this, Ideal(ring_, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.groebner_basis()) {
        Polynomial q(ring_);
        if (!g.try_exact_divide(f, q))
            throw EngineError("quotient: member of I cap (f) not divisible by f");
        gens.push_back(std::move(q));
    }
    return Ideal(ring_, buchberger(ring_, std::move(gens), MonomialOrder::grevlex()));
}

Ideal Ideal::quotient(const Ideal& other) const {
    require_same_ring(ring_, other.ring_, "quotient");
    if (other.is_zero())
        return Ideal(ring_, {Polynomial::constant(ring_, 1)});
    bool first = true;
    Ideal result(ring_);
    for (const auto& g : other.generators()) {
        Ideal q = quotient(g);
        result = first ? q : intersect(result, q);
        first = false;
    }
    return result;
}

Ideal Ideal::saturate(const Polynomial& f) const {
    require_same_ring(ring_, f.ring(), "saturate");
    if (f.is_zero())
        throw MisuseError("saturation by zero polynomial");
    if (f.is_constant() || is_zero())
        return *this;
    auto [ext, t] = Ring::with_auxiliary(ring_);
    std::vector<Polynomial> gens;
    for (const auto& g : gens_)
        gens.push_back(g.map_to_ring(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, t) * f.map_to_ring(ext));
    Ideal extended(ext, std::move(gens));
    Ideal eliminated = extended.eliminate({t});
    std::vector<Polynomial> result;
    for (const auto& g : eliminated.generators())
        result.push_back(g.map_to_ring(ring_));
    return Ideal(ring_, std::move(result));
}

Ideal Ideal::saturate(const Ideal& other) const {
    require_same_ring(ring_, other.ring_, "saturate");
    if (other.is_zero())
        throw MisuseError("saturation by the zero ideal");
    if (other.is_unit())
        return *this; // empty locus removes nothing
    bool first = true;
    Ideal result(ring_);
    for (const auto& g : other.generators()) {
        Ideal s = saturate(g);
        result = first ? s : intersect(result, s);
        first = false;
    }
    return result;
}

Ideal Ideal::eliminate(const std::vector<int>& vars) const {
    if (vars.empty())
        return *this;
    MonomialOrder order = MonomialOrder::elimination(vars, ring_->nvars());
    std::vector<Polynomial> kept;
    for (const auto& g : groebner_basis(order)) {
        bool touches = false;
        for (const auto& t : g.terms())
            for (int v : vars)
                if (t.mono.exponent(v) > 0) {
                    touches = true;
                    break;
                }
        if (!touches)
            kept.push_back(g);
    }
    return Ideal(ring_, std::move(kept));
}

Ideal Ideal::intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_, "intersect");
    if (a.is_zero() || b.is_zero())
        return Ideal(a.ring_);
    if (a.is_unit())
        return b;
    if (b.is_unit())
        return a;
    auto [ext, t] = Ring::with_auxiliary(a.ring_);
    Polynomial tp = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - tp;
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens_)
        gens.push_back(tp * g.map_to_ring(ext));
    for (const auto& g : b.gens_)
        gens.push_back(one_minus_t * g.map_to_ring(ext));
    Ideal extended(ext, std::move(gens));
    Ideal eliminated = extended.eliminate({t});
    std::vector<Polynomial> result;
    for (const auto& g : eliminated.generators())
        result.push_back(g.map_to_ring(a.ring_));
    return Ideal(a.ring_, std::move(result));
}

Ideal Ideal::map_to_ring(const RingPtr& target) const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_)
        gens.push_back(g.map_to_ring(target));
    return Ideal(target, std::move(gens));
}

const std::string& Ideal::canonical_key() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->canonical.empty())
            return cache_->canonical;
    }
    const auto& gb = groebner_basis();
    std::string key;
    for (const auto& g : gb) {
        if (!key.empty())
            key += ";";
        key += g.to_string();
    }
    if (key.empty())
        key = "0";
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->canonical.empty())
        cache_->canonical = std::move(key);
    return cache_->canonical;
}

bool Ideal::same_ideal(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.canonical_key() == b.canonical_key();
}

} // namespace charcycle
