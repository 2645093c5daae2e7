#include "charcycle/hilbert.hpp"

#include <algorithm>
#include <map>

#include "charcycle/decompose.hpp"

namespace charcycle {

namespace {

using UniPoly = std::vector<mpz_class>; // dense, index = degree

UniPoly uni_one() { return {mpz_class(1)}; }

void uni_add(UniPoly& a, const UniPoly& b, int shift, const mpz_class& scale) {
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i + shift] += scale * b[i];
}

// a *= (1 - t^d)
void uni_mul_one_minus(UniPoly& a, int d) {
    UniPoly r = a;
    r.resize(a.size() + d, 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i + d] -= a[i];
    a = std::move(r);
}

mpz_class uni_value_at_one(const UniPoly& a) {
    mpz_class s = 0;
    for (const auto& c : a)
        s += c;
    return s;
}

// Exact division by (1 - t); the caller guarantees divisibility.
UniPoly uni_divide_one_minus_t(const UniPoly& a) {
    // (1-t) q = a  =>  q_i = q_{i-1} - ... synthetic division from the top
    UniPoly q(a.size() ? a.size() - 1 : 0, 0);
    mpz_class carry = 0; // running partial sum: q_i = a_0 + a_1 + ... + a_i
    for (size_t i = 0; i < q.size(); ++i) {
        carry += a[i];
        q[i] = carry;
    }
    return q;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    return out;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!Monomial::coprime(gens[i], gens[j]))
                return false;
    return true;
}

// Bigatti-style pivot recursion for the Hilbert numerator of a monomial ideal.
UniPoly monomial_numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return uni_one();
    if (gens.size() == 1 && gens[0].is_one())
        return UniPoly{}; // unit ideal: zero series
    if (pairwise_coprime(gens)) {
        UniPoly r = uni_one();
        for (const auto& m : gens)
            uni_mul_one_minus(r, m.degree());
        return r;
    }
    // pivot on the most shared variable
    int nvars = gens[0].size();
    std::vector<int> occurrences(nvars, 0);
    for (const auto& m : gens)
        for (int v = 0; v < nvars; ++v)
            if (m.exponent(v) > 0)
                ++occurrences[v];
    int pivot = static_cast<int>(std::max_element(occurrences.begin(), occurrences.end()) -
                                 occurrences.begin());

    // I + (x): keep generators free of x, plus x itself.
    std::vector<Monomial> plus;
    plus.push_back(Monomial(nvars).set_exponent(pivot, 1));
    for (const auto& m : gens)
        if (m.exponent(pivot) == 0)
            plus.push_back(m);
    // I : x
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        int e = m.exponent(pivot);
        colon.push_back(e > 0 ? m.set_exponent(pivot, e - 1) : m);
    }
    UniPoly result = monomial_numerator(std::move(plus));
    uni_add(result, monomial_numerator(std::move(colon)), 1, 1);
    return result;
}

std::vector<Monomial> leading_monomials(const Ideal& ideal) {
    std::vector<Monomial> lts;
    for (const auto& g : ideal.groebner_basis())
        lts.push_back(g.terms().front().mono); // canonical storage: grevlex lead first
    return lts;
}

} // namespace

std::vector<mpz_class> HilbertSeries::counts(int max_degree) const {
    // expand numerator / (1-t)^nvars
    std::vector<mpz_class> c(max_degree + 1, 0);
    for (size_t i = 0; i < numerator.size() && i <= static_cast<size_t>(max_degree); ++i)
        c[i] = numerator[i];
    for (int k = 0; k < nvars; ++k)
        for (int d = 1; d <= max_degree; ++d)
            c[d] += c[d - 1];
    return c;
}

HilbertSeries hilbert_series(const Ideal& ideal) {
    HilbertSeries hs;
    hs.nvars = ideal.ring()->nvars();
    hs.numerator = monomial_numerator(leading_monomials(ideal));
    while (!hs.numerator.empty() && hs.numerator.back() == 0)
        hs.numerator.pop_back();
    UniPoly n = hs.numerator;
    int strips = 0;
    while (!n.empty() && uni_value_at_one(n) == 0) {
        n = uni_divide_one_minus_t(n);
        ++strips;
    }
    if (n.empty()) { // unit ideal: empty variety
        hs.dimension = -1;
        hs.degree = 0;
        return hs;
    }
    hs.dimension = hs.nvars - strips;
    hs.degree = uni_value_at_one(n);
    return hs;
}

int dimension(const Ideal& ideal) {
    HilbertSeries hs = hilbert_series(ideal);
    if (hs.dimension < 0)
        throw EmptyVarietyError("dimension of the empty variety (unit ideal)");
    return hs.dimension;
}

mpz_class degree(const Ideal& ideal) {
    HilbertSeries hs = hilbert_series(ideal);
    if (hs.dimension < 0)
        throw EmptyVarietyError("degree of the empty variety (unit ideal)");
    if (hs.degree < 1)
        throw EngineError("nonpositive degree from Hilbert data");
    return hs.degree;
}

long multiplicity_along(const Ideal& ideal, const Ideal& prime,
                        const std::vector<Ideal>* minimal_primes) {
    require_same_ring(ideal.ring(), prime.ring(), "multiplicity_along");
    if (!prime.contains_ideal(ideal))
        throw MisuseError("multiplicity_along: prime does not contain the ideal");
    std::vector<Ideal> primes;
    if (minimal_primes) {
        primes = *minimal_primes;
    } else {
        for (const auto& comp : charcycle::minimal_primes(ideal))
            primes.push_back(comp.prime);
    }
    bool found = false;
    Ideal part = ideal;
    for (const auto& q : primes) {
        if (Ideal::same_ideal(q, prime)) {
            found = true;
            continue;
        }
        // separator: a generator of q outside the target prime
        const Polynomial* sep = nullptr;
        for (const auto& g : q.groebner_basis())
            if (!prime.contains(g)) {
                sep = &g;
                break;
            }
        if (!sep)
            throw MisuseError(
                "multiplicity_along: target prime is embedded; use refine_embedded");
        part = part.saturate(*sep);
    }
    if (!found)
        throw MisuseError("multiplicity_along: prime is not a minimal prime of the ideal");
    mpz_class num = degree(part);
    mpz_class den = degree(prime);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0 || q < 1)
        throw EngineError("multiplicity_along: degree ratio " + num.get_str() + "/" +
                          den.get_str() + " is not a positive integer");
    if (!q.fits_slong_p())
        throw EngineError("multiplicity_along: multiplicity overflow");
    return q.get_si();
}

} // namespace charcycle
