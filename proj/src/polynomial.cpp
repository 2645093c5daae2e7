#include "charcycle/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace charcycle {

namespace {

const MonomialOrder& default_order() {
    static const MonomialOrder order = MonomialOrder::grevlex();
    return order;
}

void canonicalize(std::vector<Term>& terms) {
    const MonomialOrder& order = default_order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0)
            out.pop_back();
    }
    terms = std::move(out);
}

} // namespace

void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
        if (t.mono.size() != p.ring_->nvars())
            throw MisuseError("monomial length does not match ring");
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
    Polynomial p(std::move(ring));
    if (value != 0)
        p.terms_.push_back({std::move(value), Monomial(p.ring_->nvars())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->nvars())
        throw MisuseError("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Rational(1), Monomial(ring->nvars()).set_exponent(index, 1)});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational coeff) {
    Polynomial p(std::move(ring));
    if (m.size() != p.ring_->nvars())
        throw MisuseError("monomial length does not match ring");
    if (coeff != 0)
        p.terms_.push_back({std::move(coeff), std::move(m)});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_, "add");
    std::vector<Term> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    canonicalize(terms);
    Polynomial p(ring_);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    p.terms_ = terms_;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_, "multiply");
    std::map<Monomial, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.emplace(std::move(m), a.coeff * b.coeff);
            if (!fresh)
                it->second += a.coeff * b.coeff;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            terms.push_back({std::move(c), m});
    canonicalize(terms);
    Polynomial p(ring_);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0)
        return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_ = terms_;
    for (auto& t : p.terms_)
        t.coeff *= scalar;
    return p;
}

Polynomial Polynomial::times_term(const Rational& coeff, const Monomial& m) const {
    if (coeff == 0)
        return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_ = terms_;
    for (auto& t : p.terms_) {
        t.coeff *= coeff;
        t.mono = t.mono * m;
    }
    return p;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0)
        throw MisuseError("negative exponent");
    Polynomial r = Polynomial::constant(ring_, 1);
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1)
            r = r * b;
        b = e > 1 ? b * b : b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(int var) const {
    if (var < 0 || var >= ring_->nvars())
        throw MisuseError("variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        int e = t.mono.exponent(var);
        if (e == 0)
            continue;
        terms.push_back({t.coeff * e, t.mono.set_exponent(var, e - 1)});
    }
    Polynomial p(ring_);
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw MisuseError("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.compare(t.mono, best->mono) > 0)
            best = &t;
    return *best;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw MisuseError("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < t.mono.size(); ++i)
            for (int k = 0; k < t.mono.exponent(i); ++k)
                v *= point[i];
        total += v;
    }
    return total;
}

bool Polynomial::try_exact_divide(const Polynomial& divisor, Polynomial& quotient) const {
    require_same_ring(ring_, divisor.ring_, "exact_divide");
    if (divisor.is_zero())
        throw MisuseError("division by zero polynomial");
    const MonomialOrder& order = default_order();
    std::map<Monomial, Rational> rem;
    for (const auto& t : terms_)
        rem.emplace(t.mono, t.coeff);
    const Term& dlt = divisor.terms_.front(); // canonical: leading first
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        // map is ascending in raw key order; find the order-maximal entry
        Monomial lead = it->first;
        Rational lc = it->second;
        for (auto jt = rem.begin(); jt != rem.end(); ++jt)
            if (order.compare(jt->first, lead) > 0) {
                lead = jt->first;
                lc = jt->second;
            }
        auto m = lead.try_divide(dlt.mono);
        if (!m)
            return false;
        Rational c = lc / dlt.coeff;
        q.push_back({c, *m});
        for (const auto& dt : divisor.terms_) {
            Monomial mm = dt.mono * *m;
            auto [pos, fresh] = rem.emplace(mm, -c * dt.coeff);
            if (!fresh) {
                pos->second -= c * dt.coeff;
                if (pos->second == 0)
                    rem.erase(pos);
            } else if (pos->second == 0) {
                rem.erase(pos);
            }
        }
    }
    quotient = Polynomial::from_terms(ring_, std::move(q));
    return true;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty())
        return Monomial(ring_->nvars());
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_)
        g = Monomial::gcd(g, t.mono);
    return g;
}

bool Polynomial::homogeneous_in(const std::vector<int>& vars) const {
    if (terms_.empty())
        return true;
    int d = terms_[0].mono.degree_in(vars);
    for (const auto& t : terms_)
        if (t.mono.degree_in(vars) != d)
            return false;
    return true;
}

Polynomial Polynomial::map_to_ring(const RingPtr& target) const {
    std::vector<int> image(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i)
        image[i] = target->find(ring_->variable(i));
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (int i = 0; i < t.mono.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0)
                continue;
            if (image[i] < 0)
                throw MisuseError("polynomial uses variable absent from target ring: " +
                                  ring_->variable(i));
            m = m.set_exponent(image[i], e);
        }
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? "-" : "+");
        first = false;
        bool need_coeff = (c != 1) || t.mono.is_one();
        if (need_coeff)
            os << c.get_str();
        bool need_star = need_coeff;
        for (int i = 0; i < t.mono.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0)
                continue;
            if (need_star)
                os << "*";
            os << ring_->variable(i);
            if (e > 1)
                os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_))
        return false;
    if (terms_.size() != other.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

} // namespace charcycle
