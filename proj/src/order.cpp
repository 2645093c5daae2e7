#include "charcycle/order.hpp"

#include <numeric>

#include "charcycle/ring.hpp"

namespace charcycle {

namespace {

// grevlex over a variable subset (in the given sequence): total degree,
// ties broken by the last differing variable carrying the smaller exponent.
int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    int da = a.degree_in(vars), db = b.degree_in(vars);
    if (da != db)
        return da < db ? -1 : 1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        int ea = a.exponent(*it), eb = b.exponent(*it);
        if (ea != eb)
            return ea > eb ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    for (int v : vars) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb)
            return ea < eb ? -1 : 1;
    }
    return 0;
}

std::vector<int> all_vars(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.key_ = "lex";
    return o;
}

MonomialOrder MonomialOrder::grevlex() {
    MonomialOrder o;
    o.kind_ = Kind::GrevLex;
    o.key_ = "grevlex";
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.blocks_ = std::move(blocks);
    o.key_ = "block";
    for (const auto& b : o.blocks_) {
        o.key_ += b.inner == Kind::Lex ? ":lex[" : ":grevlex[";
        for (size_t i = 0; i < b.vars.size(); ++i)
            o.key_ += (i ? "," : "") + std::to_string(b.vars[i]);
        o.key_ += "]";
    }
    return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& elim, int nvars) {
    std::vector<bool> in_elim(nvars, false);
    for (int v : elim) {
        if (v < 0 || v >= nvars)
            throw MisuseError("elimination variable out of range");
        in_elim[v] = true;
    }
    std::vector<int> rest;
    for (int i = 0; i < nvars; ++i)
        if (!in_elim[i])
            rest.push_back(i);
    std::vector<Block> blocks;
    if (!elim.empty())
        blocks.push_back({elim, Kind::GrevLex});
    if (!rest.empty())
        blocks.push_back({rest, Kind::GrevLex});
    return block(std::move(blocks));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::GrevLex: {
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.size() - 1; i >= 0; --i) {
            int ea = a.exponent(i), eb = b.exponent(i);
            if (ea != eb)
                return ea > eb ? -1 : 1;
        }
        return 0;
    }
    case Kind::Lex:
        return lex_cmp(a, b, all_vars(a.size()));
    case Kind::Block:
        for (const auto& blk : blocks_) {
            int c = blk.inner == Kind::Lex ? lex_cmp(a, b, blk.vars) : grevlex_cmp(a, b, blk.vars);
            if (c != 0)
                return c;
        }
        return 0;
    }
    return 0;
}

} // namespace charcycle
