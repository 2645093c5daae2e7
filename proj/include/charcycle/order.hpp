#pragma once

#include <string>
#include <vector>

#include "charcycle/monomial.hpp"

namespace charcycle {

/// Monomial orders: lex, graded reverse lex, and block (elimination) orders
/// given by a variable partition with an inner order per block.
class MonomialOrder {
  public:
    enum class Kind { Lex, GrevLex, Block };

    struct Block {
        std::vector<int> vars;
        Kind inner = Kind::GrevLex;
    };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    static MonomialOrder block(std::vector<Block> blocks);
    /// Block order eliminating `elim` (those variables come first).
    static MonomialOrder elimination(const std::vector<int>& elim, int nvars);

    Kind kind() const { return kind_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// <0, 0, >0 as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Stable identifier used as a Groebner-cache key.
    const std::string& cache_key() const { return key_; }

  private:
    Kind kind_ = Kind::GrevLex;
    std::vector<Block> blocks_;
    std::string key_;
};

} // namespace charcycle
