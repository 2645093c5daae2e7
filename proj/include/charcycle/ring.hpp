#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace charcycle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inputs that violate an operation's contract (wrong ring, zero divisor, ...).
struct MisuseError : Error {
    using Error::Error;
};

/// The engine detected an internal inconsistency or an unresolvable case
/// (composite leaf in a decomposition, non-holonomic cycle, ...).
struct EngineError : Error {
    using Error::Error;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A polynomial ring over Q, described by its ordered variable list.
/// A "doubled" ring carries a block split: the first n variables are base
/// coordinates x_1..x_n and the last n are cotangent coordinates.
class Ring {
  public:
    static RingPtr make(std::vector<std::string> variables);

    /// Doubles `base` by appending one cotangent variable per base variable,
    /// named by prefixing "d" (x -> dx).
    static RingPtr make_doubled(const RingPtr& base);

    /// Same variables plus one fresh auxiliary variable (for the t-tricks).
    /// The auxiliary name starts with '#' so it can never collide with a
    /// parsed identifier. Returns the ring and the new variable's index.
    static std::pair<RingPtr, int> with_auxiliary(const RingPtr& ring);

    int nvars() const { return static_cast<int>(variables_.size()); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::string& variable(int i) const { return variables_.at(i); }

    bool doubled() const { return base_count_ > 0; }
    /// Number of base variables of a doubled ring.
    int base_count() const;
    std::vector<int> base_indices() const;
    std::vector<int> fiber_indices() const;

    /// Index of a variable by name, or -1.
    int find(const std::string& name) const;

    bool operator==(const Ring& other) const {
        return variables_ == other.variables_ && base_count_ == other.base_count_;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }

  private:
    Ring() = default;
    std::vector<std::string> variables_;
    std::map<std::string, int> index_;
    int base_count_ = 0;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

} // namespace charcycle
