#include "charcycle/ring.hpp"

#include <algorithm>

namespace charcycle {

RingPtr Ring::make(std::vector<std::string> variables) {
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->variables_ = std::move(variables);
    for (int i = 0; i < ring->nvars(); ++i) {
        const auto& name = ring->variables_[i];
        if (name.empty())
            throw MisuseError("empty variable name");
        if (!ring->index_.emplace(name, i).second)
            throw MisuseError("duplicate variable name: " + name);
    }
    return ring;
}

RingPtr Ring::make_doubled(const RingPtr& base) {
    if (!base)
        throw MisuseError("null ring");
    if (base->doubled())
        throw MisuseError("ring is already doubled");
    std::vector<std::string> vars = base->variables();
    for (const auto& name : base->variables()) {
        std::string fiber = "d" + name;
        if (base->find(fiber) >= 0)
            throw MisuseError("cotangent name collides with base variable: " + fiber);
        vars.push_back(fiber);
    }
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->variables_ = std::move(vars);
    ring->base_count_ = base->nvars();
    for (int i = 0; i < ring->nvars(); ++i)
        ring->index_.emplace(ring->variables_[i], i);
    return ring;
}

std::pair<RingPtr, int> Ring::with_auxiliary(const RingPtr& ring) {
    if (!ring)
        throw MisuseError("null ring");
    std::string name = "#t";
    for (int k = 0; ring->find(name) >= 0; ++k)
        name = "#t" + std::to_string(k);
    std::vector<std::string> vars = ring->variables();
    vars.push_back(name);
    auto ext = std::shared_ptr<Ring>(new Ring());
    ext->variables_ = std::move(vars);
    // Block split is meaningless while the auxiliary variable is present.
    ext->base_count_ = 0;
    for (int i = 0; i < ext->nvars(); ++i)
        ext->index_.emplace(ext->variables_[i], i);
    return {ext, ext->nvars() - 1};
}

int Ring::base_count() const {
    if (!doubled())
        throw MisuseError("ring has no base/cotangent split");
    return base_count_;
}

std::vector<int> Ring::base_indices() const {
    int n = base_count();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    return idx;
}

std::vector<int> Ring::fiber_indices() const {
    int n = base_count();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = n + i;
    return idx;
}

int Ring::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw MisuseError(std::string("ring mismatch in ") + where);
}

} // namespace charcycle
