#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace charcycle {

/// Content-addressed memo for localization cells: always in memory, and
/// mirrored to a directory when one is configured so reruns reuse the
/// decompositions. Corrupt cache files are ignored with a warning.
class ComputeCache {
  public:
    ComputeCache() = default;
    explicit ComputeCache(std::string directory);

    std::optional<std::string> get(const std::string& key);
    void put(const std::string& key, const std::string& value);

    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    static std::string hash_key(const std::string& key);

  private:
    std::string file_for(const std::string& key) const;

    std::mutex mu_;
    std::unordered_map<std::string, std::string> mem_;
    std::string dir_;
    size_t hits_ = 0;
    size_t misses_ = 0;
    std::vector<std::string> warnings_;
};

} // namespace charcycle
