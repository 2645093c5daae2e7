#include "charcycle/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace charcycle {

namespace fs = std::filesystem;

ComputeCache::ComputeCache(std::string directory) : dir_(std::move(directory)) {
    if (!dir_.empty()) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) {
            warnings_.push_back("cache directory unusable: " + dir_ + " (" + ec.message() + ")");
            dir_.clear();
        }
    }
}

std::string ComputeCache::hash_key(const std::string& key) {
    // FNV-1a, 64 bit
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string ComputeCache::file_for(const std::string& key) const {
    return dir_ + "/" + hash_key(key) + ".cache";
}

std::optional<std::string> ComputeCache::get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mem_.find(key);
    if (it != mem_.end()) {
        ++hits_;
        return it->second;
    }
    if (!dir_.empty()) {
        std::ifstream in(file_for(key));
        if (in) {
            // first line: full key (collision guard); rest: value
            std::string stored_key;
            if (std::getline(in, stored_key) && stored_key == key) {
                std::ostringstream value;
                value << in.rdbuf();
                ++hits_;
                mem_.emplace(key, value.str());
                return value.str();
            }
            warnings_.push_back("stale or corrupt cache entry ignored: " + hash_key(key));
        }
    }
    ++misses_;
    return std::nullopt;
}

void ComputeCache::put(const std::string& key, const std::string& value) {
    std::lock_guard<std::mutex> lock(mu_);
    mem_[key] = value;
    if (!dir_.empty()) {
        std::ofstream out(file_for(key), std::ios::trunc);
        out << key << "\n" << value;
    }
}

} // namespace charcycle
