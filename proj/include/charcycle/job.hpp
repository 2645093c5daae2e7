#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charcycle/cech.hpp"
#include "charcycle/cycle.hpp"

namespace charcycle {

enum class Command { Localize, Cech, Lyubeznik, Decompose };

/// A declared module: the polynomial ring itself, or a user-supplied cycle
/// given by base varieties with multiplicities.
struct ModuleSpec {
    bool is_ring = true;
    std::vector<std::pair<Ideal, long>> declared; // base ideals
};

struct JobSpec {
    RingPtr base;
    RingPtr doubled;
    std::vector<Localizer> generators;
    ModuleSpec module;
    Command command = Command::Cech;
    std::optional<Localizer> localize_target;
};

JobSpec parse_job(const std::string& text);

struct RunOptions {
    Strategy strategy = Strategy::Single;
    bool strict = false;
    bool vertices = false;
    std::optional<std::vector<std::vector<int>>> split; // component index groups
    std::string cache_dir;
};

struct Report {
    int exit_code = 0;
    std::string structured; // JSON document
    std::string text;
    std::vector<std::string> warnings;
};

Report run(const JobSpec& job, const RunOptions& options = {});

/// Parse "0|1,2" style split groups.
std::vector<std::vector<int>> parse_split(const std::string& text);

/// Serialization used by the structured report (and reparse for round-trips).
std::string cycle_to_json(const CharCycle& cycle);
CharCycle cycle_from_json(const std::string& json_text, const RingPtr& doubled,
                          const RingPtr& base);

} // namespace charcycle
