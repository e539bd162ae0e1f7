#pragma once

#include <string>

#include "json.hpp"

namespace equiquot {

/// Runs the bundled verification scenarios and returns a consolidated
/// report. Scenario order is fixed; identical inputs and seed produce
/// byte-identical JSON. `filter` is a substring match on scenario names
/// (empty runs everything); `data_dir` locates the cohomology fixtures.
nlohmann::json corpus_run(const std::string& data_dir, const std::string& filter,
                          unsigned seed);

} // namespace equiquot
