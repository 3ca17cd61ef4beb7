// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lcp/backend.hpp"
#include "lcp/types.hpp"

namespace lcp {

enum class DatasetFormat { canonical_jsonl, bbh_json, xcopa_jsonl };

DatasetFormat dataset_format_from_string(const std::string& s);
const char* to_string(DatasetFormat f);

/// Parses a task file into the canonical Dataset. Errors carry the offending
/// line number.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);

/// Seeded shuffle, then the first train_count samples train and the next
/// test_count test.
std::pair<std::vector<Sample>, std::vector<Sample>> split_dataset(const Dataset& dataset,
                                                                  const SplitSpec& spec);

struct SynthResult {
    SimLandscape landscape;
    Dataset dataset;
    std::filesystem::path landscape_path;
    std::filesystem::path dataset_path;
};

/// Writes a synthetic landscape (geometric keyword weights) and a matching
/// canonical dataset under out_dir. Byte-deterministic per seed.
SynthResult synth_landscape(int num_keywords, int num_samples, std::uint64_t seed,
                            const std::filesystem::path& out_dir);

}  // namespace lcp
