// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcp/types.hpp"

namespace lcp {

// ---------------------------------------------------------------------------
// Requests
// ---------------------------------------------------------------------------

enum class Purpose {
    task_answer,
    reason,
    summary,
    contrastive,
    ranked_list,
    translate,
    low_level_contrastive,
};
inline constexpr int kPurposeCount = 7;

const char* to_string(Purpose p);

/// Structured fields the simulated backend consumes instead of sniffing the
/// rendered prompt text. HTTP backends ignore every field. Callers populate
/// only what the purpose needs.
struct SimContext {
    std::string active_prompt;                          // reason
    std::string sample_id;                              // task_answer, translate
    std::string target;                                 // task_answer, translate
    std::vector<std::string> choices;                   // task_answer, translate
    std::string input;                                  // translate
    bool translate_target = false;                      // translate
    std::vector<std::string> reasons;                   // summary
    std::vector<std::string> good_prompts;              // contrastive, low-level
    std::vector<std::pair<std::string, double>> listed; // ranked_list
};

struct GenerationRequest {
    std::string prompt_text;  // full text an HTTP model would receive
    double temperature = 0.0;
    int max_tokens = 256;
    std::optional<std::int64_t> seed_hint;  // reserved; neither backend consumes it
    Purpose purpose = Purpose::task_answer;
    SimContext sim;
};

struct GenerationResponse {
    std::string text;
    int attempt_count = 1;
};

// ---------------------------------------------------------------------------
// Simulated-model landscape
// ---------------------------------------------------------------------------

/// Deterministic stand-in model. A prompt's quality is the total weight of
/// landscape keywords it contains; a sample is answered correctly iff that
/// quality clears the sample's hashed threshold.
struct SimLandscape {
    std::vector<std::pair<std::string, double>> keywords;  // unique (ci), weights sum to 1
    std::uint64_t landscape_seed = 0;
    int format_failure_period = 0;  // 0 = never inject a malformed output

    void validate_and_normalize();  // throws DataError

    /// t_j = frac64(fnv1a(sample_id ++ decimal(landscape_seed))).
    double threshold(const std::string& sample_id) const;

    static SimLandscape load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
};

/// Total weight of keywords appearing case-insensitively in `text`.
double sim_quality(const SimLandscape& landscape, std::string_view text);

/// Pure response function of (landscape, request, per-purpose call counter).
std::string sim_respond(const SimLandscape& landscape, const GenerationRequest& req,
                        std::int64_t counter);

// ---------------------------------------------------------------------------
// Backend interface
// ---------------------------------------------------------------------------

class Backend {
  public:
    virtual ~Backend() = default;

    virtual GenerationResponse generate(const GenerationRequest& req) = 0;
    virtual const BackendSpec& spec() const = 0;

    // Per-purpose call counts, for cache/routing assertions in tests.
    int calls(Purpose p) const { return counts_[static_cast<int>(p)].load(); }
    int total_calls() const {
        int sum = 0;
        for (const auto& c : counts_) sum += c.load();
        return sum;
    }

  protected:
    void count_call(Purpose p) { counts_[static_cast<int>(p)].fetch_add(1); }

  private:
    mutable std::array<std::atomic<int>, kPurposeCount> counts_{};
};

/// task_answer calls are pure and freely concurrent; the counter-bearing
/// purposes must stay on the single optimizer control thread (upheld by the
/// optimizer, not by a lock here).
class SimBackend final : public Backend {
  public:
    SimBackend(BackendSpec spec, SimLandscape landscape);

    GenerationResponse generate(const GenerationRequest& req) override;
    const BackendSpec& spec() const override { return spec_; }
    const SimLandscape& landscape() const { return landscape_; }

  private:
    BackendSpec spec_;
    SimLandscape landscape_;
    std::array<std::atomic<std::int64_t>, kPurposeCount> purpose_counters_{};
};

class HttpBackend final : public Backend {
  public:
    explicit HttpBackend(BackendSpec spec);

    GenerationResponse generate(const GenerationRequest& req) override;
    const BackendSpec& spec() const override { return spec_; }

  private:
    BackendSpec spec_;
    std::string host_;
    std::string path_prefix_;
    std::string api_key_;
    int retry_base_ms_ = 500;
    int max_transport_retries_ = 5;
    int connect_timeout_ms_ = 5000;
    int read_timeout_ms_ = 60000;
};

std::shared_ptr<Backend> make_backend(const BackendSpec& spec);

// ---------------------------------------------------------------------------
// Tagged-output handling
// ---------------------------------------------------------------------------

/// Content of the first complete <tag>...</tag> region, trimmed. Throws
/// FormatError when no complete pair exists.
std::string parse_tagged(const std::string& text, const std::string& tag);

struct TaggedResult {
    std::string text;
    int attempts = 1;
};

/// generate + parse_tagged with up to `max_retries` extra generations on
/// FormatError. Throws FormatExhaustedError (with all raw outputs) once the
/// budget is spent.
TaggedResult generate_tagged_with_retry(Backend& backend, const GenerationRequest& req,
                                        const std::string& tag, int max_retries);

}  // namespace lcp
