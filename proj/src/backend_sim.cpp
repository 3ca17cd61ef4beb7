// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "lcp/backend.hpp"
#include "lcp/hash.hpp"
#include "lcp/text.hpp"

namespace lcp {

namespace {

using json = nlohmann::json;

// Fixed no-op hint for the degenerate case where the current prompt already
// covers every landscape keyword.
constexpr const char* kNoOpHint = "nothing";

std::vector<std::size_t> matched_keywords(const SimLandscape& ls, std::string_view text) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ls.keywords.size(); ++i)
        if (contains_ci(text, ls.keywords[i].first)) out.push_back(i);
    return out;
}

/// Highest-weight keyword index missing from `covered`, or npos.
std::size_t best_absent(const SimLandscape& ls, const std::set<std::size_t>& covered) {
    std::size_t best = std::string::npos;
    double best_weight = -1.0;
    for (std::size_t i = 0; i < ls.keywords.size(); ++i) {
        if (covered.count(i)) continue;
        if (ls.keywords[i].second > best_weight) {
            best_weight = ls.keywords[i].second;
            best = i;
        }
    }
    return best;
}

std::string keyword_list(const SimLandscape& ls, const std::set<std::size_t>& idx) {
    std::string out;
    for (std::size_t i : idx) {
        if (!out.empty()) out += ", ";
        out += ls.keywords[i].first;
    }
    return out;
}

/// Diversity source: pseudo-random keyword index from the per-purpose call
/// counter and the landscape seed.
std::size_t hashed_extra_keyword(const SimLandscape& ls, std::int64_t counter) {
    const std::string bytes = std::to_string(counter) + std::to_string(ls.landscape_seed);
    return static_cast<std::size_t>(fnv1a64(bytes) % ls.keywords.size());
}

std::string wrap(const SimLandscape& ls, const std::string& tag, const std::string& payload,
                 std::int64_t counter) {
    std::string out = "<" + tag + ">" + payload;
    // Injected format failure: every period-th call (0-based) drops the
    // closing tag.
    const bool broken =
        ls.format_failure_period > 0 && counter % ls.format_failure_period == 0;
    if (!broken) out += "</" + tag + ">";
    return out;
}

std::string answer_for(const SimLandscape& ls, const GenerationRequest& req) {
    const double quality = sim_quality(ls, req.prompt_text);
    const double t = ls.threshold(req.sim.sample_id);
    if (quality > t) return req.sim.target;
    if (!req.sim.choices.empty()) {
        // Wrong answer: the next choice, cyclically.
        std::size_t target_idx = 0;
        const std::string want = normalize_answer(req.sim.target);
        for (std::size_t i = 0; i < req.sim.choices.size(); ++i) {
            if (normalize_answer(req.sim.choices[i]) == want) {
                target_idx = i;
                break;
            }
        }
        return req.sim.choices[(target_idx + 1) % req.sim.choices.size()];
    }
    return std::string(req.sim.target.rbegin(), req.sim.target.rend());
}

}  // namespace

void SimLandscape::validate_and_normalize() {
    if (keywords.empty()) throw DataError("sim landscape has no keywords");
    if (format_failure_period < 0) throw DataError("format_failure_period must be >= 0");
    std::unordered_set<std::string> seen;
    double sum = 0.0;
    for (auto& [text, weight] : keywords) {
        if (text.empty()) throw DataError("sim landscape keyword is empty");
        if (!seen.insert(to_lower(text)).second)
            throw DataError("duplicate sim landscape keyword '" + text + "'");
        if (weight <= 0) throw DataError("sim landscape weight must be > 0");
        sum += weight;
    }
    for (auto& [text, weight] : keywords) weight /= sum;
}

double SimLandscape::threshold(const std::string& sample_id) const {
    return frac64(fnv1a64(sample_id + std::to_string(landscape_seed)));
}

SimLandscape SimLandscape::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open sim landscape file: " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("malformed sim landscape file " + file.string() + ": " + e.what());
    }
    SimLandscape ls;
    try {
        for (const auto& kv : j.at("keywords"))
            ls.keywords.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<double>());
        ls.landscape_seed = j.at("landscape_seed").get<std::uint64_t>();
        ls.format_failure_period = j.value("format_failure_period", 0);
    } catch (const json::exception& e) {
        throw DataError("invalid sim landscape file " + file.string() + ": " + e.what());
    }
    ls.validate_and_normalize();
    return ls;
}

void SimLandscape::save(const std::filesystem::path& file) const {
    json j;
    j["keywords"] = json::array();
    for (const auto& [text, weight] : keywords) j["keywords"].push_back({text, weight});
    j["landscape_seed"] = landscape_seed;
    j["format_failure_period"] = format_failure_period;
    std::ofstream out(file);
    if (!out) throw DataError("cannot write sim landscape file: " + file.string());
    out << j.dump(2) << "\n";
}

double sim_quality(const SimLandscape& landscape, std::string_view text) {
    double q = 0.0;
    for (const auto& [keyword, weight] : landscape.keywords)
        if (contains_ci(text, keyword)) q += weight;
    return q;
}

std::string sim_respond(const SimLandscape& ls, const GenerationRequest& req,
                        std::int64_t counter) {
    switch (req.purpose) {
        case Purpose::task_answer:
            return answer_for(ls, req);

        case Purpose::reason: {
            std::set<std::size_t> covered;
            for (std::size_t i : matched_keywords(ls, req.sim.active_prompt)) covered.insert(i);
            const std::size_t missing = best_absent(ls, covered);
            const std::string hint =
                missing == std::string::npos ? kNoOpHint : ls.keywords[missing].first;
            return wrap(ls, "reason", "consider " + hint, counter);
        }

        case Purpose::summary: {
            std::set<std::size_t> named;
            for (const std::string& reason : req.sim.reasons)
                for (std::size_t i : matched_keywords(ls, reason)) named.insert(i);
            if (req.temperature > 0) named.insert(hashed_extra_keyword(ls, counter));
            const std::string payload =
                "A common failure pattern: the approach must consider " + keyword_list(ls, named) +
                ".";
            return wrap(ls, "summary", payload, counter);
        }

        case Purpose::contrastive:
        case Purpose::low_level_contrastive: {
            std::set<std::size_t> covered;
            for (const std::string& prompt : req.sim.good_prompts)
                for (std::size_t i : matched_keywords(ls, prompt)) covered.insert(i);
            const std::size_t missing = best_absent(ls, covered);
            if (missing != std::string::npos) covered.insert(missing);
            const std::string payload =
                "An effective prompt should consider " + keyword_list(ls, covered) + ".";
            return wrap(ls, "prompt", payload, counter);
        }

        case Purpose::ranked_list: {
            std::set<std::size_t> covered;
            if (!req.sim.listed.empty()) {
                std::size_t top = 0;
                for (std::size_t i = 1; i < req.sim.listed.size(); ++i)
                    if (req.sim.listed[i].second > req.sim.listed[top].second) top = i;
                for (std::size_t i : matched_keywords(ls, req.sim.listed[top].first))
                    covered.insert(i);
            }
            if (req.temperature > 0) covered.insert(hashed_extra_keyword(ls, counter));
            const std::string payload =
                "Try a prompt that considers " + keyword_list(ls, covered) + ".";
            return wrap(ls, "prompt", payload, counter);
        }

        case Purpose::translate: {
            std::string payload = "\nInput: [EN] " + req.sim.input;
            for (const std::string& c : req.sim.choices) payload += "\nChoice: [EN] " + c;
            if (req.sim.translate_target) payload += "\nTarget: [EN] " + req.sim.target;
            payload += "\n";
            return wrap(ls, "translation", payload, counter);
        }
    }
    throw ConfigError("sim backend: unknown request purpose");
}

SimBackend::SimBackend(BackendSpec spec, SimLandscape landscape)
    : spec_(std::move(spec)), landscape_(std::move(landscape)) {}

GenerationResponse SimBackend::generate(const GenerationRequest& req) {
    count_call(req.purpose);
    if (req.prompt_text.empty()) throw ConfigError("generate: empty prompt text");
    if (req.purpose == Purpose::task_answer) {
        // Pure in the request alone; no counter so concurrent evaluation is
        // order-independent.
        return GenerationResponse{sim_respond(landscape_, req, 0), 1};
    }
    const auto idx = static_cast<int>(req.purpose);
    const std::int64_t counter = purpose_counters_[idx].fetch_add(1);
    return GenerationResponse{sim_respond(landscape_, req, counter), 1};
}

}  // namespace lcp
