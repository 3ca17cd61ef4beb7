// SPDX-License-Identifier: Apache-2.0
#include "lcp/types.hpp"

#include <algorithm>
#include <unordered_set>

#include "lcp/text.hpp"

namespace lcp {

void Dataset::validate() const {
    if (samples.empty()) throw DataError("dataset '" + name + "' is empty");
    std::unordered_set<std::string> ids;
    for (const Sample& s : samples) {
        if (!ids.insert(s.id).second) throw DataError("duplicate sample id '" + s.id + "'");
        if (s.has_choices()) {
            const std::string target = normalize_answer(s.target);
            int matches = 0;
            for (const std::string& c : s.choices)
                if (normalize_answer(c) == target) ++matches;
            if (matches != 1)
                throw DataError("sample '" + s.id + "': target must match exactly one choice");
        }
    }
}

ScoredPrompt make_scored(Prompt prompt, std::vector<bool> bitmap) {
    ScoredPrompt sp;
    sp.prompt = std::move(prompt);
    const auto total = static_cast<std::int64_t>(bitmap.size());
    const auto correct =
        static_cast<std::int64_t>(std::count(bitmap.begin(), bitmap.end(), true));
    sp.accuracy = Rational{correct, total == 0 ? 1 : total};
    sp.bitmap = std::move(bitmap);
    return sp;
}

bool PromptPool::insert(ScoredPrompt entry) {
    if (!seen_.insert(trim(entry.prompt.text)).second) return false;
    entries_.push_back(std::move(entry));
    return true;
}

const char* to_string(PromptOrigin origin) {
    switch (origin) {
        case PromptOrigin::initial: return "initial";
        case PromptOrigin::candidate: return "candidate";
        case PromptOrigin::contrastive: return "contrastive";
        case PromptOrigin::history: return "history";
        case PromptOrigin::baseline: return "baseline";
        case PromptOrigin::external: return "external";
    }
    return "initial";
}

PromptOrigin prompt_origin_from_string(const std::string& s) {
    if (s == "initial") return PromptOrigin::initial;
    if (s == "candidate") return PromptOrigin::candidate;
    if (s == "contrastive") return PromptOrigin::contrastive;
    if (s == "history") return PromptOrigin::history;
    if (s == "baseline") return PromptOrigin::baseline;
    if (s == "external") return PromptOrigin::external;
    throw DataError("unknown prompt origin '" + s + "'");
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::lcp: return "lcp";
        case Strategy::lcp_noncontrastive: return "lcp-noncontrastive";
        case Strategy::opro: return "opro";
        case Strategy::autohint: return "autohint";
    }
    return "lcp";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "lcp") return Strategy::lcp;
    if (s == "lcp-noncontrastive" || s == "lcp_noncontrastive") return Strategy::lcp_noncontrastive;
    if (s == "opro") return Strategy::opro;
    if (s == "autohint") return Strategy::autohint;
    throw ConfigError("unknown strategy '" + s + "'");
}

const char* to_string(SelectionRule r) {
    return r == SelectionRule::last ? "last" : "best";
}

SelectionRule selection_from_string(const std::string& s) {
    if (s == "last") return SelectionRule::last;
    if (s == "best") return SelectionRule::best;
    throw ConfigError("unknown selection rule '" + s + "'");
}

const char* to_string(CrossOptimizerScope s) {
    return s == CrossOptimizerScope::all ? "all" : "contrastive";
}

CrossOptimizerScope scope_from_string(const std::string& s) {
    if (s == "all") return CrossOptimizerScope::all;
    if (s == "contrastive") return CrossOptimizerScope::contrastive;
    throw ConfigError("unknown cross-optimizer scope '" + s + "'");
}

void OptimizationConfig::validate() const {
    if (num_candidates < 1) throw ConfigError("num_candidates must be >= 1");
    if (wrong_samples < 1) throw ConfigError("wrong_samples must be >= 1");
    if (contrastive_k < 1) throw ConfigError("contrastive_k must be >= 1");
    if (strategy == Strategy::lcp && 2 * contrastive_k > num_candidates)
        throw ConfigError("lcp requires 2*contrastive_k <= num_candidates");
    if (temperature < 0) throw ConfigError("temperature must be >= 0");
    if (eval_temperature < 0) throw ConfigError("eval_temperature must be >= 0");
    if (iterations < 0) throw ConfigError("iterations must be >= 0");
    if (max_format_retries < 0) throw ConfigError("max_format_retries must be >= 0");
    if (eval_concurrency < 1) throw ConfigError("eval_concurrency must be >= 1");
    if (meta_max_tokens < 1 || answer_max_tokens < 1)
        throw ConfigError("token limits must be >= 1");
    if (trim(initial_prompt).empty()) throw ConfigError("initial_prompt must be non-empty");
}

bool operator==(const Prompt& a, const Prompt& b) {
    return a.text == b.text && a.id == b.id && a.origin == b.origin && a.iteration == b.iteration;
}

bool operator==(const ScoredPrompt& a, const ScoredPrompt& b) {
    return a.prompt == b.prompt && a.accuracy.num == b.accuracy.num &&
           a.accuracy.den == b.accuracy.den && a.bitmap == b.bitmap;
}

bool operator==(const EvalRecord& a, const EvalRecord& b) {
    return a.sample_id == b.sample_id && a.raw_output == b.raw_output &&
           a.extracted == b.extracted && a.correct == b.correct;
}

bool operator==(const IterationLog& a, const IterationLog& b) {
    return a.iteration == b.iteration && a.wrong_sample_draws == b.wrong_sample_draws &&
           a.reasons == b.reasons && a.summaries == b.summaries && a.candidates == b.candidates &&
           a.new_prompt == b.new_prompt && a.new_prompt_records == b.new_prompt_records &&
           a.meta_call_attempts == b.meta_call_attempts &&
           a.flip_sample_ids == b.flip_sample_ids && a.rng_state_digest == b.rng_state_digest;
}

BackendSpec BackendSpec::parse(const std::string& text) {
    BackendSpec spec;
    if (text.rfind("sim:", 0) == 0) {
        spec.kind = BackendKind::sim;
        spec.endpoint_or_landscape = text.substr(4);
        if (spec.endpoint_or_landscape.empty())
            throw ConfigError("backend spec 'sim:' needs a landscape file");
        return spec;
    }
    if (text.rfind("http:", 0) == 0) {
        spec.kind = BackendKind::http;
        std::string rest = text.substr(5);
        std::size_t pos = 0;
        bool first = true;
        while (pos <= rest.size()) {
            std::size_t semi = rest.find(';', pos);
            std::string part = rest.substr(pos, semi == std::string::npos ? semi : semi - pos);
            if (first) {
                spec.endpoint_or_landscape = part;
                first = false;
            } else if (!part.empty()) {
                std::size_t eq = part.find('=');
                if (eq == std::string::npos)
                    throw ConfigError("backend spec option '" + part + "' is not key=value");
                std::string key = part.substr(0, eq), value = part.substr(eq + 1);
                if (key == "model")
                    spec.model_id = value;
                else
                    spec.request_defaults[key] = value;
            }
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        if (spec.endpoint_or_landscape.empty())
            throw ConfigError("backend spec 'http:' needs a base URL");
        if (spec.model_id.empty())
            throw ConfigError("backend spec 'http:' needs ';model=<id>'");
        if (spec.endpoint_or_landscape.find("://") == std::string::npos)
            spec.endpoint_or_landscape = "http://" + spec.endpoint_or_landscape;
        return spec;
    }
    throw ConfigError("backend spec must start with 'sim:' or 'http:': " + text);
}

std::string BackendSpec::to_string() const {
    if (kind == BackendKind::sim) return "sim:" + endpoint_or_landscape;
    std::string out = "http:" + endpoint_or_landscape + ";model=" + model_id;
    for (const auto& [k, v] : request_defaults) out += ";" + k + "=" + v;
    return out;
}

}  // namespace lcp
