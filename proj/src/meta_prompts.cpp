// SPDX-License-Identifier: Apache-2.0
#include "lcp/meta_prompts.hpp"

#include <unordered_set>

#include "lcp/text.hpp"

namespace lcp {

namespace {

// Template bodies are versioned text assets; wording is frozen, including the
// original typos ("unerlying", "Summarize these explanation"). Slots in
// brackets are filled at render time.
const std::string kReasonBody =
    "Given input: [INPUT]\n"
    "\n"
    "And its expected output: [OUTPUT]\n"
    "\n"
    "Explain the reason why the input corresponds to the given expected output. "
    "The reason should be placed within tag <reason></reason>.";

const std::string kSummaryBody =
    "Given input and expected output pairs, along with the reason for generated outputs, "
    "provide a summarized common reason applicable to all cases within tags <summary> and "
    "</summary>.\n"
    "\n"
    "The summary should explain the underlying principles, logic or methodology governing the "
    "relationship between the inputs and corresponding outputs. Avoid mentioning any specific "
    "details, numbers, or entities from the individual examples, and aim for a generalized "
    "explanation.";

const std::string kContrastiveHighBody =
    "Given [GOOD_COUNT] examples of good prompts and their corresponding scores and "
    "[BAD_COUNT] examples of bad prompts and their corresponding scores, explore the "
    "unerlying pattern of good prompts, generate a new prompt based on this pattern. "
    "Put the new prompt within tag <prompt> and </prompt>.";

const std::string kContrastiveLowBody =
    "Given [COUNT] prompt pairs and their corresponding scores, explain why one prompt is "
    "better than others.\n"
    "\n"
    "Prompt pairs and scores:\n"
    "\n"
    "[PAIRS]\n"
    "\n"
    "Summarize these explanation and generate a new prompt accordingly. "
    "Put the new prompt within tag <prompt> and </prompt>.";

const std::string kRankedListBody =
    "Below are prompts with their corresponding scores on the training set, ranked from best "
    "to worst. Generate a new prompt that is different from all the prompts listed and "
    "achieves a higher score. Put the new prompt within tag <prompt> and </prompt>.";

const std::string kTranslateBody =
    "Translate the following task fields into English. Reply with the same lines in the same "
    "order, each value translated, inside tag <translation> and </translation>.";

std::string replace_all(std::string text, const std::string& slot, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(slot, pos)) != std::string::npos) {
        text.replace(pos, slot.size(), value);
        pos += value.size();
    }
    return text;
}

std::string prompt_score_block(const std::vector<ScoredPrompt>& prompts) {
    std::string out;
    for (std::size_t i = 0; i < prompts.size(); ++i) {
        out += "Prompt " + std::to_string(i + 1) + ": " + prompts[i].prompt.text + "\n\n";
        out += "Score: " + std::to_string(to_percent(prompts[i].accuracy)) + "\n\n";
    }
    if (!out.empty()) out.erase(out.size() - 2);  // drop the trailing blank line
    return out;
}

}  // namespace

const std::string& meta_prompt_body(MetaTemplate t) {
    switch (t) {
        case MetaTemplate::reason: return kReasonBody;
        case MetaTemplate::summary: return kSummaryBody;
        case MetaTemplate::contrastive_high: return kContrastiveHighBody;
        case MetaTemplate::contrastive_low: return kContrastiveLowBody;
        case MetaTemplate::ranked_list: return kRankedListBody;
        case MetaTemplate::translate: return kTranslateBody;
    }
    return kReasonBody;
}

std::string render_reason_prompt(const Sample& sample) {
    std::string out = replace_all(kReasonBody, "[INPUT]", sample.input);
    return replace_all(out, "[OUTPUT]", sample.target);
}

std::string render_summary_prompt(const std::vector<std::pair<Sample, std::string>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("render_summary_prompt: no (sample, reason) pairs");
    std::string out = kSummaryBody + "\n";
    for (const auto& [sample, reason] : pairs) {
        out += "\nInput: " + sample.input + "\n";
        out += "Expected output: " + sample.target + "\n";
        out += "Reason: " + reason + "\n";
    }
    return out;
}

std::string build_contrastive_meta_prompt(const std::vector<ScoredPrompt>& good,
                                          const std::vector<ScoredPrompt>& bad) {
    if (good.empty() || bad.empty())
        throw std::invalid_argument("contrastive meta prompt needs good and bad prompts");
    std::unordered_set<std::string> good_texts;
    for (const ScoredPrompt& g : good) good_texts.insert(trim(g.prompt.text));
    for (const ScoredPrompt& b : bad)
        if (good_texts.count(trim(b.prompt.text)))
            throw std::invalid_argument("good and bad prompt sets overlap");

    std::string out = replace_all(kContrastiveHighBody, "[GOOD_COUNT]",
                                  std::to_string(good.size()));
    out = replace_all(out, "[BAD_COUNT]", std::to_string(bad.size()));
    out += "\n\nGood prompts and scores:\n\n" + prompt_score_block(good);
    out += "\nBad prompts and scores:\n\n" + prompt_score_block(bad);
    return out;
}

std::string build_low_level_contrastive_meta_prompt(const std::vector<ScoredPrompt>& prompts) {
    if (prompts.size() < 2)
        throw std::invalid_argument("low-level contrastive meta prompt needs >= 2 prompts");
    std::string out = replace_all(kContrastiveLowBody, "[COUNT]", std::to_string(prompts.size()));
    return replace_all(out, "[PAIRS]", trim(prompt_score_block(prompts)));
}

std::string build_ranked_list_meta_prompt(const std::vector<ScoredPrompt>& ranked) {
    if (ranked.empty()) throw std::invalid_argument("ranked-list meta prompt needs prompts");
    return kRankedListBody + "\n\n" + prompt_score_block(ranked);
}

std::string render_translate_prompt(const std::string& input,
                                    const std::vector<std::string>& choices,
                                    const std::string& target, bool include_target) {
    std::string out = kTranslateBody + "\n\nInput: " + input;
    for (const std::string& c : choices) out += "\nChoice: " + c;
    if (include_target) out += "\nTarget: " + target;
    return out;
}

}  // namespace lcp
