// SPDX-License-Identifier: Apache-2.0
#include "lcp/backend.hpp"

#include "lcp/text.hpp"

namespace lcp {

const char* to_string(Purpose p) {
    switch (p) {
        case Purpose::task_answer: return "task_answer";
        case Purpose::reason: return "reason";
        case Purpose::summary: return "summary";
        case Purpose::contrastive: return "contrastive";
        case Purpose::ranked_list: return "ranked_list";
        case Purpose::translate: return "translate";
        case Purpose::low_level_contrastive: return "low_level_contrastive";
    }
    return "task_answer";
}

std::string parse_tagged(const std::string& text, const std::string& tag) {
    const std::string open = "<" + tag + ">";
    const std::string close = "</" + tag + ">";
    const std::size_t o = text.find(open);
    if (o == std::string::npos)
        throw FormatError("missing <" + tag + "> in model output");
    const std::size_t start = o + open.size();
    const std::size_t c = text.find(close, start);
    if (c == std::string::npos)
        throw FormatError("missing </" + tag + "> in model output");
    return trim(text.substr(start, c - start));
}

TaggedResult generate_tagged_with_retry(Backend& backend, const GenerationRequest& req,
                                        const std::string& tag, int max_retries) {
    if (max_retries < 0) throw ConfigError("max_retries must be >= 0");
    std::vector<std::string> raw_outputs;
    for (int attempt = 1; attempt <= max_retries + 1; ++attempt) {
        GenerationResponse res = backend.generate(req);
        raw_outputs.push_back(res.text);
        try {
            return TaggedResult{parse_tagged(res.text, tag), attempt};
        } catch (const FormatError&) {
            // regenerate until the budget runs out
        }
    }
    throw FormatExhaustedError("no well-formed <" + tag + "> output after " +
                                   std::to_string(max_retries + 1) + " attempts",
                               std::move(raw_outputs));
}

std::shared_ptr<Backend> make_backend(const BackendSpec& spec) {
    if (spec.kind == BackendKind::sim) {
        return std::make_shared<SimBackend>(spec, SimLandscape::load(spec.endpoint_or_landscape));
    }
    return std::make_shared<HttpBackend>(spec);
}

}  // namespace lcp
