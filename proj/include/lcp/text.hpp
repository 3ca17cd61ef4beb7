// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace lcp {

std::string trim(std::string_view s);

/// ASCII lowercase; bytes outside [A-Z] pass through untouched, so UTF-8
/// payloads are never corrupted.
std::string to_lower(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view needle);

/// Canonical answer form: trimmed, case-folded, surrounding punctuation and
/// parentheses stripped. Total and idempotent.
std::string normalize_answer(std::string_view raw);

/// True when a value is a positional answer label ("A", "(b)", ...) rather
/// than answer text.
bool is_label_token(std::string_view s);

}  // namespace lcp
