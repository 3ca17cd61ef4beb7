// SPDX-License-Identifier: Apache-2.0
#include "lcp/text.hpp"

#include <algorithm>
#include <cctype>

namespace lcp {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// ASCII punctuation only; multibyte UTF-8 units are never stripped.
bool is_strippable(unsigned char c) { return c < 128 && std::ispunct(c) != 0; }

}  // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c < 128 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    const std::string h = to_lower(haystack);
    const std::string n = to_lower(needle);
    return h.find(n) != std::string::npos;
}

std::string normalize_answer(std::string_view raw) {
    std::string s = trim(raw);
    // Peel surrounding punctuation/parentheses and re-trim until stable.
    for (;;) {
        std::size_t b = 0, e = s.size();
        while (b < e && (is_strippable(static_cast<unsigned char>(s[b])) ||
                         is_space(static_cast<unsigned char>(s[b]))))
            ++b;
        while (e > b && (is_strippable(static_cast<unsigned char>(s[e - 1])) ||
                         is_space(static_cast<unsigned char>(s[e - 1]))))
            --e;
        if (b == 0 && e == s.size()) break;
        s = s.substr(b, e - b);
    }
    return to_lower(s);
}

bool is_label_token(std::string_view s) {
    const std::string n = normalize_answer(s);
    return n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
}

}  // namespace lcp
