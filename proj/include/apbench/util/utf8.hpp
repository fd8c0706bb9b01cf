#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace apbench::utf8 {

// Lengths throughout the project are measured in Unicode codepoints
// ("characters"), never bytes. Inputs are UTF-8; invalid bytes are treated
// as one codepoint each so counting and slicing never throw.

std::size_t length(std::string_view text);

// Decodes to codepoints. Invalid sequences decode byte-wise to U+FFFD.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& codepoints);

// Longest prefix of `text` holding at most `max_codepoints` codepoints.
// Never splits a multi-byte sequence.
std::string_view prefix(std::string_view text, std::size_t max_codepoints);

}  // namespace apbench::utf8
