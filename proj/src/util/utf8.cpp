#include "apbench/util/utf8.hpp"

namespace apbench::utf8 {

namespace {

// Returns the byte length of the UTF-8 sequence starting at `pos`, or 1 for
// an invalid lead/truncated sequence.
std::size_t sequence_length(std::string_view text, std::size_t pos) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t len = 1;
    if (lead < 0x80) {
        return 1;
    } else if ((lead >> 5) == 0x6) {
        len = 2;
    } else if ((lead >> 4) == 0xE) {
        len = 3;
    } else if ((lead >> 3) == 0x1E) {
        len = 4;
    } else {
        return 1;
    }
    if (pos + len > text.size()) return 1;
    for (std::size_t i = 1; i < len; ++i) {
        if ((static_cast<unsigned char>(text[pos + i]) >> 6) != 0x2) return 1;
    }
    return len;
}

}  // namespace

std::size_t length(std::string_view text) {
    std::size_t n = 0;
    for (std::size_t pos = 0; pos < text.size(); pos += sequence_length(text, pos)) ++n;
    return n;
}

std::vector<char32_t> decode(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t len = sequence_length(text, pos);
        const auto lead = static_cast<unsigned char>(text[pos]);
        char32_t cp = 0;
        switch (len) {
            case 1:
                cp = lead < 0x80 ? lead : 0xFFFD;
                break;
            case 2:
                cp = static_cast<char32_t>(lead & 0x1F);
                break;
            case 3:
                cp = static_cast<char32_t>(lead & 0x0F);
                break;
            case 4:
                cp = static_cast<char32_t>(lead & 0x07);
                break;
        }
        for (std::size_t i = 1; i < len; ++i) {
            cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
        }
        out.push_back(cp);
        pos += len;
    }
    return out;
}

std::string encode(const std::vector<char32_t>& codepoints) {
    std::string out;
    out.reserve(codepoints.size() * 3);
    for (char32_t cp : codepoints) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::string_view prefix(std::string_view text, std::size_t max_codepoints) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size() && n < max_codepoints) {
        pos += sequence_length(text, pos);
        ++n;
    }
    return text.substr(0, pos);
}

}  // namespace apbench::utf8
