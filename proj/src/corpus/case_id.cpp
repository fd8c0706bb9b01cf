#include "apbench/corpus/case_id.hpp"

#include "apbench/util/utf8.hpp"

#include <algorithm>

namespace apbench::corpus {

namespace {

constexpr char32_t kFullOpen = U'（';
constexpr char32_t kFullClose = U'）';
constexpr char32_t kTerminator = U'号';

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_court_char(char32_t c) {
    if (is_ascii_digit(c)) return true;
    if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
    return c >= 0x4E00 && c <= 0x9FFF;
}

struct DecodedGrammar {
    std::vector<std::vector<char32_t>> type_codes;
    std::vector<std::string> type_code_strings;
};

DecodedGrammar decode_grammar(const CaseIdGrammar& grammar) {
    DecodedGrammar d;
    for (const auto& code : grammar.type_codes) {
        d.type_codes.push_back(utf8::decode(code));
        d.type_code_strings.push_back(code);
    }
    return d;
}

bool match_at(const std::vector<char32_t>& cps, std::size_t pos,
              const std::vector<char32_t>& pattern) {
    if (pos + pattern.size() > cps.size()) return false;
    return std::equal(pattern.begin(), pattern.end(), cps.begin() + pos);
}

// Parses an identifier starting at `start`. Returns the id plus the number
// of codepoints consumed. The grammar is ambiguous on paper (court codes and
// type codes share the CJK range); the leftmost complete parse wins.
std::optional<std::pair<CaseId, std::size_t>> parse_at(const std::vector<char32_t>& cps,
                                                       std::size_t start,
                                                       const DecodedGrammar& grammar) {
    std::size_t pos = start;
    if (pos >= cps.size()) return std::nullopt;
    if (cps[pos] != kFullOpen && cps[pos] != U'(') return std::nullopt;
    ++pos;

    if (pos + 4 > cps.size()) return std::nullopt;
    int year = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!is_ascii_digit(cps[pos + i])) return std::nullopt;
        year = year * 10 + static_cast<int>(cps[pos + i] - U'0');
    }
    pos += 4;

    if (pos >= cps.size() || (cps[pos] != kFullClose && cps[pos] != U')')) return std::nullopt;
    ++pos;

    const std::size_t court_start = pos;
    for (std::size_t court_len = 2; court_len <= 8; ++court_len) {
        const std::size_t type_pos = court_start + court_len;
        if (type_pos >= cps.size()) break;

        bool court_ok = true;
        for (std::size_t i = court_start; i < type_pos; ++i) {
            if (!is_court_char(cps[i])) {
                court_ok = false;
                break;
            }
        }
        if (!court_ok) break;  // a bad char stays bad for longer codes too

        for (std::size_t t = 0; t < grammar.type_codes.size(); ++t) {
            const auto& code = grammar.type_codes[t];
            if (!match_at(cps, type_pos, code)) continue;

            std::size_t seq_pos = type_pos + code.size();
            if (seq_pos >= cps.size() || !is_ascii_digit(cps[seq_pos])) continue;
            if (cps[seq_pos] == U'0') continue;  // canonical: no leading zeros
            std::int64_t sequence = 0;
            std::size_t digits = 0;
            while (seq_pos < cps.size() && is_ascii_digit(cps[seq_pos]) && digits < 12) {
                sequence = sequence * 10 + static_cast<std::int64_t>(cps[seq_pos] - U'0');
                ++seq_pos;
                ++digits;
            }
            if (seq_pos >= cps.size() || cps[seq_pos] != kTerminator) continue;

            CaseId id;
            id.year = year;
            id.court_code = utf8::encode(
                {cps.begin() + static_cast<std::ptrdiff_t>(court_start),
                 cps.begin() + static_cast<std::ptrdiff_t>(type_pos)});
            id.case_type_code = grammar.type_code_strings[t];
            id.sequence = sequence;
            return std::make_pair(id, seq_pos + 1 - start);
        }
    }
    return std::nullopt;
}

}  // namespace

bool CaseIdGrammar::is_first_instance_code(const std::string& code) const {
    return std::find(first_instance_type_codes.begin(), first_instance_type_codes.end(),
                     code) != first_instance_type_codes.end();
}

std::string CaseId::format() const {
    std::string out = "（";
    out += std::to_string(year);
    out += "）";
    out += court_code;
    out += case_type_code;
    out += std::to_string(sequence);
    out += "号";
    return out;
}

std::optional<CaseId> parse_case_id(std::string_view text, const CaseIdGrammar& grammar) {
    const auto cps = utf8::decode(text);
    const auto decoded = decode_grammar(grammar);
    auto parsed = parse_at(cps, 0, decoded);
    if (!parsed || parsed->second != cps.size()) return std::nullopt;
    return parsed->first;
}

std::vector<CaseId> find_case_ids(std::string_view text, const CaseIdGrammar& grammar) {
    const auto cps = utf8::decode(text);
    const auto decoded = decode_grammar(grammar);
    std::vector<CaseId> out;
    std::size_t pos = 0;
    while (pos < cps.size()) {
        if (cps[pos] == kFullOpen || cps[pos] == U'(') {
            if (auto parsed = parse_at(cps, pos, decoded)) {
                out.push_back(parsed->first);
                pos += parsed->second;
                continue;
            }
        }
        ++pos;
    }
    return out;
}

std::vector<CaseId> extract_all_first_instance_case_ids(std::string_view second_doc_text,
                                                        const CaseIdGrammar& grammar) {
    std::vector<CaseId> out;
    for (auto& id : find_case_ids(second_doc_text, grammar)) {
        if (grammar.is_first_instance_code(id.case_type_code)) {
            out.push_back(std::move(id));
        }
    }
    return out;
}

std::optional<CaseId> extract_first_instance_case_id(std::string_view second_doc_text,
                                                     const CaseIdGrammar& grammar) {
    auto all = extract_all_first_instance_case_ids(second_doc_text, grammar);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace apbench::corpus
