#pragma once

#include "apbench/corpus/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apbench::corpus {

// Canonical Chinese case-identifier grammar:
//
//   （<year: 4 digits>）<court_code: 2-8 of [A-Za-z0-9] or CJK><type_code><sequence: digits>号
//
// Both full-width （） and half-width () brackets are accepted; canonical
// formatting uses full-width. The sequence is a positive integer without
// leading zeros, so parse and format round-trip exactly. Type codes are
// configurable; the defaults cover civil/criminal/administrative cases at
// both instances.
struct CaseIdGrammar {
    std::vector<std::string> type_codes = {"民初", "民终", "刑初", "刑终", "行初", "行终"};
    std::vector<std::string> first_instance_type_codes = {"民初", "刑初", "行初"};

    bool is_first_instance_code(const std::string& code) const;
};

// Anchored parse: the whole string must be a valid identifier.
std::optional<CaseId> parse_case_id(std::string_view text,
                                    const CaseIdGrammar& grammar = {});

// Scans free text for identifiers, in order of appearance.
std::vector<CaseId> find_case_ids(std::string_view text,
                                  const CaseIdGrammar& grammar = {});

// The first-instance identifier cited in an appellate document's procedural
// history: first match whose type code is a first-instance code. Additional
// matches are the caller's to log.
std::optional<CaseId> extract_first_instance_case_id(std::string_view second_doc_text,
                                                     const CaseIdGrammar& grammar = {});

std::vector<CaseId> extract_all_first_instance_case_ids(std::string_view second_doc_text,
                                                        const CaseIdGrammar& grammar = {});

}  // namespace apbench::corpus
