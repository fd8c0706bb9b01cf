#include "apbench/corpus/segmenter.hpp"

namespace apbench::corpus {

namespace {

struct Hit {
    std::size_t pos = std::string::npos;
    std::size_t marker_len = 0;
    bool found() const { return pos != std::string::npos; }
};

Hit find_first(const std::string& text, const std::vector<std::string>& markers,
               std::size_t from) {
    Hit best;
    for (const auto& marker : markers) {
        if (marker.empty()) continue;
        const auto pos = text.find(marker, from);
        if (pos != std::string::npos && pos < best.pos) {
            best.pos = pos;
            best.marker_len = marker.size();
        }
    }
    return best;
}

}  // namespace

DocumentSections segment_document(const RawDocument& doc, const SegmentConfig& config) {
    const std::string& text = doc.full_text;
    DocumentSections sections;

    // Markers are located in stage order, each search resuming after the
    // previous match, so the three content spans stay disjoint and ordered.
    std::size_t cursor = 0;
    const Hit facts = find_first(text, config.facts_markers, cursor);
    if (facts.found()) cursor = facts.pos + facts.marker_len;
    const Hit reasoning = find_first(text, config.reasoning_markers, cursor);
    if (reasoning.found()) cursor = reasoning.pos + reasoning.marker_len;
    const Hit verdict = find_first(text, config.verdict_markers, cursor);

    if (!facts.found() && !reasoning.found() && !verdict.found()) {
        sections.unsegmented_remainder = text;
        return sections;
    }

    std::size_t bounds[4];  // header end, facts end, reasoning end, verdict end
    const std::size_t end = text.size();
    const std::size_t facts_start = facts.found() ? facts.pos : std::string::npos;
    const std::size_t reasoning_start = reasoning.found() ? reasoning.pos : std::string::npos;
    const std::size_t verdict_start = verdict.found() ? verdict.pos : std::string::npos;

    const std::size_t header_end = std::min({facts_start, reasoning_start, verdict_start, end});
    bounds[0] = header_end;
    bounds[1] = facts.found() ? std::min({reasoning_start, verdict_start, end}) : header_end;
    bounds[2] = reasoning.found() ? std::min(verdict_start, end) : bounds[1];
    bounds[3] = end;

    sections.procedure_header = text.substr(0, bounds[0]);
    sections.factual_description = text.substr(bounds[0], bounds[1] - bounds[0]);
    sections.judicial_reasoning = text.substr(bounds[1], bounds[2] - bounds[1]);
    sections.operative_verdict = text.substr(bounds[2], bounds[3] - bounds[2]);
    return sections;
}

}  // namespace apbench::corpus
