#pragma once

#include "apbench/corpus/types.hpp"

#include <string>
#include <vector>

namespace apbench::corpus {

// Section markers open the section they belong to; the marker text stays
// inside its section so segmentation is lossless. Courts drift on phrasing,
// hence the configurable marker lists; first occurrence wins within a list.
struct SegmentConfig {
    std::vector<std::string> facts_markers = {"经审理查明", "本院认定事实如下"};
    std::vector<std::string> reasoning_markers = {"本院认为"};
    std::vector<std::string> verdict_markers = {"判决如下"};
};

// Never fails: a document with no recognizable markers comes back whole in
// unsegmented_remainder with segmented() == false.
DocumentSections segment_document(const RawDocument& doc, const SegmentConfig& config = {});

}  // namespace apbench::corpus
