#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "darkdetect/dom.hpp"

namespace darkdetect {

/// One UI-level text unit produced by segmentation. `node_path` is the list
/// of child indices from the body element down to the node that yielded the
/// unit (empty when the body itself yielded it).
struct SegmentedText {
    std::string text;  // non-empty after whitespace collapsing
    std::string source_url;
    std::vector<std::uint32_t> node_path;
};

/// Segments an element into text units.
///
/// A null element yields nothing. When no element child has an ignored tag
/// and every child is a text node or an inline element, the element's whole
/// text content is one unit. Otherwise children are walked in order: text
/// children contribute their data, ignored children are skipped, inline
/// children contribute their own text content, and block children (plus
/// unclassified ones, so no text is silently dropped) recurse with their
/// units spliced in. Whitespace-only contributions are dropped.
std::vector<std::string> segment_element(const DomNode* element,
                                         const TagPolicy& policy = TagPolicy::standard());

/// Runs segment_element on the document's body and wraps each unit with the
/// source URL and its node path, in document order.
std::vector<SegmentedText> segment_document(const DomTree& tree,
                                            const TagPolicy& policy,
                                            std::string_view source_url);

}  // namespace darkdetect
