#include "darkdetect/segmenter.hpp"

#include "darkdetect/text_util.hpp"

namespace darkdetect {

namespace {

bool has_ignored_element_child(const DomNode& el, const TagPolicy& policy) {
    for (const DomNode& child : el.children) {
        if (child.is_element() &&
            classify_tag(child.tag_name, policy) == ElementClass::ignored) {
            return true;
        }
    }
    return false;
}

bool children_all_text_or_inline(const DomNode& el, const TagPolicy& policy) {
    for (const DomNode& child : el.children) {
        if (child.is_text()) continue;
        if (classify_tag(child.tag_name, policy) != ElementClass::inline_level) {
            return false;
        }
    }
    return true;
}

void segment_into(const DomNode& el, const TagPolicy& policy,
                  std::vector<std::uint32_t>& path, std::vector<SegmentedText>& out) {
    if (!has_ignored_element_child(el, policy) &&
        children_all_text_or_inline(el, policy)) {
        if (auto text = text_content(el, policy)) {
            out.push_back({std::move(*text), {}, path});
            return;
        }
    }

    for (std::uint32_t i = 0; i < el.children.size(); ++i) {
        const DomNode& child = el.children[i];
        if (child.is_text()) {
            std::string collapsed = text::collapse_whitespace(child.text_data);
            if (!collapsed.empty()) {
                path.push_back(i);
                out.push_back({std::move(collapsed), {}, path});
                path.pop_back();
            }
            continue;
        }
        switch (classify_tag(child.tag_name, policy)) {
            case ElementClass::ignored:
                break;
            case ElementClass::inline_level:
                if (auto text = text_content(child, policy)) {
                    path.push_back(i);
                    out.push_back({std::move(*text), {}, path});
                    path.pop_back();
                }
                break;
            case ElementClass::block:
            case ElementClass::other:
                path.push_back(i);
                segment_into(child, policy, path, out);
                path.pop_back();
                break;
        }
    }
}

}  // namespace

std::vector<std::string> segment_element(const DomNode* element, const TagPolicy& policy) {
    if (element == nullptr) return {};
    std::vector<SegmentedText> units;
    std::vector<std::uint32_t> path;
    segment_into(*element, policy, path, units);
    std::vector<std::string> texts;
    texts.reserve(units.size());
    for (SegmentedText& unit : units) texts.push_back(std::move(unit.text));
    return texts;
}

std::vector<SegmentedText> segment_document(const DomTree& tree, const TagPolicy& policy,
                                            std::string_view source_url) {
    std::vector<SegmentedText> units;
    std::vector<std::uint32_t> path;
    segment_into(tree.body(), policy, path, units);
    for (SegmentedText& unit : units) unit.source_url = source_url;
    return units;
}

}  // namespace darkdetect
