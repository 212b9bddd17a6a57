#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace darkdetect {

/// One node of a parsed HTML document. Element nodes carry a lowercase tag
/// name and children; text nodes carry character data and never have
/// children. Trees are plain values: finite, acyclic, immutable after parse.
struct DomNode {
    enum class Kind { element, text };

    Kind kind = Kind::element;
    std::string tag_name;   // element nodes, always lowercase
    std::string text_data;  // text nodes
    std::vector<DomNode> children;

    static DomNode element(std::string tag) {
        DomNode n;
        n.kind = Kind::element;
        n.tag_name = std::move(tag);
        return n;
    }

    static DomNode text(std::string data) {
        DomNode n;
        n.kind = Kind::text;
        n.text_data = std::move(data);
        return n;
    }

    bool is_element() const { return kind == Kind::element; }
    bool is_text() const { return kind == Kind::text; }
};

/// A parsed document. The root is an `html` element that always contains a
/// `body` element (synthesized when the input lacked one).
struct DomTree {
    DomNode root;

    const DomNode& body() const;
};

/// Which tags are dropped, recursed into, or merged into the enclosing text
/// unit during segmentation. The three sets are pairwise disjoint.
struct TagPolicy {
    std::unordered_set<std::string> ignore_elements;
    std::unordered_set<std::string> block_elements;
    std::unordered_set<std::string> inline_elements;

    /// Ignore set {script, style, noscript, br, hr} plus the standard HTML
    /// block-level and inline element lists (minus the ignored tags, to keep
    /// the sets disjoint).
    static const TagPolicy& standard();
};

enum class ElementClass { ignored, block, inline_level, other };

/// Class of a lowercase tag name under the policy; `other` when the tag is
/// in none of the three sets.
ElementClass classify_tag(std::string_view tag_name, const TagPolicy& policy);

/// Concatenation, in document order, of all descendant text-node data,
/// skipping subtrees rooted at ignored tags. Whitespace runs collapse to
/// single spaces and ends are trimmed; absent when nothing remains.
std::optional<std::string> text_content(const DomNode& node,
                                        const TagPolicy& policy = TagPolicy::standard());

}  // namespace darkdetect
