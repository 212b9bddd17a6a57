#include "darkdetect/dom.hpp"

#include <stdexcept>

#include "darkdetect/text_util.hpp"

namespace darkdetect {

const DomNode& DomTree::body() const {
    for (const DomNode& child : root.children) {
        if (child.is_element() && child.tag_name == "body") return child;
    }
    throw std::logic_error("document tree has no body element");
}

const TagPolicy& TagPolicy::standard() {
    static const TagPolicy policy = [] {
        TagPolicy p;
        p.ignore_elements = {"script", "style", "noscript", "br", "hr"};
        p.block_elements = {
            "address", "article",    "aside",  "blockquote", "dd",
            "details", "dialog",     "div",    "dl",         "dt",
            "fieldset", "figcaption", "figure", "footer",     "form",
            "h1",      "h2",         "h3",     "h4",         "h5",
            "h6",      "header",     "hgroup", "li",         "main",
            "menu",    "nav",        "ol",     "p",          "pre",
            "section", "table",      "ul",
        };
        p.inline_elements = {
            "a",      "abbr",   "acronym", "audio",    "b",        "bdi",
            "bdo",    "big",    "button",  "canvas",   "cite",     "code",
            "data",   "datalist", "del",   "dfn",      "em",       "embed",
            "i",      "iframe", "img",     "input",    "ins",      "kbd",
            "label",  "map",    "mark",    "meter",    "object",   "output",
            "picture", "progress", "q",    "ruby",     "s",        "samp",
            "select", "slot",   "small",   "span",     "strong",   "sub",
            "sup",    "svg",    "template", "textarea", "time",    "tt",
            "u",      "var",    "video",   "wbr",
        };
        return p;
    }();
    return policy;
}

ElementClass classify_tag(std::string_view tag_name, const TagPolicy& policy) {
    std::string key(tag_name);
    if (policy.ignore_elements.count(key)) return ElementClass::ignored;
    if (policy.block_elements.count(key)) return ElementClass::block;
    if (policy.inline_elements.count(key)) return ElementClass::inline_level;
    return ElementClass::other;
}

namespace {

void collect_text(const DomNode& node, const TagPolicy& policy, std::string& out) {
    if (node.is_text()) {
        out += node.text_data;
        return;
    }
    if (classify_tag(node.tag_name, policy) == ElementClass::ignored) return;
    for (const DomNode& child : node.children) collect_text(child, policy, out);
}

}  // namespace

std::optional<std::string> text_content(const DomNode& node, const TagPolicy& policy) {
    std::string raw;
    if (node.is_text()) {
        raw = node.text_data;
    } else if (classify_tag(node.tag_name, policy) != ElementClass::ignored) {
        for (const DomNode& child : node.children) collect_text(child, policy, raw);
    }
    std::string collapsed = text::collapse_whitespace(raw);
    if (collapsed.empty()) return std::nullopt;
    return collapsed;
}

}  // namespace darkdetect
