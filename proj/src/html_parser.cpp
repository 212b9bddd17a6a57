#include "darkdetect/html_parser.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "darkdetect/errors.hpp"
#include "darkdetect/text_util.hpp"

namespace darkdetect {

namespace {

using text::append_utf8;

// ---------------------------------------------------------------------------
// Character encodings
// ---------------------------------------------------------------------------

// windows-1252 mapping for bytes 0x80..0x9F; other bytes map to themselves.
constexpr std::array<char16_t, 32> kCp1252High = {
    0x20AC, 0x0081, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x008D, 0x017D, 0x008F,
    0x0090, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x009D, 0x017E, 0x0178,
};

enum class Encoding { utf8, utf16le, utf16be, cp1252 };

std::string normalize_label(std::string_view label) {
    std::string out;
    for (char c : text::trim_view(label)) {
        out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c);
    }
    return out;
}

Encoding encoding_from_label(std::string_view label) {
    std::string l = normalize_label(label);
    if (l == "utf-8" || l == "utf8" || l == "unicode-1-1-utf-8") return Encoding::utf8;
    if (l == "utf-16" || l == "utf-16le") return Encoding::utf16le;
    if (l == "utf-16be") return Encoding::utf16be;
    if (l == "windows-1252" || l == "cp1252" || l == "x-cp1252" ||
        l == "iso-8859-1" || l == "iso8859-1" || l == "latin-1" || l == "latin1" ||
        l == "us-ascii" || l == "ascii") {
        return Encoding::cp1252;
    }
    throw DecodeError(0, "unsupported charset label '" + l + "'");
}

bool ascii_ieq_at(std::string_view haystack, std::size_t pos, std::string_view word) {
    if (pos + word.size() > haystack.size()) return false;
    return text::iequals_ascii(haystack.substr(pos, word.size()), word);
}

// Prescan of the first 1024 bytes for a charset declaration, in the spirit
// of the standard's encoding sniffing. Returns an empty view when absent.
std::string_view prescan_charset(std::string_view bytes) {
    std::string_view head = bytes.substr(0, std::min<std::size_t>(bytes.size(), 1024));
    for (std::size_t i = 0; i + 7 <= head.size(); ++i) {
        if (!ascii_ieq_at(head, i, "charset")) continue;
        std::size_t j = i + 7;
        while (j < head.size() && text::is_space(static_cast<unsigned char>(head[j]))) ++j;
        if (j >= head.size() || head[j] != '=') continue;
        ++j;
        while (j < head.size() && text::is_space(static_cast<unsigned char>(head[j]))) ++j;
        if (j >= head.size()) continue;
        if (head[j] == '"' || head[j] == '\'') {
            char quote = head[j++];
            std::size_t end = head.find(quote, j);
            if (end == std::string_view::npos) continue;
            return head.substr(j, end - j);
        }
        std::size_t end = j;
        while (end < head.size() && head[end] != ';' && head[end] != '"' &&
               head[end] != '\'' && head[end] != '>' &&
               !text::is_space(static_cast<unsigned char>(head[end]))) {
            ++end;
        }
        if (end > j) return head.substr(j, end - j);
    }
    return {};
}

std::string decode_utf16(std::string_view bytes, bool little_endian) {
    if (bytes.size() % 2 != 0) {
        throw DecodeError(bytes.size() - 1, "truncated UTF-16 code unit");
    }
    std::string out;
    out.reserve(bytes.size() / 2);
    std::size_t i = 0;
    auto unit = [&](std::size_t at) -> char32_t {
        unsigned char a = static_cast<unsigned char>(bytes[at]);
        unsigned char b = static_cast<unsigned char>(bytes[at + 1]);
        return little_endian ? static_cast<char32_t>(a | (b << 8))
                             : static_cast<char32_t>((a << 8) | b);
    };
    if (bytes.size() >= 2 && unit(0) == 0xFEFF) i = 2;  // BOM
    for (; i < bytes.size(); i += 2) {
        char32_t u = unit(i);
        if (u >= 0xD800 && u <= 0xDBFF) {
            if (i + 3 >= bytes.size()) throw DecodeError(i, "unpaired UTF-16 surrogate");
            char32_t low = unit(i + 2);
            if (low < 0xDC00 || low > 0xDFFF) {
                throw DecodeError(i, "unpaired UTF-16 surrogate");
            }
            append_utf8(out, 0x10000 + ((u - 0xD800) << 10) + (low - 0xDC00));
            i += 2;
        } else if (u >= 0xDC00 && u <= 0xDFFF) {
            throw DecodeError(i, "unpaired UTF-16 surrogate");
        } else {
            append_utf8(out, u);
        }
    }
    return out;
}

std::string decode_cp1252(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (char c : bytes) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < 0x80) {
            out.push_back(c);
        } else if (b < 0xA0) {
            append_utf8(out, kCp1252High[b - 0x80]);
        } else {
            append_utf8(out, b);
        }
    }
    return out;
}

// Resolves the encoding and decodes the input to UTF-8.
std::string decode_html_bytes(std::string_view bytes, std::string_view hint) {
    if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") {
        bytes.remove_prefix(3);
        if (auto bad = text::find_invalid_utf8(bytes)) {
            throw DecodeError(*bad + 3, "invalid UTF-8 sequence");
        }
        return std::string(bytes);
    }
    if (bytes.size() >= 2 && bytes.substr(0, 2) == "\xFF\xFE") {
        return decode_utf16(bytes, true);
    }
    if (bytes.size() >= 2 && bytes.substr(0, 2) == "\xFE\xFF") {
        return decode_utf16(bytes, false);
    }

    Encoding enc = Encoding::utf8;
    if (!hint.empty()) {
        enc = encoding_from_label(hint);
    } else if (std::string_view declared = prescan_charset(bytes); !declared.empty()) {
        enc = encoding_from_label(declared);
    }

    switch (enc) {
        case Encoding::utf8:
            if (auto bad = text::find_invalid_utf8(bytes)) {
                throw DecodeError(*bad, "invalid UTF-8 sequence");
            }
            return std::string(bytes);
        case Encoding::utf16le:
            return decode_utf16(bytes, true);
        case Encoding::utf16be:
            return decode_utf16(bytes, false);
        case Encoding::cp1252:
            return decode_cp1252(bytes);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Entities
// ---------------------------------------------------------------------------

const std::unordered_map<std::string_view, char32_t>& entity_table() {
    static const std::unordered_map<std::string_view, char32_t> table = {
        {"amp", U'&'},      {"lt", U'<'},       {"gt", U'>'},
        {"quot", U'"'},     {"apos", U'\''},    {"nbsp", U' '},
        {"copy", U'©'}, {"reg", U'®'}, {"trade", U'™'},
        {"deg", U'°'}, {"plusmn", U'±'}, {"middot", U'·'},
        {"laquo", U'«'}, {"raquo", U'»'}, {"iexcl", U'¡'},
        {"iquest", U'¿'}, {"cent", U'¢'}, {"pound", U'£'},
        {"yen", U'¥'}, {"euro", U'€'}, {"sect", U'§'},
        {"para", U'¶'}, {"times", U'×'}, {"divide", U'÷'},
        {"frac12", U'½'}, {"frac14", U'¼'}, {"frac34", U'¾'},
        {"sup1", U'¹'}, {"sup2", U'²'}, {"sup3", U'³'},
        {"ndash", U'–'}, {"mdash", U'—'}, {"hellip", U'…'},
        {"lsquo", U'‘'}, {"rsquo", U'’'}, {"ldquo", U'“'},
        {"rdquo", U'”'}, {"sbquo", U'‚'}, {"bdquo", U'„'},
        {"dagger", U'†'}, {"Dagger", U'‡'}, {"bull", U'•'},
        {"prime", U'′'}, {"Prime", U'″'}, {"lsaquo", U'‹'},
        {"rsaquo", U'›'}, {"oline", U'‾'}, {"minus", U'−'},
        {"larr", U'←'}, {"uarr", U'↑'}, {"rarr", U'→'},
        {"darr", U'↓'}, {"harr", U'↔'}, {"shy", U'­'},
        {"agrave", U'à'}, {"aacute", U'á'}, {"acirc", U'â'},
        {"auml", U'ä'}, {"ccedil", U'ç'}, {"egrave", U'è'},
        {"eacute", U'é'}, {"ecirc", U'ê'}, {"euml", U'ë'},
        {"iuml", U'ï'}, {"ntilde", U'ñ'}, {"ograve", U'ò'},
        {"oacute", U'ó'}, {"ouml", U'ö'}, {"oslash", U'ø'},
        {"ugrave", U'ù'}, {"uacute", U'ú'}, {"uuml", U'ü'},
        {"Agrave", U'À'}, {"Aacute", U'Á'}, {"Auml", U'Ä'},
        {"Eacute", U'É'}, {"Ouml", U'Ö'}, {"Uuml", U'Ü'},
        {"szlig", U'ß'}, {"aring", U'å'}, {"aelig", U'æ'},
    };
    return table;
}

bool is_entity_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Decodes one reference starting at the '&' in s[pos]. On success appends the
// replacement to out and returns the index just past the reference; on
// failure returns pos (caller emits the '&' literally).
std::size_t decode_entity_at(std::string_view s, std::size_t pos, std::string& out) {
    std::size_t i = pos + 1;
    if (i >= s.size()) return pos;
    if (s[i] == '#') {
        ++i;
        bool hex = i < s.size() && (s[i] == 'x' || s[i] == 'X');
        if (hex) ++i;
        std::uint32_t value = 0;
        std::size_t digits = 0;
        while (i < s.size() && digits < 8) {
            char c = s[i];
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else break;
            value = value * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
            ++i;
            ++digits;
        }
        if (digits == 0 || i >= s.size() || s[i] != ';') return pos;
        char32_t cp = value;
        if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            cp = text::kReplacementChar;
        } else if (cp >= 0x80 && cp <= 0x9F) {
            cp = kCp1252High[cp - 0x80];  // legacy numeric references
        }
        append_utf8(out, cp);
        return i + 1;
    }
    std::size_t end = i;
    while (end < s.size() && end - i < 32 && is_entity_name_char(s[end])) ++end;
    if (end == i || end >= s.size() || s[end] != ';') return pos;
    auto it = entity_table().find(s.substr(i, end - i));
    if (it == entity_table().end()) return pos;
    append_utf8(out, it->second);
    return end + 1;
}

}  // namespace

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '&') {
            std::size_t next = decode_entity_at(s, i, out);
            if (next != i) {
                i = next;
                continue;
            }
        }
        out.push_back(s[i++]);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Tree construction
// ---------------------------------------------------------------------------

const std::unordered_set<std::string_view> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img",
    "input", "link", "meta", "param", "source", "track", "wbr",
};

const std::unordered_set<std::string_view> kRawTextElements = {"script", "style"};
const std::unordered_set<std::string_view> kRcdataElements = {"title", "textarea"};

// Tags that go into <head> while no body content has been seen.
const std::unordered_set<std::string_view> kHeadElements = {
    "title", "meta", "link", "base", "style", "script",
};

// Start tags that implicitly close an open <p>.
const std::unordered_set<std::string_view> kParagraphClosers = {
    "address", "article", "aside", "blockquote", "center", "dd", "details",
    "dialog", "dir", "div", "dl", "dt", "fieldset", "figcaption", "figure",
    "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6", "header", "hgroup",
    "hr", "li", "main", "menu", "nav", "ol", "p", "pre", "section", "table",
    "ul", "xmp",
};

// Start tags that implicitly close the nearest open element of certain kinds.
const std::unordered_map<std::string_view, std::vector<std::string_view>>&
sibling_closers() {
    static const std::unordered_map<std::string_view, std::vector<std::string_view>> m = {
        {"li", {"li"}},
        {"dt", {"dt", "dd"}},
        {"dd", {"dt", "dd"}},
        {"tr", {"tr", "td", "th"}},
        {"td", {"td", "th"}},
        {"th", {"td", "th"}},
        {"option", {"option"}},
        {"optgroup", {"option", "optgroup"}},
    };
    return m;
}

constexpr std::size_t kMaxDepth = 256;

struct BuildNode {
    DomNode::Kind kind = DomNode::Kind::element;
    std::string tag;
    std::string data;
    std::vector<std::unique_ptr<BuildNode>> children;
};

struct Attribute {
    std::string name;
    std::string value;
};

struct StartTag {
    std::string name;
    std::vector<Attribute> attributes;
    bool self_closing = false;
};

class Tokenizer {
public:
    explicit Tokenizer(std::string_view html) : s_(html) {}

    bool at_end() const { return pos_ >= s_.size(); }

    // Consumes text up to the next markup boundary, entities decoded.
    // Returns empty when positioned at markup.
    std::string consume_text() {
        std::string out;
        while (pos_ < s_.size()) {
            if (s_[pos_] == '<' && looks_like_markup(pos_)) break;
            if (s_[pos_] == '&') {
                std::size_t next = decode_entity_at(s_, pos_, out);
                if (next != pos_) {
                    pos_ = next;
                    continue;
                }
            }
            out.push_back(s_[pos_++]);
        }
        return out;
    }

    enum class MarkupKind { start_tag, end_tag, comment, doctype, none };

    MarkupKind consume_markup(StartTag& start, std::string& end_name) {
        if (pos_ >= s_.size() || s_[pos_] != '<') return MarkupKind::none;
        if (match("<!--")) {
            std::size_t close = s_.find("-->", pos_);
            pos_ = close == std::string::npos ? s_.size() : close + 3;
            return MarkupKind::comment;
        }
        if (pos_ + 1 < s_.size() && (s_[pos_ + 1] == '!' || s_[pos_ + 1] == '?')) {
            bool is_doctype = ascii_ieq_at(s_, pos_ + 2, "doctype");
            std::size_t close = s_.find('>', pos_);
            pos_ = close == std::string::npos ? s_.size() : close + 1;
            // A real doctype is silently ignored; anything else becomes a
            // bogus comment, which splits adjacent text runs.
            return is_doctype ? MarkupKind::doctype : MarkupKind::comment;
        }
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
            pos_ += 2;
            end_name = consume_tag_name();
            std::size_t close = s_.find('>', pos_);
            pos_ = close == std::string::npos ? s_.size() : close + 1;
            return MarkupKind::end_tag;
        }
        // looks_like_markup guarantees a letter follows.
        ++pos_;
        start.name = consume_tag_name();
        start.attributes.clear();
        start.self_closing = false;
        consume_attributes(start);
        return MarkupKind::start_tag;
    }

    // Raw content up to (not including) the matching end tag; positions the
    // cursor at the "</name" so the caller sees a normal end tag next.
    std::string consume_raw_text(std::string_view name, bool decode) {
        std::size_t search = pos_;
        while (search < s_.size()) {
            std::size_t lt = s_.find("</", search);
            if (lt == std::string::npos) break;
            std::size_t name_end = lt + 2 + name.size();
            if (ascii_ieq_at(s_, lt + 2, name) &&
                (name_end >= s_.size() || s_[name_end] == '>' || s_[name_end] == '/' ||
                 text::is_space(static_cast<unsigned char>(s_[name_end])))) {
                std::string raw(s_.substr(pos_, lt - pos_));
                pos_ = lt;
                return decode ? decode_entities(raw) : raw;
            }
            search = lt + 2;
        }
        std::string raw(s_.substr(pos_));
        pos_ = s_.size();
        return decode ? decode_entities(raw) : raw;
    }

private:
    bool looks_like_markup(std::size_t at) const {
        if (at + 1 >= s_.size()) return false;
        char c = s_[at + 1];
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '/' ||
               c == '!' || c == '?';
    }

    bool match(std::string_view token) {
        if (s_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::string consume_tag_name() {
        std::string name;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '>' || c == '/' || text::is_space(static_cast<unsigned char>(c))) break;
            name.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c);
            ++pos_;
        }
        return name;
    }

    void skip_spaces() {
        while (pos_ < s_.size() && text::is_space(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void consume_attributes(StartTag& tag) {
        for (;;) {
            skip_spaces();
            if (pos_ >= s_.size()) return;
            if (s_[pos_] == '>') {
                ++pos_;
                return;
            }
            if (s_[pos_] == '/') {
                ++pos_;
                skip_spaces();
                if (pos_ < s_.size() && s_[pos_] == '>') {
                    ++pos_;
                    tag.self_closing = true;
                    return;
                }
                continue;
            }
            Attribute attr;
            while (pos_ < s_.size()) {
                char c = s_[pos_];
                if (c == '=' || c == '>' || c == '/' ||
                    text::is_space(static_cast<unsigned char>(c))) {
                    break;
                }
                attr.name.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c);
                ++pos_;
            }
            skip_spaces();
            if (pos_ < s_.size() && s_[pos_] == '=') {
                ++pos_;
                skip_spaces();
                if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) {
                    char quote = s_[pos_++];
                    std::size_t end = s_.find(quote, pos_);
                    if (end == std::string::npos) end = s_.size();
                    attr.value = decode_entities(s_.substr(pos_, end - pos_));
                    pos_ = std::min(end + 1, s_.size());
                } else {
                    std::size_t start = pos_;
                    while (pos_ < s_.size() && s_[pos_] != '>' &&
                           !text::is_space(static_cast<unsigned char>(s_[pos_]))) {
                        ++pos_;
                    }
                    attr.value = decode_entities(s_.substr(start, pos_ - start));
                }
            }
            if (!attr.name.empty()) tag.attributes.push_back(std::move(attr));
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

class TreeBuilder {
public:
    DomTree build(std::string_view html) {
        root_ = std::make_unique<BuildNode>();
        root_->tag = "html";
        head_ = append_element(root_.get(), "head");
        body_ = nullptr;
        stack_.clear();

        Tokenizer tok(html);
        StartTag start;
        std::string end_name;
        while (!tok.at_end()) {
            std::string txt = tok.consume_text();
            if (!txt.empty()) insert_text(std::move(txt));
            if (tok.at_end()) break;
            switch (tok.consume_markup(start, end_name)) {
                case Tokenizer::MarkupKind::start_tag:
                    handle_start_tag(start, tok);
                    break;
                case Tokenizer::MarkupKind::end_tag:
                    handle_end_tag(end_name);
                    break;
                case Tokenizer::MarkupKind::comment:
                    break_text_run_ = true;
                    break;
                default:
                    break;
            }
        }
        ensure_body();

        DomTree tree;
        tree.root = convert(*root_);
        return tree;
    }

private:
    BuildNode* append_element(BuildNode* parent, std::string tag) {
        auto node = std::make_unique<BuildNode>();
        node->kind = DomNode::Kind::element;
        node->tag = std::move(tag);
        BuildNode* raw = node.get();
        parent->children.push_back(std::move(node));
        return raw;
    }

    BuildNode* current() {
        if (!stack_.empty()) return stack_.back();
        return body_ ? body_ : nullptr;
    }

    void ensure_body() {
        if (!body_) {
            body_ = append_element(root_.get(), "body");
        }
    }

    void insert_text(std::string data) {
        BuildNode* target;
        if (!body_ && stack_.empty()) {
            // Whitespace before any body content is dropped, as in the
            // standard "before head"/"before body" insertion modes.
            if (text::collapse_whitespace(data).empty()) return;
            ensure_body();
            target = body_;
        } else {
            target = current();
            if (!target) {
                ensure_body();
                target = body_;
            }
        }
        if (!break_text_run_ && !target->children.empty() &&
            target->children.back()->kind == DomNode::Kind::text) {
            target->children.back()->data += data;
        } else {
            auto node = std::make_unique<BuildNode>();
            node->kind = DomNode::Kind::text;
            node->data = std::move(data);
            target->children.push_back(std::move(node));
        }
        break_text_run_ = false;
    }

    void handle_start_tag(StartTag& tag, Tokenizer& tok) {
        const std::string& name = tag.name;
        if (name.empty()) return;
        break_text_run_ = true;

        if (name == "html") return;
        if (name == "head") return;
        if (name == "body") {
            ensure_body();
            return;
        }

        bool in_head = !body_ && stack_.empty() && kHeadElements.count(name) > 0;
        BuildNode* parent;
        if (in_head) {
            parent = head_;
        } else {
            ensure_body();
            apply_implied_end_tags(name);
            parent = current();
        }

        if (kRawTextElements.count(name) || kRcdataElements.count(name)) {
            BuildNode* el = append_element(parent, name);
            std::string raw = tok.consume_raw_text(name, kRcdataElements.count(name) > 0);
            if (!raw.empty()) {
                auto node = std::make_unique<BuildNode>();
                node->kind = DomNode::Kind::text;
                node->data = std::move(raw);
                el->children.push_back(std::move(node));
            }
            // The matching end tag, if present, is consumed as a normal end
            // tag and ignored because the element is never on the stack.
            return;
        }

        BuildNode* el = append_element(parent, name);
        if (kVoidElements.count(name)) return;
        if (!in_head && stack_.size() < kMaxDepth) stack_.push_back(el);
    }

    void apply_implied_end_tags(const std::string& name) {
        if (kParagraphClosers.count(name)) close_nearest("p");
        auto it = sibling_closers().find(name);
        if (it != sibling_closers().end()) {
            for (std::string_view victim : it->second) {
                close_nearest(victim);
            }
        }
    }

    void close_nearest(std::string_view tag) {
        for (std::size_t i = stack_.size(); i > 0; --i) {
            if (stack_[i - 1]->tag == tag) {
                stack_.resize(i - 1);
                break_text_run_ = true;
                return;
            }
        }
    }

    void handle_end_tag(const std::string& name) {
        break_text_run_ = true;
        if (name.empty() || name == "body" || name == "html" || name == "head") return;
        for (std::size_t i = stack_.size(); i > 0; --i) {
            if (stack_[i - 1]->tag == name) {
                stack_.resize(i - 1);
                return;
            }
        }
        // No matching open element: ignored.
    }

    DomNode convert(const BuildNode& n) {
        DomNode out;
        out.kind = n.kind;
        out.tag_name = n.tag;
        out.text_data = n.data;
        out.children.reserve(n.children.size());
        for (const auto& child : n.children) out.children.push_back(convert(*child));
        return out;
    }

    std::unique_ptr<BuildNode> root_;
    BuildNode* head_ = nullptr;
    BuildNode* body_ = nullptr;
    std::vector<BuildNode*> stack_;
    bool break_text_run_ = false;
};

}  // namespace

DomTree parse_document(std::string_view bytes, std::string_view encoding_hint) {
    std::string decoded = decode_html_bytes(bytes, encoding_hint);
    TreeBuilder builder;
    return builder.build(decoded);
}

}  // namespace darkdetect
