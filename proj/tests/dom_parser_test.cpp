#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "darkdetect/dom.hpp"
#include "darkdetect/errors.hpp"
#include "darkdetect/html_parser.hpp"
#include "darkdetect/text_util.hpp"
#include "tree_dump.hpp"

using namespace darkdetect;

// Expected trees below were produced by the parse5 reference parser
// (HTML5 tree construction) on the same inputs, comments dropped.
namespace {

struct ParseFixture {
    const char* html;
    const char* expected;
};

const ParseFixture kParseFixtures[] = {
    {"<body><p>hi</p></body>", "(html (head ) (body (p \"hi\")))"},
    {"<p>unclosed", "(html (head ) (body (p \"unclosed\")))"},
    {"", "(html (head ) (body ))"},
    {"<div><p>a<p>b</div>", "(html (head ) (body (div (p \"a\") (p \"b\"))))"},
    {"<ul><li>one<li>two</ul>", "(html (head ) (body (ul (li \"one\") (li \"two\"))))"},
    {"<p>one<div>two</div>three", "(html (head ) (body (p \"one\") (div \"two\") \"three\"))"},
    {"<span>a<p>b</p>c</span>", "(html (head ) (body (span \"a\" (p \"b\") \"c\")))"},
    {"text&amp;more", "(html (head ) (body \"text&more\"))"},
    {"<p>x<script>if(a<b){console.log(\"</div>\")}</script>y",
     "(html (head ) (body (p \"x\" (script \"if(a<b){console.log(\\\"</div>\\\")}\") \"y\")))"},
    {"<title>T</title>x", "(html (head (title \"T\")) (body \"x\"))"},
    {"a<br>b", "(html (head ) (body \"a\" (br ) \"b\"))"},
    {"<P CLASS=\"x\">Mixed<EM>Case</EM></P>", "(html (head ) (body (p \"Mixed\" (em \"Case\"))))"},
    {"<div>a<!-- comment -->b</div>", "(html (head ) (body (div \"a\" \"b\")))"},
    {"<p>a<span>b<script>s</script>c</span>d</p>",
     "(html (head ) (body (p \"a\" (span \"b\" (script \"s\") \"c\") \"d\")))"},
};

}  // namespace

TEST_CASE("parse_document matches reference-parser trees") {
    for (const ParseFixture& fixture : kParseFixtures) {
        CAPTURE(fixture.html);
        DomTree tree = parse_document(fixture.html);
        CHECK(dump_tree(tree) == fixture.expected);
    }
}

TEST_CASE("parse_document is deterministic") {
    const char* html = "<div><p>a<p>b</div><ul><li>x<li>y</ul>";
    CHECK(dump_tree(parse_document(html)) == dump_tree(parse_document(html)));
}

TEST_CASE("parse_document synthesizes a body and lowercases tags") {
    DomTree tree = parse_document("<DIV>text</DIV>");
    const DomNode& body = tree.body();
    REQUIRE(body.children.size() == 1);
    CHECK(body.children[0].tag_name == "div");
}

TEST_CASE("empty input gives an empty body") {
    DomTree tree = parse_document("");
    CHECK(tree.body().children.empty());
}

TEST_CASE("decode errors carry the byte offset") {
    SUBCASE("invalid UTF-8") {
        std::string bytes = "abc\xFFxyz";
        CHECK_THROWS_AS(parse_document(bytes), DecodeError);
        try {
            parse_document(bytes);
        } catch (const DecodeError& e) {
            CHECK(e.offset() == 3);
        }
    }
    SUBCASE("truncated UTF-16 unit") {
        std::string bytes = "\xFF\xFE\x61\x00\x62";  // BOM + 'a' + half unit
        CHECK_THROWS_AS(parse_document(bytes), DecodeError);
    }
    SUBCASE("unsupported charset label") {
        CHECK_THROWS_AS(parse_document("<p>x</p>", "shift_jis"), DecodeError);
    }
}

TEST_CASE("charset handling") {
    SUBCASE("UTF-8 BOM is stripped") {
        DomTree tree = parse_document("\xEF\xBB\xBF<p>hi</p>");
        CHECK(dump_tree(tree) == "(html (head ) (body (p \"hi\")))");
    }
    SUBCASE("meta charset prescan decodes windows-1252") {
        std::string page = "<meta charset=\"windows-1252\"><p>it\x92s</p>";
        DomTree tree = parse_document(page);
        CHECK(tree.body().children[0].children[0].text_data == "it\xE2\x80\x99s");
    }
    SUBCASE("hint wins over the default") {
        std::string page = "<p>caf\xE9</p>";  // latin-1 byte
        DomTree tree = parse_document(page, "iso-8859-1");
        CHECK(tree.body().children[0].children[0].text_data == "caf\xC3\xA9");
    }
    SUBCASE("UTF-16LE via BOM") {
        std::string bytes = "\xFF\xFE";
        for (char c : std::string("<p>hi</p>")) {
            bytes.push_back(c);
            bytes.push_back('\0');
        }
        DomTree tree = parse_document(bytes);
        CHECK(dump_tree(tree) == "(html (head ) (body (p \"hi\")))");
    }
}

TEST_CASE("entity decoding") {
    CHECK(decode_entities("a &amp; b") == "a & b");
    CHECK(decode_entities("&lt;tag&gt;") == "<tag>");
    CHECK(decode_entities("&#65;&#x42;") == "AB");
    CHECK(decode_entities("&#146;") == "\xE2\x80\x99");  // legacy cp1252 remap
    CHECK(decode_entities("&notareal;") == "&notareal;");
    CHECK(decode_entities("5 &lt 6") == "5 &lt 6");  // no semicolon, left alone
    CHECK(decode_entities("&rsquo;&hellip;") == "\xE2\x80\x99\xE2\x80\xA6");
}

TEST_CASE("classify_tag follows the policy sets") {
    const TagPolicy& policy = TagPolicy::standard();
    CHECK(classify_tag("script", policy) == ElementClass::ignored);
    CHECK(classify_tag("style", policy) == ElementClass::ignored);
    CHECK(classify_tag("noscript", policy) == ElementClass::ignored);
    CHECK(classify_tag("br", policy) == ElementClass::ignored);
    CHECK(classify_tag("hr", policy) == ElementClass::ignored);
    CHECK(classify_tag("div", policy) == ElementClass::block);
    CHECK(classify_tag("p", policy) == ElementClass::block);
    CHECK(classify_tag("span", policy) == ElementClass::inline_level);
    CHECK(classify_tag("button", policy) == ElementClass::inline_level);
    CHECK(classify_tag("custom-widget", policy) == ElementClass::other);
}

TEST_CASE("standard policy sets are pairwise disjoint") {
    const TagPolicy& policy = TagPolicy::standard();
    for (const std::string& tag : policy.ignore_elements) {
        CHECK(policy.block_elements.count(tag) == 0);
        CHECK(policy.inline_elements.count(tag) == 0);
    }
    for (const std::string& tag : policy.block_elements) {
        CHECK(policy.inline_elements.count(tag) == 0);
    }
    CHECK(policy.ignore_elements ==
          std::unordered_set<std::string>{"script", "style", "noscript", "br", "hr"});
}

TEST_CASE("text_content concatenates descendants and skips ignored subtrees") {
    SUBCASE("text plus inline child") {
        DomNode p = DomNode::element("p");
        p.children.push_back(DomNode::text("a "));
        DomNode span = DomNode::element("span");
        span.children.push_back(DomNode::text("b"));
        p.children.push_back(std::move(span));
        CHECK(text_content(p) == "a b");
    }
    SUBCASE("only ignored content is absent") {
        DomNode p = DomNode::element("p");
        DomNode script = DomNode::element("script");
        script.children.push_back(DomNode::text("x"));
        p.children.push_back(std::move(script));
        CHECK(!text_content(p).has_value());
    }
    SUBCASE("whitespace-only text is absent") {
        DomNode t = DomNode::text("  ");
        CHECK(!text_content(t).has_value());
    }
    SUBCASE("nested ignored inside inline is skipped") {
        DomNode span = DomNode::element("span");
        span.children.push_back(DomNode::text("keep "));
        DomNode style = DomNode::element("style");
        style.children.push_back(DomNode::text(".x{}"));
        span.children.push_back(std::move(style));
        span.children.push_back(DomNode::text(" this"));
        CHECK(text_content(span) == "keep this");
    }
}

TEST_CASE("text utilities") {
    using namespace darkdetect::text;
    CHECK(collapse_whitespace("  a\t\tb \n") == "a b");
    CHECK(collapse_whitespace("\n \t") == "");
    CHECK(to_lower_copy("HeLLo \xC3\x89") == "hello \xC3\xA9");  // É -> é
    CHECK(find_invalid_utf8("ok").has_value() == false);
    CHECK(find_invalid_utf8(std::string_view("a\xC0\x80", 3)) == 1);  // overlong
    CHECK(trim_copy("  x  ") == "x");
    CHECK(iequals_ascii("Pattern String", "pattern string"));
    // NBSP collapses like a space.
    CHECK(collapse_whitespace("a\xC2\xA0 b") == "a b");
}
