#include "darkdetect/csv.hpp"

#include <istream>
#include <ostream>

namespace darkdetect::csv {

std::string escape_field(std::string_view field, char delim) {
    bool needs_quotes = field.find_first_of("\"\r\n") != std::string_view::npos ||
                        field.find(delim) != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields,
               char delim) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(delim);
        out << escape_field(fields[i], delim);
    }
    out.put('\n');
}

Reader::Reader(std::istream& in, char delim) : in_(in), delim_(delim) {}

std::optional<std::vector<std::string>> Reader::next_row() {
    if (at_start_) {
        at_start_ = false;
        // Skip a UTF-8 BOM if present.
        if (in_.peek() == 0xEF) {
            char bom[3];
            in_.read(bom, 3);
            if (in_.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
                for (std::streamsize i = in_.gcount(); i > 0; --i) in_.unget();
            }
        }
    }

    for (;;) {
        int first = in_.peek();
        if (first == std::istream::traits_type::eof()) return std::nullopt;
        if (first == '\n' || first == '\r') {  // blank line
            in_.get();
            if (first == '\r' && in_.peek() == '\n') in_.get();
            continue;
        }
        break;
    }

    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    int c;
    while ((c = in_.get()) != std::istream::traits_type::eof()) {
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == delim_) {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && in_.peek() == '\n') in_.get();
            fields.push_back(std::move(field));
            return fields;
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

char sniff_delimiter(std::string_view header_line) {
    return header_line.find('\t') != std::string_view::npos ? '\t' : ',';
}

}  // namespace darkdetect::csv
