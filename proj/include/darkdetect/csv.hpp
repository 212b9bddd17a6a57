#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace darkdetect::csv {

/// Quotes a field if it contains the delimiter, a quote, or a line break.
std::string escape_field(std::string_view field, char delim = ',');

void write_row(std::ostream& out, const std::vector<std::string>& fields,
               char delim = ',');

/// RFC 4180 style reader: quoted fields, doubled-quote escapes, embedded
/// delimiters and newlines, CRLF or LF line endings. A UTF-8 BOM before the
/// first row is skipped.
class Reader {
public:
    explicit Reader(std::istream& in, char delim = ',');

    /// Next record, or nullopt at end of input. Blank lines are skipped.
    std::optional<std::vector<std::string>> next_row();

private:
    std::istream& in_;
    char delim_;
    bool at_start_ = true;
};

/// Picks '\t' when the header line contains a tab, ',' otherwise.
char sniff_delimiter(std::string_view header_line);

}  // namespace darkdetect::csv
