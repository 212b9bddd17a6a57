#include "darkdetect/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "darkdetect/csv.hpp"
#include "darkdetect/errors.hpp"
#include "darkdetect/rng.hpp"
#include "darkdetect/text_util.hpp"

namespace darkdetect {

NormalizedKey normalize_for_match(std::string_view input) {
    std::string out;
    out.reserve(input.size());
    bool pending_space = false;
    text::Utf8Cursor cur(input);
    char32_t cp;
    while (cur.next(cp)) {
        cp = text::to_lower(cp);
        if (text::is_ascii_digit(cp) || text::is_punct(cp)) continue;
        if (text::is_space(cp)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        text::append_utf8(out, cp);
    }
    return {std::move(out)};
}

namespace {

bool parse_flag(std::string_view field) {
    std::string_view v = text::trim_view(field);
    return text::iequals_ascii(v, "true") || text::iequals_ascii(v, "yes") || v == "1";
}

bool is_null_field(std::string_view field) {
    std::string_view v = text::trim_view(field);
    return v.empty() || text::iequals_ascii(v, "null");
}

std::string field_at(const std::vector<std::string>& row, std::size_t idx) {
    return idx < row.size() ? row[idx] : std::string();
}

}  // namespace

std::vector<PatternRecord> load_pattern_records(std::istream& in) {
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw SchemaError("pattern record stream is empty (no header)");
    }
    if (!header_line.empty() && header_line.back() == '\r') header_line.pop_back();
    char delim = csv::sniff_delimiter(header_line);

    std::vector<std::string> header;
    {
        std::istringstream header_stream(header_line + "\n");
        csv::Reader header_reader(header_stream, delim);
        auto row = header_reader.next_row();
        if (!row) throw SchemaError("pattern record stream is empty (no header)");
        header = *row;
    }

    constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    std::size_t col_pattern = kMissing, col_comment = kMissing, col_category = kMissing,
                col_type = kMissing, col_where = kMissing, col_deceptive = kMissing,
                col_page = kMissing;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string_view name = text::trim_view(header[i]);
        if (text::iequals_ascii(name, "pattern string")) col_pattern = i;
        else if (text::iequals_ascii(name, "comment")) col_comment = i;
        else if (text::iequals_ascii(name, "pattern category")) col_category = i;
        else if (text::iequals_ascii(name, "pattern type")) col_type = i;
        else if (text::iequals_ascii(name, "where on the website?")) col_where = i;
        else if (text::iequals_ascii(name, "deceptive?")) col_deceptive = i;
        else if (text::iequals_ascii(name, "website page")) col_page = i;
    }
    if (col_pattern == kMissing) {
        throw SchemaError("pattern record header has no 'Pattern String' column");
    }

    std::vector<PatternRecord> records;
    std::unordered_set<std::string> seen;
    csv::Reader reader(in, delim);
    while (auto row = reader.next_row()) {
        std::string raw_pattern = field_at(*row, col_pattern);
        if (is_null_field(raw_pattern)) continue;
        std::string pattern = text::trim_copy(raw_pattern);
        if (!seen.insert(pattern).second) continue;

        PatternRecord rec;
        rec.pattern_string = std::move(pattern);
        if (col_comment != kMissing) rec.comment = field_at(*row, col_comment);
        if (col_category != kMissing) rec.pattern_category = field_at(*row, col_category);
        if (col_type != kMissing) rec.pattern_type = field_at(*row, col_type);
        if (col_where != kMissing) rec.page_location = field_at(*row, col_where);
        if (col_deceptive != kMissing) rec.deceptive = parse_flag(field_at(*row, col_deceptive));
        if (col_page != kMissing) rec.website_page = text::trim_copy(field_at(*row, col_page));
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<PatternRecord> load_pattern_records_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open pattern record file: " + path.string());
    return load_pattern_records(in);
}

std::vector<SegmentedText> filter_non_dark(std::vector<SegmentedText> candidates,
                                           std::span<const PatternRecord> positives) {
    std::vector<NormalizedKey> positive_keys;
    positive_keys.reserve(positives.size());
    for (const PatternRecord& rec : positives) {
        if (!rec.pattern_string) continue;
        NormalizedKey key = normalize_for_match(*rec.pattern_string);
        if (!key.key.empty()) positive_keys.push_back(std::move(key));
    }

    std::vector<SegmentedText> kept;
    kept.reserve(candidates.size());
    std::unordered_set<std::string> seen_keys;
    for (SegmentedText& candidate : candidates) {
        NormalizedKey key = normalize_for_match(candidate.text);
        bool contains_positive = false;
        for (const NormalizedKey& pos : positive_keys) {
            if (key.contains(pos)) {
                contains_positive = true;
                break;
            }
        }
        if (contains_positive) continue;
        if (!seen_keys.insert(key.key).second) continue;
        kept.push_back(std::move(candidate));
    }
    return kept;
}

std::vector<TextSample> sample_negatives(std::span<const SegmentedText> candidates,
                                         std::size_t n, std::uint64_t seed) {
    if (n > candidates.size()) {
        throw InsufficientCandidatesError(n, candidates.size());
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    std::vector<TextSample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SegmentedText& unit = candidates[order[i]];
        samples.push_back({unit.text, Label::non_dark, unit.source_url, "", ""});
    }
    return samples;
}

std::size_t Dataset::dark_count() const {
    std::size_t n = 0;
    for (const TextSample& s : samples) n += s.label == Label::dark;
    return n;
}

std::size_t Dataset::non_dark_count() const { return samples.size() - dark_count(); }

Dataset build_dataset(std::span<const PatternRecord> positives,
                      std::span<const TextSample> negatives) {
    if (positives.empty()) throw EmptyClassError("no dark (positive) samples");
    if (negatives.empty()) throw EmptyClassError("no non-dark (negative) samples");

    Dataset dataset;
    dataset.samples.reserve(positives.size() + negatives.size());
    for (const PatternRecord& rec : positives) {
        if (!rec.pattern_string) continue;
        std::string trimmed = text::trim_copy(*rec.pattern_string);
        if (trimmed.empty()) continue;
        dataset.samples.push_back({std::move(trimmed), Label::dark, rec.website_page,
                                   rec.pattern_category, rec.pattern_type});
    }
    std::size_t dark = dataset.samples.size();
    if (dark == 0) throw EmptyClassError("no dark (positive) samples");
    for (const TextSample& s : negatives) dataset.samples.push_back(s);
    dataset.balance_warning = dark != negatives.size();
    return dataset;
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out) {
    csv::write_row(out, {"text", "label", "source_url", "pattern_category", "pattern_type"});
    for (const TextSample& s : dataset.samples) {
        csv::write_row(out, {s.text, s.label == Label::dark ? "1" : "0", s.source_url,
                             s.pattern_category, s.pattern_type});
    }
}

Dataset read_dataset_csv(std::istream& in) {
    csv::Reader reader(in);
    auto header = reader.next_row();
    if (!header || header->empty() || !text::iequals_ascii(text::trim_view((*header)[0]), "text")) {
        throw SchemaError("dataset file has no 'text,label,...' header");
    }
    Dataset dataset;
    std::size_t line = 1;
    while (auto row = reader.next_row()) {
        ++line;
        if (row->size() < 2) {
            throw SchemaError("dataset row " + std::to_string(line) + " has fewer than 2 fields");
        }
        std::string_view label_field = text::trim_view((*row)[1]);
        Label label;
        if (label_field == "1") label = Label::dark;
        else if (label_field == "0") label = Label::non_dark;
        else throw SchemaError("dataset row " + std::to_string(line) + " has label '" +
                               std::string(label_field) + "' (expected 0 or 1)");
        std::string text_value = text::trim_copy((*row)[0]);
        if (text_value.empty()) continue;
        dataset.samples.push_back({std::move(text_value), label, field_at(*row, 2),
                                   field_at(*row, 3), field_at(*row, 4)});
    }
    dataset.balance_warning = dataset.dark_count() != dataset.non_dark_count();
    return dataset;
}

Dataset read_dataset_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path.string());
    return read_dataset_csv(in);
}

}  // namespace darkdetect
