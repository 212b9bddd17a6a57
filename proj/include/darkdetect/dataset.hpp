#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darkdetect/segmenter.hpp"

namespace darkdetect {

enum class Label : std::uint8_t { non_dark = 0, dark = 1 };

/// One row of the upstream dark-pattern record file.
struct PatternRecord {
    std::optional<std::string> pattern_string;
    std::string comment;
    std::string pattern_category;
    std::string pattern_type;
    std::string page_location;  // "Where on the website?"
    bool deceptive = false;
    std::string website_page;
};

/// Matching key with numerals, case, and punctuation ignored: lowercase, no
/// digits, no punctuation, single-spaced, trimmed.
struct NormalizedKey {
    std::string key;

    bool contains(const NormalizedKey& needle) const {
        return key.find(needle.key) != std::string::npos;
    }
    bool operator==(const NormalizedKey& other) const = default;
};

NormalizedKey normalize_for_match(std::string_view text);

/// One labeled text of the dataset.
struct TextSample {
    std::string text;
    Label label = Label::non_dark;
    std::string source_url;
    std::string pattern_category;  // empty for non-dark samples
    std::string pattern_type;
};

/// Reads pattern records from a delimited stream (comma or tab, sniffed from
/// the header). Rows with a missing pattern string are dropped; duplicate
/// pattern strings (exact, after trimming) keep the first occurrence.
/// Throws SchemaError when the header or the "Pattern String" column is
/// missing.
std::vector<PatternRecord> load_pattern_records(std::istream& in);
std::vector<PatternRecord> load_pattern_records_file(const std::filesystem::path& path);

/// Drops every candidate whose normalized key contains the normalized key of
/// any positive, then deduplicates the survivors by key (first kept).
std::vector<SegmentedText> filter_non_dark(std::vector<SegmentedText> candidates,
                                           std::span<const PatternRecord> positives);

/// Uniform sample without replacement: the first `n` entries of the
/// seed-determined shuffle, labeled non-dark. Throws
/// InsufficientCandidatesError when n exceeds the candidate count.
std::vector<TextSample> sample_negatives(std::span<const SegmentedText> candidates,
                                         std::size_t n, std::uint64_t seed);

struct Dataset {
    std::vector<TextSample> samples;  // all dark first, then all non-dark
    bool balance_warning = false;

    std::size_t dark_count() const;
    std::size_t non_dark_count() const;
};

/// Assembles the labeled dataset: positives become dark samples, in source
/// order, followed by the given negatives. Sets `balance_warning` when the
/// class counts differ. Throws EmptyClassError when either side is empty.
Dataset build_dataset(std::span<const PatternRecord> positives,
                      std::span<const TextSample> negatives);

/// Dataset file format: CSV with header `text,label,source_url,
/// pattern_category,pattern_type`; label is 1 (dark) or 0 (non-dark).
void write_dataset_csv(const Dataset& dataset, std::ostream& out);
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv_file(const std::filesystem::path& path);

}  // namespace darkdetect
