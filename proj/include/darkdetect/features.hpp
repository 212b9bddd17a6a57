#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace darkdetect {

/// Lowercases and splits on maximal runs of non-alphanumeric characters.
/// Pure-digit tokens are kept; empty tokens are dropped.
std::vector<std::string> tokenize(std::string_view input);

/// Token-to-index map for bag-of-words vectors. Indices are dense,
/// 0..size()-1, in order of first appearance in the build corpus.
struct Vocabulary {
    std::unordered_map<std::string, std::uint32_t> token_to_index;
    std::vector<std::string> index_to_token;
    std::vector<std::uint32_t> document_frequency;  // per index
    std::uint32_t min_df = 1;
    std::uint64_t config_hash = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(index_to_token.size()); }
};

/// Builds the vocabulary from the given texts: tokens whose document
/// frequency reaches min_df, indexed in first-appearance order. Throws
/// DataError on an empty corpus (a corpus of empty texts gives an empty
/// vocabulary).
Vocabulary build_vocabulary(std::span<const std::string> corpus, std::uint32_t min_df = 1);

/// Sparse token-count vector. Indices are strictly increasing, counts >= 1.
struct FeatureVector {
    std::vector<std::uint32_t> indices;
    std::vector<std::uint32_t> counts;
    std::uint32_t dimension = 0;

    std::size_t nonzeros() const { return indices.size(); }
};

/// Counts in-vocabulary tokens of the text; out-of-vocabulary tokens are
/// ignored. The dimension always equals the vocabulary size.
FeatureVector vectorize(std::string_view input, const Vocabulary& vocab);

}  // namespace darkdetect
