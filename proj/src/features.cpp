#include "darkdetect/features.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "darkdetect/errors.hpp"
#include "darkdetect/text_util.hpp"

namespace darkdetect {

std::vector<std::string> tokenize(std::string_view input) {
    std::vector<std::string> tokens;
    std::string current;
    text::Utf8Cursor cur(input);
    char32_t cp;
    while (cur.next(cp)) {
        if (text::is_alnum(cp)) {
            text::append_utf8(current, text::to_lower(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

Vocabulary build_vocabulary(std::span<const std::string> corpus, std::uint32_t min_df) {
    if (corpus.empty()) throw DataError("cannot build a vocabulary from an empty corpus");
    if (min_df < 1) min_df = 1;

    // First-appearance order with per-document frequency counts.
    std::vector<std::string> order;
    std::unordered_map<std::string, std::uint32_t> df;
    std::unordered_set<std::string_view> seen_in_doc;
    for (const std::string& doc : corpus) {
        seen_in_doc.clear();
        for (std::string& token : tokenize(doc)) {
            auto [it, inserted] = df.try_emplace(std::move(token), 0);
            if (inserted) order.push_back(it->first);
            if (seen_in_doc.insert(it->first).second) ++it->second;
        }
    }

    Vocabulary vocab;
    vocab.min_df = min_df;
    for (std::string& token : order) {
        std::uint32_t frequency = df[token];
        if (frequency < min_df) continue;
        std::uint32_t index = static_cast<std::uint32_t>(vocab.index_to_token.size());
        vocab.token_to_index.emplace(token, index);
        vocab.index_to_token.push_back(std::move(token));
        vocab.document_frequency.push_back(frequency);
    }
    vocab.config_hash = text::fnv1a64("bow.v1;tokenizer=alnum-lower;min_df=" +
                                      std::to_string(min_df));
    return vocab;
}

FeatureVector vectorize(std::string_view input, const Vocabulary& vocab) {
    std::map<std::uint32_t, std::uint32_t> counts;
    for (const std::string& token : tokenize(input)) {
        auto it = vocab.token_to_index.find(token);
        if (it != vocab.token_to_index.end()) ++counts[it->second];
    }
    FeatureVector vec;
    vec.dimension = vocab.size();
    vec.indices.reserve(counts.size());
    vec.counts.reserve(counts.size());
    for (auto [index, count] : counts) {
        vec.indices.push_back(index);
        vec.counts.push_back(count);
    }
    return vec;
}

}  // namespace darkdetect
