#ifndef FPNB_PREPROCESS_HPP
#define FPNB_PREPROCESS_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpnb/porter.hpp"

namespace fpnb {

// A document as it arrives: free text plus an identifier and an optional
// class label ("" when unlabeled).
struct RawDocument {
    std::string id;
    std::string label;
    std::string text;
};

// A document reduced to its deduplicated keyword transaction. Keywords keep
// first-occurrence order; equality is order-insensitive (set semantics).
struct KeywordSet {
    std::string id;
    std::string label;
    std::vector<std::string> keywords;  // unique, first-occurrence order

    bool contains(const std::string& word) const {
        return std::find(keywords.begin(), keywords.end(), word) != keywords.end();
    }

    std::vector<std::string> sorted() const {
        std::vector<std::string> s = keywords;
        std::sort(s.begin(), s.end());
        return s;
    }

    bool same_keywords(const KeywordSet& other) const { return sorted() == other.sorted(); }
};

enum class Stemming { off, porter };

struct PipelineConfig {
    std::set<std::string> stopwords;
    std::optional<std::set<std::string>> keyword_lexicon;  // allow-list standing in for noun extraction
    std::map<std::string, std::string> aliases;            // surface form -> lexicon word, e.g. site -> website
    bool singularize = true;
    Stemming stemming = Stemming::off;
};

// Splits on any non-alphabetic character, lowercases, drops empties.
inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char ch : text) {
        if (std::isalpha(ch)) {
            current.push_back(static_cast<char>(std::tolower(ch)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

// Strips one plural suffix: ies -> y, sses -> ss, trailing s (not ss).
// Applying it twice gives the same result as applying it once.
inline std::string singularize(const std::string& word) {
    const auto n = word.size();
    if (n > 4 && word.ends_with("ies")) return word.substr(0, n - 3) + "y";
    if (n > 4 && word.ends_with("sses")) return word.substr(0, n - 2);
    if (n > 3 && word.ends_with("s") && !word.ends_with("ss")) return word.substr(0, n - 1);
    return word;
}

namespace detail {

// Candidate normal forms for matching a token against the lexicon, in
// preference order: the token itself, singular forms, then the suffix
// rewrites ed->e (unauthorized -> unauthorize), ing-> (networking ->
// network) and ing->e (sharing -> share).
inline std::vector<std::string> lexicon_candidates(const std::string& token, bool singular) {
    std::vector<std::string> out;
    out.push_back(token);
    const auto n = token.size();
    if (singular) {
        if (n > 4 && token.ends_with("ies")) out.push_back(token.substr(0, n - 3) + "y");
        if (n > 4 && token.ends_with("sses")) out.push_back(token.substr(0, n - 2));
        if (n > 3 && token.ends_with("s") && !token.ends_with("ss")) out.push_back(token.substr(0, n - 1));
    }
    if (n > 3 && token.ends_with("ed")) out.push_back(token.substr(0, n - 1));
    if (n > 4 && token.ends_with("ing")) {
        out.push_back(token.substr(0, n - 3));
        out.push_back(token.substr(0, n - 3) + "e");
    }
    return out;
}

// Resolves a token to its lexicon form, or nullopt when no candidate lands
// in the lexicon.
inline std::optional<std::string> resolve_against_lexicon(const std::string& token, const PipelineConfig& cfg) {
    const auto& lexicon = *cfg.keyword_lexicon;
    for (std::string candidate : lexicon_candidates(token, cfg.singularize)) {
        if (auto it = cfg.aliases.find(candidate); it != cfg.aliases.end()) candidate = it->second;
        if (lexicon.count(candidate)) return candidate;
    }
    return std::nullopt;
}

}  // namespace detail

// Normalized token stream of a document before deduplication: tokenize,
// drop stopwords, resolve against the lexicon when one is set, singularize,
// stem. Duplicates are preserved (term-frequency counting needs them).
inline std::vector<std::string> preprocess_tokens(const std::string& text, const PipelineConfig& cfg) {
    std::vector<std::string> kept;
    for (const std::string& token : tokenize(text)) {
        if (cfg.stopwords.count(token)) continue;
        std::string word;
        if (cfg.keyword_lexicon) {
            auto resolved = detail::resolve_against_lexicon(token, cfg);
            if (!resolved) continue;
            word = std::move(*resolved);
        } else {
            word = cfg.singularize ? singularize(token) : token;
        }
        if (cfg.stemming == Stemming::porter) word = porter_stem(std::move(word));
        kept.push_back(std::move(word));
    }
    return kept;
}

// Full pipeline for one document: normalized tokens deduplicated into a
// keyword set, id and label carried through.
inline KeywordSet preprocess_document(const RawDocument& doc, const PipelineConfig& cfg) {
    KeywordSet result;
    result.id = doc.id;
    result.label = doc.label;
    for (std::string& word : preprocess_tokens(doc.text, cfg)) {
        if (!result.contains(word)) result.keywords.push_back(std::move(word));
    }
    return result;
}

}  // namespace fpnb

#endif  // FPNB_PREPROCESS_HPP
