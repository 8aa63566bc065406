#ifndef FPNB_CLASSIFY_HPP
#define FPNB_CLASSIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fpnb/nbmodel.hpp"
#include "fpnb/preprocess.hpp"

namespace fpnb {

// Probabilities are published at three decimals (the model's probability
// table); scoring multiplies those table values.
inline double table_probability(double p) {
    return std::round(p * 1000.0) / 1000.0;
}

// Vocabulary sets contained in the document, reduced to the
// inclusion-maximal ones; indices point into the model vocabulary and stay
// in its canonical order.
struct MatchResult {
    std::vector<std::size_t> vocab_indices;
    int coverage = 0;  // distinct document keywords covered by the matched sets
};

struct Classification {
    std::string doc_id;
    std::vector<double> scores;  // per class, in model class order
    std::string predicted;
    MatchResult matched;
    bool fallback = false;  // no vocabulary set matched; scores are the priors
};

inline MatchResult match_sets(const KeywordSet& keywords, const ClassModel& model) {
    std::vector<std::size_t> contained;
    for (std::size_t v = 0; v < model.vocabulary.size(); ++v) {
        const auto& items = model.vocabulary[v].items;
        if (std::all_of(items.begin(), items.end(), [&](const std::string& w) { return keywords.contains(w); }))
            contained.push_back(v);
    }

    MatchResult result;
    std::set<std::string> covered;
    for (std::size_t v : contained) {
        const auto& items = model.vocabulary[v].items;
        const bool maximal = std::none_of(contained.begin(), contained.end(), [&](std::size_t other) {
            if (other == v) return false;
            const auto& bigger = model.vocabulary[other].items;
            if (bigger.size() <= items.size()) return false;
            return std::all_of(items.begin(), items.end(), [&](const std::string& w) {
                return std::binary_search(bigger.begin(), bigger.end(), w);
            });
        });
        if (!maximal) continue;
        result.vocab_indices.push_back(v);
        covered.insert(items.begin(), items.end());
    }
    result.coverage = static_cast<int>(covered.size());
    return result;
}

inline Classification score(const KeywordSet& keywords, const ClassModel& model) {
    Classification result;
    result.doc_id = keywords.id;
    result.matched = match_sets(keywords, model);
    result.fallback = result.matched.vocab_indices.empty();

    for (std::size_t j = 0; j < model.classes.size(); ++j) {
        double s = model.prior(j);
        for (std::size_t v : result.matched.vocab_indices) s *= table_probability(model.likelihood(v, j));
        result.scores.push_back(s);
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j < model.classes.size(); ++j)
        if (result.scores[j] > result.scores[best]) best = j;  // ties keep the earlier class
    result.predicted = model.classes[best].name;
    return result;
}

inline std::vector<Classification> classify_batch(const std::vector<KeywordSet>& docs, const ClassModel& model) {
    std::vector<Classification> results;
    results.reserve(docs.size());
    for (const KeywordSet& doc : docs) results.push_back(score(doc, model));
    return results;
}

}  // namespace fpnb

#endif  // FPNB_CLASSIFY_HPP
