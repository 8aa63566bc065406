#ifndef FPNB_CORPUS_HPP
#define FPNB_CORPUS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fpnb/preprocess.hpp"

namespace fpnb {

// An ordered collection of preprocessed documents plus the distinct class
// labels in first-appearance order.
struct Corpus {
    std::vector<KeywordSet> documents;
    std::vector<std::string> classes;

    static Corpus from_documents(std::vector<KeywordSet> docs) {
        Corpus corpus;
        std::unordered_set<std::string> seen_ids;
        std::unordered_set<std::string> seen_classes;
        for (const KeywordSet& doc : docs) {
            if (doc.id.empty()) throw std::invalid_argument("document with empty id");
            if (!seen_ids.insert(doc.id).second)
                throw std::invalid_argument("duplicate document id: " + doc.id);
            if (!doc.label.empty() && seen_classes.insert(doc.label).second)
                corpus.classes.push_back(doc.label);
        }
        corpus.documents = std::move(docs);
        return corpus;
    }

    std::vector<std::vector<std::string>> transactions_for_class(const std::string& label) const {
        std::vector<std::vector<std::string>> result;
        for (const KeywordSet& doc : documents)
            if (doc.label == label) result.push_back(doc.keywords);
        return result;
    }
};

// Binary term x document incidence. Terms are ordered by first appearance
// across documents in corpus order; a cell is 1 iff the term occurs in the
// document's keyword set.
struct TermDocumentMatrix {
    std::vector<std::string> terms;
    std::vector<std::string> doc_ids;
    std::vector<std::vector<std::uint8_t>> cells;  // [term][doc]

    int document_frequency(const std::string& term) const {
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (terms[t] != term) continue;
            int df = 0;
            for (std::uint8_t c : cells[t]) df += c;
            return df;
        }
        return 0;
    }
};

inline TermDocumentMatrix build_matrix(const Corpus& corpus) {
    if (corpus.documents.empty()) throw std::invalid_argument("corpus has no documents");
    TermDocumentMatrix matrix;
    std::unordered_map<std::string, std::size_t> term_index;
    for (const KeywordSet& doc : corpus.documents) {
        matrix.doc_ids.push_back(doc.id);
        for (const std::string& word : doc.keywords) {
            if (term_index.emplace(word, matrix.terms.size()).second) matrix.terms.push_back(word);
        }
    }
    if (matrix.terms.empty()) throw std::invalid_argument("corpus documents are all empty keyword sets");
    matrix.cells.assign(matrix.terms.size(), std::vector<std::uint8_t>(matrix.doc_ids.size(), 0));
    for (std::size_t d = 0; d < corpus.documents.size(); ++d)
        for (const std::string& word : corpus.documents[d].keywords)
            matrix.cells[term_index.at(word)][d] = 1;
    return matrix;
}

// Tab-separated rendering: header row of document ids, one row per term.
inline std::string matrix_to_tsv(const TermDocumentMatrix& matrix) {
    std::string out = "Keywords";
    for (const std::string& id : matrix.doc_ids) {
        out += '\t';
        out += id;
    }
    out += '\n';
    for (std::size_t t = 0; t < matrix.terms.size(); ++t) {
        out += matrix.terms[t];
        for (std::uint8_t c : matrix.cells[t]) {
            out += '\t';
            out += (c ? '1' : '0');
        }
        out += '\n';
    }
    return out;
}

// Per-document token multiset, counted before deduplication; the basis for
// term frequencies.
struct TokenBag {
    std::string doc_id;
    std::map<std::string, int> counts;
    int total = 0;

    static TokenBag from_tokens(std::string doc_id, const std::vector<std::string>& tokens) {
        TokenBag bag;
        bag.doc_id = std::move(doc_id);
        for (const std::string& token : tokens) {
            ++bag.counts[token];
            ++bag.total;
        }
        return bag;
    }
};

// Fraction of the document's token occurrences that are `term`.
inline double tf(const std::string& term, const TokenBag& doc) {
    if (doc.total <= 0) throw std::invalid_argument("term frequency of a document with no tokens");
    auto it = doc.counts.find(term);
    const int n = it == doc.counts.end() ? 0 : it->second;
    return static_cast<double>(n) / static_cast<double>(doc.total);
}

// log10(N / df) over the matrix; 0 exactly when the term is in every document.
inline double idf(const std::string& term, const TermDocumentMatrix& matrix) {
    const int df = matrix.document_frequency(term);
    if (df == 0) throw std::invalid_argument("idf of a term absent from every document: " + term);
    return std::log10(static_cast<double>(matrix.doc_ids.size()) / static_cast<double>(df));
}

struct TfIdfWeight {
    std::string term;
    std::string doc_id;
    double tf = 0.0;
    double idf = 0.0;
    double weight = 0.0;
};

inline TfIdfWeight tf_idf(const std::string& term, const TokenBag& doc, const TermDocumentMatrix& matrix) {
    TfIdfWeight w;
    w.term = term;
    w.doc_id = doc.doc_id;
    w.tf = tf(term, doc);
    w.idf = idf(term, matrix);
    w.weight = w.tf * w.idf;
    return w;
}

}  // namespace fpnb

#endif  // FPNB_CORPUS_HPP
