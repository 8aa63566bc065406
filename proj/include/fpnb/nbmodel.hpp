#ifndef FPNB_NBMODEL_HPP
#define FPNB_NBMODEL_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fpnb/corpus.hpp"
#include "fpnb/errors.hpp"
#include "fpnb/fpgrowth.hpp"

namespace fpnb {

struct ClassSummary {
    std::string name;
    int document_count = 0;
    int mined_set_count = 0;  // frequent word sets mined from this class alone

    bool operator==(const ClassSummary&) const = default;
};

struct VocabEntry {
    std::vector<std::string> items;  // ascending lexicographic
    std::vector<int> class_counts;   // per class: documents of that class containing the set

    bool operator==(const VocabEntry&) const = default;
};

// Trained frequent-word-set Naive Bayes model. Counts are the source of
// truth; priors and likelihoods are derived from them.
class ClassModel {
public:
    std::vector<ClassSummary> classes;
    std::uint32_t min_sup = 0;
    std::vector<VocabEntry> vocabulary;          // canonical (size, items) order
    std::map<std::string, std::string> flags;    // preprocessing flags recorded at training time

    bool operator==(const ClassModel&) const = default;

    int total_documents() const {
        int total = 0;
        for (const ClassSummary& c : classes) total += c.document_count;
        return total;
    }

    double prior(std::size_t class_idx) const {
        return static_cast<double>(classes[class_idx].document_count) / total_documents();
    }

    // m-estimate: (n_k + 1) / (n_j + |vocabulary|); never zero.
    double likelihood(std::size_t vocab_idx, std::size_t class_idx) const {
        const int n_k = vocabulary[vocab_idx].class_counts[class_idx];
        const int n_j = classes[class_idx].mined_set_count;
        return (n_k + 1.0) / (n_j + static_cast<double>(vocabulary.size()));
    }
};

struct TrainingReport {
    std::vector<ClassSummary> classes;
    std::vector<double> priors;
    std::size_t vocabulary_size = 0;
    std::uint32_t min_sup = 0;
};

inline TrainingReport make_report(const ClassModel& model) {
    TrainingReport report;
    report.classes = model.classes;
    for (std::size_t j = 0; j < model.classes.size(); ++j) report.priors.push_back(model.prior(j));
    report.vocabulary_size = model.vocabulary.size();
    report.min_sup = model.min_sup;
    return report;
}

// Trains on a labeled corpus: mines each class's transactions separately at
// min_sup (sets of two or more words), takes the union as the vocabulary and
// counts every vocabulary set against every class.
inline ClassModel train(const Corpus& corpus, std::uint32_t min_sup,
                        std::map<std::string, std::string> flags = {}) {
    if (min_sup == 0) throw std::invalid_argument("min_sup must be at least 1");
    if (corpus.classes.size() < 2)
        throw std::invalid_argument("training needs at least 2 classes, got " +
                                    std::to_string(corpus.classes.size()));

    ClassModel model;
    model.min_sup = min_sup;
    model.flags = std::move(flags);

    std::vector<FrequentItemset> vocabulary;
    for (const std::string& label : corpus.classes) {
        TransactionDB db;
        db.transactions = corpus.transactions_for_class(label);
        const auto mined = mine_frequent_itemsets(db, min_sup, 2);
        model.classes.push_back({label, static_cast<int>(db.transactions.size()), static_cast<int>(mined.size())});
        for (const FrequentItemset& set : mined) {
            const auto pos = std::lower_bound(vocabulary.begin(), vocabulary.end(), set, canonical_less);
            if (pos == vocabulary.end() || pos->items != set.items) vocabulary.insert(pos, set);
        }
    }

    for (const FrequentItemset& set : vocabulary) {
        VocabEntry entry;
        entry.items = set.items;
        for (const std::string& label : corpus.classes) {
            int n_k = 0;
            for (const KeywordSet& doc : corpus.documents) {
                if (doc.label != label) continue;
                const bool contains_all = std::all_of(set.items.begin(), set.items.end(),
                                                      [&](const std::string& w) { return doc.contains(w); });
                if (contains_all) ++n_k;
            }
            entry.class_counts.push_back(n_k);
        }
        model.vocabulary.push_back(std::move(entry));
    }
    return model;
}

namespace detail {

inline std::string join_items(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& item : items) {
        if (!out.empty()) out += ',';
        out += item;
    }
    return out;
}

inline bool vocab_entry_less(const VocabEntry& a, const VocabEntry& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
}

}  // namespace detail

inline constexpr const char* kModelMagic = "#fpnb-model v1";

inline void save_model(const ClassModel& model, std::ostream& out) {
    out << kModelMagic << '\n';
    out << "minsup " << model.min_sup << '\n';
    if (!model.flags.empty()) {
        out << "flags";
        for (const auto& [key, value] : model.flags) out << ' ' << key << '=' << value;
        out << '\n';
    }
    for (const ClassSummary& c : model.classes)
        out << "class " << c.name << ' ' << c.document_count << '\n';
    out << "vocab " << model.vocabulary.size() << '\n';
    for (const VocabEntry& entry : model.vocabulary) {
        out << detail::join_items(entry.items);
        for (int n_k : entry.class_counts) out << '\t' << n_k;
        out << '\n';
    }
}

inline void save_model(const ClassModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    save_model(model, out);
    if (!out) throw ParseError("failed writing " + path);
}

// Reads a model back; counts are reloaded and validated, derived values are
// recomputed. The mined-set count n_j of each class is recovered by counting
// vocabulary sets frequent in that class, which is how training defined it.
inline ClassModel load_model(std::istream& in, const std::string& source = "<model>") {
    ClassModel model;
    int line_no = 0;
    std::string line;

    auto next_line = [&](const char* expected) {
        if (!std::getline(in, line)) throw ParseError(source, line_no + 1, std::string("missing ") + expected);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };

    next_line("version header");
    if (line != kModelMagic) throw ParseError(source, line_no, "unsupported model version: " + line);

    next_line("minsup line");
    {
        std::istringstream fields(line);
        std::string keyword;
        long value = -1;
        fields >> keyword >> value;
        if (keyword != "minsup" || value < 1) throw ParseError(source, line_no, "expected 'minsup <positive int>'");
        model.min_sup = static_cast<std::uint32_t>(value);
    }

    next_line("class section");
    if (line.rfind("flags", 0) == 0 && (line.size() == 5 || line[5] == ' ')) {
        std::istringstream fields(line.substr(5));
        std::string pair;
        while (fields >> pair) {
            const auto eq = pair.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError(source, line_no, "malformed flag '" + pair + "', expected key=value");
            model.flags[pair.substr(0, eq)] = pair.substr(eq + 1);
        }
        next_line("class section");
    }

    while (line.rfind("class ", 0) == 0) {
        const std::string rest = line.substr(6);
        const auto last_space = rest.rfind(' ');
        if (last_space == std::string::npos || last_space == 0)
            throw ParseError(source, line_no, "expected 'class <name> <doc count>'");
        ClassSummary summary;
        summary.name = rest.substr(0, last_space);
        try {
            summary.document_count = std::stoi(rest.substr(last_space + 1));
        } catch (const std::exception&) {
            throw ParseError(source, line_no, "class document count is not an integer");
        }
        if (summary.document_count < 1)
            throw ParseError(source, line_no, "class '" + summary.name + "' must have at least one document");
        for (const ClassSummary& existing : model.classes)
            if (existing.name == summary.name)
                throw ParseError(source, line_no, "duplicate class '" + summary.name + "'");
        model.classes.push_back(std::move(summary));
        next_line("vocab section");
    }
    if (model.classes.size() < 2) throw ParseError(source, line_no, "model needs at least 2 classes");

    if (line.rfind("vocab ", 0) != 0) throw ParseError(source, line_no, "expected 'vocab <size>' section");
    long vocab_size = -1;
    try {
        vocab_size = std::stol(line.substr(6));
    } catch (const std::exception&) {
        throw ParseError(source, line_no, "vocab size is not an integer");
    }
    if (vocab_size < 0) throw ParseError(source, line_no, "vocab size must be non-negative");

    for (long v = 0; v < vocab_size; ++v) {
        next_line("vocabulary line");
        VocabEntry entry;
        std::size_t start = 0;
        const auto first_tab = line.find('\t');
        const std::string joined = line.substr(0, first_tab);
        if (joined.empty()) throw ParseError(source, line_no, "empty item list");
        while (start <= joined.size()) {
            const auto comma = joined.find(',', start);
            const std::string item = joined.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (item.empty()) throw ParseError(source, line_no, "empty item in set '" + joined + "'");
            if (!entry.items.empty() && item <= entry.items.back())
                throw ParseError(source, line_no, "items must be unique and in ascending order: '" + joined + "'");
            entry.items.push_back(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (entry.items.size() < 2)
            throw ParseError(source, line_no, "vocabulary sets need at least two items: '" + joined + "'");

        std::size_t pos = first_tab;
        for (std::size_t j = 0; j < model.classes.size(); ++j) {
            if (pos == std::string::npos)
                throw ParseError(source, line_no, "expected one count per class after the item list");
            const auto next_tab = line.find('\t', pos + 1);
            const std::string field = line.substr(pos + 1, next_tab == std::string::npos ? std::string::npos
                                                                                         : next_tab - pos - 1);
            int n_k = -1;
            try {
                n_k = std::stoi(field);
            } catch (const std::exception&) {
                throw ParseError(source, line_no, "count '" + field + "' is not an integer");
            }
            if (n_k < 0 || n_k > model.classes[j].document_count)
                throw ParseError(source, line_no, "count " + std::to_string(n_k) + " out of range for class '" +
                                                      model.classes[j].name + "'");
            entry.class_counts.push_back(n_k);
            pos = next_tab;
        }
        if (pos != std::string::npos)
            throw ParseError(source, line_no, "trailing fields after per-class counts");

        if (!model.vocabulary.empty() && !detail::vocab_entry_less(model.vocabulary.back(), entry))
            throw ParseError(source, line_no, "vocabulary lines must be sorted by (size, items) and unique");
        model.vocabulary.push_back(std::move(entry));
    }

    if (std::getline(in, line) && !line.empty())
        throw ParseError(source, line_no + 1, "unexpected content after vocabulary section");

    // n_j: vocabulary sets whose in-class document count reaches min_sup are
    // exactly the sets mining would have produced from that class.
    for (std::size_t j = 0; j < model.classes.size(); ++j) {
        int mined = 0;
        for (const VocabEntry& entry : model.vocabulary)
            if (entry.class_counts[j] >= static_cast<int>(model.min_sup)) ++mined;
        model.classes[j].mined_set_count = mined;
    }
    return model;
}

inline ClassModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file " + path);
    return load_model(in, path);
}

}  // namespace fpnb

#endif  // FPNB_NBMODEL_HPP
