#ifndef FPNB_IO_HPP
#define FPNB_IO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "fpnb/errors.hpp"
#include "fpnb/fpgrowth.hpp"
#include "fpnb/preprocess.hpp"

namespace fpnb {

namespace detail {

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

inline bool is_lower_word(const std::string& word) {
    return !word.empty() && std::all_of(word.begin(), word.end(), [](unsigned char c) {
        return std::islower(c) != 0;
    });
}

inline std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return fields;
}

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream stream(line);
    std::string word;
    while (stream >> word) words.push_back(word);
    return words;
}

}  // namespace detail

// One lowercase word per line; '#' lines are comments.
inline std::set<std::string> read_word_list(std::istream& in, const std::string& source) {
    std::set<std::string> words;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        if (!detail::is_lower_word(line))
            throw ParseError(source, line_no, "expected one lowercase word, got '" + line + "'");
        words.insert(line);
    }
    return words;
}

inline std::set<std::string> read_word_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open word list " + path);
    return read_word_list(in, path);
}

// Alias table: two lowercase words per line, surface form then replacement.
inline std::map<std::string, std::string> read_alias_list(std::istream& in, const std::string& source) {
    std::map<std::string, std::string> aliases;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        const auto words = detail::split_words(line);
        if (words.size() != 2 || !detail::is_lower_word(words[0]) || !detail::is_lower_word(words[1]))
            throw ParseError(source, line_no, "expected '<surface> <replacement>', got '" + line + "'");
        aliases[words[0]] = words[1];
    }
    return aliases;
}

inline std::map<std::string, std::string> read_alias_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open alias list " + path);
    return read_alias_list(in, path);
}

// One transaction per line, items space-separated; '#' lines are comments.
inline TransactionDB read_transactions(std::istream& in, const std::string& source) {
    std::vector<Transaction> lists;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        lists.push_back(detail::split_words(line));
    }
    (void)source;
    return TransactionDB::from_itemlists(std::move(lists));
}

inline TransactionDB read_transactions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open transaction file " + path);
    return read_transactions(in, path);
}

// Corpus file: a '#format: raw|pre' declaration, then one document per line
// as 'id<TAB>label<TAB>text-or-keywords'. The label field may be empty.
struct CorpusFile {
    enum class Format { raw, pre };
    Format format = Format::raw;
    std::vector<RawDocument> documents;  // for pre, text holds space-separated keywords
};

inline CorpusFile read_corpus_file(std::istream& in, const std::string& source) {
    CorpusFile file;
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(source, 1, "empty file, expected '#format: raw|pre'");
    ++line_no;
    line = detail::strip_cr(line);
    if (line == "#format: raw") {
        file.format = CorpusFile::Format::raw;
    } else if (line == "#format: pre") {
        file.format = CorpusFile::Format::pre;
    } else {
        throw ParseError(source, line_no, "first line must be '#format: raw' or '#format: pre'");
    }

    std::unordered_set<std::string> ids;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        const auto fields = detail::split_fields(line, '\t');
        if (fields.size() != 3)
            throw ParseError(source, line_no, "expected 'id<TAB>label<TAB>text', got " +
                                                  std::to_string(fields.size()) + " field(s)");
        if (fields[0].empty()) throw ParseError(source, line_no, "document id is empty");
        if (!ids.insert(fields[0]).second)
            throw ParseError(source, line_no, "duplicate document id '" + fields[0] + "'");
        file.documents.push_back({fields[0], fields[1], fields[2]});
    }
    return file;
}

inline CorpusFile read_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open corpus file " + path);
    return read_corpus_file(in, path);
}

// Materializes keyword sets: raw documents run through the preprocessing
// pipeline, pre documents are taken verbatim (deduplicated, order kept).
inline std::vector<KeywordSet> to_keyword_sets(const CorpusFile& file, const PipelineConfig& cfg,
                                               const std::string& source = "<corpus>") {
    std::vector<KeywordSet> sets;
    sets.reserve(file.documents.size());
    for (const RawDocument& doc : file.documents) {
        if (file.format == CorpusFile::Format::raw) {
            sets.push_back(preprocess_document(doc, cfg));
            continue;
        }
        KeywordSet set;
        set.id = doc.id;
        set.label = doc.label;
        for (const std::string& word : detail::split_words(doc.text)) {
            if (!detail::is_lower_word(word))
                throw ParseError(source, 0, "document '" + doc.id + "': keyword '" + word +
                                                "' is not a lowercase word");
            if (!set.contains(word)) set.keywords.push_back(word);
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

}  // namespace fpnb

#endif  // FPNB_IO_HPP
