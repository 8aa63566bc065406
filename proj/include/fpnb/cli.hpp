#ifndef FPNB_CLI_HPP
#define FPNB_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpnb/classify.hpp"
#include "fpnb/corpus.hpp"
#include "fpnb/errors.hpp"
#include "fpnb/fpgrowth.hpp"
#include "fpnb/io.hpp"
#include "fpnb/nbmodel.hpp"
#include "fpnb/preprocess.hpp"

namespace fpnb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

namespace detail {

struct PreprocessArgs {
    std::string stopwords_path;
    std::string lexicon_path;
    std::string aliases_path;
    bool stemming = false;
    bool no_singularize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--stopwords", stopwords_path, "Stop word list, one word per line");
        cmd->add_option("--lexicon", lexicon_path, "Keyword allow-list, one word per line");
        cmd->add_option("--aliases", aliases_path, "Alias table, '<surface> <replacement>' per line");
        cmd->add_flag("--stemming", stemming, "Apply Porter stemming");
        cmd->add_flag("--no-singularize", no_singularize, "Disable plural stripping");
    }

    PipelineConfig config() const {
        PipelineConfig cfg;
        if (!stopwords_path.empty()) cfg.stopwords = read_word_list(stopwords_path);
        if (!lexicon_path.empty()) cfg.keyword_lexicon = read_word_list(lexicon_path);
        if (!aliases_path.empty()) cfg.aliases = read_alias_list(aliases_path);
        cfg.singularize = !no_singularize;
        cfg.stemming = stemming ? Stemming::porter : Stemming::off;
        return cfg;
    }

    std::map<std::string, std::string> flags() const {
        return {{"singularize", no_singularize ? "off" : "on"},
                {"stemming", stemming ? "porter" : "off"}};
    }
};

inline std::string format_score(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

inline Corpus load_corpus(const std::string& path, const PreprocessArgs& pre) {
    const CorpusFile file = read_corpus_file(path);
    return Corpus::from_documents(to_keyword_sets(file, pre.config(), path));
}

}  // namespace detail

inline int run_train(const std::string& corpus_path, std::uint32_t min_sup,
                     const detail::PreprocessArgs& pre, const std::string& model_out,
                     std::ostream& out) {
    const Corpus corpus = detail::load_corpus(corpus_path, pre);
    const ClassModel model = train(corpus, min_sup, pre.flags());
    save_model(model, model_out);

    const TrainingReport report = make_report(model);
    out << "minsup\t" << report.min_sup << '\n';
    out << "documents\t" << model.total_documents() << '\n';
    for (std::size_t j = 0; j < report.classes.size(); ++j) {
        const ClassSummary& c = report.classes[j];
        out << "class\t" << c.name << "\tdocs=" << c.document_count << "\tprior="
            << detail::format_score(report.priors[j]) << "\tsets=" << c.mined_set_count << '\n';
    }
    out << "vocabulary\t" << report.vocabulary_size << '\n';
    return kExitOk;
}

inline int run_classify(const std::string& model_path, const std::string& input_path,
                        const detail::PreprocessArgs& pre, std::ostream& out, std::ostream& err) {
    const ClassModel model = load_model(model_path);

    for (const auto& [key, value] : pre.flags()) {
        const auto it = model.flags.find(key);
        if (it != model.flags.end() && it->second != value)
            err << "warning: model was trained with " << key << "=" << it->second << ", input uses " << key
                << "=" << value << '\n';
    }

    const CorpusFile file = read_corpus_file(input_path);
    const std::vector<KeywordSet> docs = to_keyword_sets(file, pre.config(), input_path);
    for (const Classification& result : classify_batch(docs, model)) {
        out << result.doc_id << '\t' << result.predicted;
        for (std::size_t j = 0; j < model.classes.size(); ++j)
            out << '\t' << model.classes[j].name << '=' << detail::format_score(result.scores[j]);
        out << '\t';
        for (std::size_t i = 0; i < result.matched.vocab_indices.size(); ++i) {
            if (i) out << ';';
            out << fpnb::detail::join_items(model.vocabulary[result.matched.vocab_indices[i]].items);
        }
        out << '\n';
    }
    return kExitOk;
}

inline int run_mine(const std::string& transactions_path, std::uint32_t min_sup, std::size_t min_size,
                    std::ostream& out) {
    const TransactionDB db = read_transactions(transactions_path);
    for (const FrequentItemset& set : mine_frequent_itemsets(db, min_sup, min_size))
        out << set.joined() << '\t' << set.support << '\n';
    return kExitOk;
}

inline int run_matrix(const std::string& corpus_path, const detail::PreprocessArgs& pre, std::ostream& out) {
    const Corpus corpus = detail::load_corpus(corpus_path, pre);
    out << matrix_to_tsv(build_matrix(corpus));
    return kExitOk;
}

inline int run_inspect_tree(const std::string& transactions_path, std::uint32_t min_sup, std::ostream& out) {
    const TransactionDB db = read_transactions(transactions_path);
    out << dump_tree(build_fp_tree(db, min_sup)) << '\n';
    return kExitOk;
}

// Batch entry point shared by main() and the tests. Returns the process
// exit code: 0 ok, 1 usage error, 2 unreadable or malformed data.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frequent word-set text classification"};
    app.set_version_flag("--version", "fpnb 1.0.0");
    app.require_subcommand(1);

    std::string corpus_path;
    std::string model_path;
    std::string input_path;
    std::string transactions_path;
    std::string model_out;
    std::uint32_t min_sup = 1;
    std::size_t min_size = 1;
    detail::PreprocessArgs pre;

    CLI::App* train_cmd = app.add_subcommand("train", "Train a model from a labeled corpus");
    train_cmd->add_option("--corpus", corpus_path, "Corpus file (#format: raw|pre)")->required();
    train_cmd->add_option("--min-sup", min_sup, "Minimum support (absolute count)")
        ->required()
        ->check(CLI::PositiveNumber);
    train_cmd->add_option("--out", model_out, "Model output path")->required();
    pre.attach(train_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify documents against a model");
    classify_cmd->add_option("--model", model_path, "Model file from 'train'")->required();
    classify_cmd->add_option("--input", input_path, "Documents to classify (#format: raw|pre)")->required();
    pre.attach(classify_cmd);

    CLI::App* mine_cmd = app.add_subcommand("mine", "Mine frequent itemsets from transactions");
    mine_cmd->add_option("--transactions", transactions_path, "Transaction file, items space-separated")
        ->required();
    mine_cmd->add_option("--min-sup", min_sup, "Minimum support (absolute count)")
        ->required()
        ->check(CLI::PositiveNumber);
    mine_cmd->add_option("--min-size", min_size, "Smallest itemset size to report");

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Print the term-document incidence matrix");
    matrix_cmd->add_option("--corpus", corpus_path, "Corpus file (#format: raw|pre)")->required();
    pre.attach(matrix_cmd);

    CLI::App* tree_cmd = app.add_subcommand("inspect-tree", "Print the FP-tree of a transaction file");
    tree_cmd->add_option("--transactions", transactions_path, "Transaction file, items space-separated")
        ->required();
    tree_cmd->add_option("--min-sup", min_sup, "Minimum support (absolute count)")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (train_cmd->parsed()) return run_train(corpus_path, min_sup, pre, model_out, out);
        if (classify_cmd->parsed()) return run_classify(model_path, input_path, pre, out, err);
        if (mine_cmd->parsed()) return run_mine(transactions_path, min_sup, min_size, out);
        if (matrix_cmd->parsed()) return run_matrix(corpus_path, pre, out);
        if (tree_cmd->parsed()) return run_inspect_tree(transactions_path, min_sup, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace fpnb::cli

#endif  // FPNB_CLI_HPP
