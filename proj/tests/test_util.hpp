#ifndef FPNB_TEST_UTIL_HPP
#define FPNB_TEST_UTIL_HPP

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fpnb/corpus.hpp"
#include "fpnb/fpgrowth.hpp"
#include "fpnb/io.hpp"
#include "fpnb/nbmodel.hpp"
#include "fpnb/preprocess.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(FPNB_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline fpnb::KeywordSet kwset(std::string id, std::string label, const std::string& words) {
    fpnb::KeywordSet set;
    set.id = std::move(id);
    set.label = std::move(label);
    std::istringstream stream(words);
    std::string word;
    while (stream >> word)
        if (!set.contains(word)) set.keywords.push_back(word);
    return set;
}

inline const char* kSocial = "Social Network";
inline const char* kComputer = "Computer Network";

// The ten training documents after preprocessing (keywords in row order).
inline std::vector<fpnb::KeywordSet> train_keyword_sets() {
    return {
        kwset("D1", kSocial, "website application people information"),
        kwset("D2", kSocial, "website people profile community interest"),
        kwset("D3", kSocial, "network service platform website relation people"),
        kwset("D4", kSocial, "network community interest commonality internet people"),
        kwset("D5", kSocial, "group people information experience purpose"),
        kwset("D6", kSocial, "network contact community people interest prospect information support"),
        kwset("D7", kComputer, "computer network group device channel communication user resource data"),
        kwset("D8", kComputer, "computer network server"),
        kwset("D9", kComputer, "group computer cable signal network protocol"),
        kwset("D10", kComputer, "group computer network data"),
    };
}

// The five test documents after preprocessing.
inline std::vector<fpnb::KeywordSet> test_keyword_sets() {
    return {
        kwset("T1", "", "network authorize environment user access data information computer"),
        kwset("T2", "", "community hypertext share information idea interest people concept digital environment website"),
        kwset("T3", "", "network group firewall guard computer unauthorize data access"),
        kwset("T4", "", "different community people share common interest website"),
        kwset("T5", "", "community interest network people assemble around topic common information"),
    };
}

inline fpnb::Corpus train_corpus() { return fpnb::Corpus::from_documents(train_keyword_sets()); }

inline fpnb::ClassModel train_model() { return fpnb::train(train_corpus(), 2); }

struct ExpectedSet {
    std::string joined;     // items comma-joined, ascending
    unsigned support_sn;    // in-class supports; 0 when not frequent there
    unsigned support_cn;
    double likelihood_sn;   // published three-decimal probabilities
    double likelihood_cn;
};

// The 24-set vocabulary with per-class supports and published probabilities.
// Sets 0-12 are mined from the social class, 13-23 from the computer class.
inline const std::vector<ExpectedSet>& expected_vocabulary() {
    static const std::vector<ExpectedSet> table = {
        {"people,website", 3, 0, 0.108, 0.029},
        {"information,people", 3, 0, 0.108, 0.029},
        {"community,people", 3, 0, 0.108, 0.029},
        {"interest,people", 3, 0, 0.108, 0.029},
        {"network,people", 3, 0, 0.108, 0.029},
        {"interest,network", 2, 0, 0.081, 0.029},
        {"community,network", 2, 0, 0.081, 0.029},
        {"community,interest", 3, 0, 0.108, 0.029},
        {"community,interest,people", 3, 0, 0.108, 0.029},
        {"community,network,people", 2, 0, 0.081, 0.029},
        {"interest,network,people", 2, 0, 0.081, 0.029},
        {"community,interest,network", 2, 0, 0.081, 0.029},
        {"community,interest,network,people", 2, 0, 0.081, 0.029},
        {"computer,network", 0, 4, 0.027, 0.143},
        {"group,network", 0, 3, 0.027, 0.114},
        {"data,network", 0, 2, 0.027, 0.086},
        {"computer,group", 0, 3, 0.027, 0.114},
        {"computer,data", 0, 2, 0.027, 0.086},
        {"data,group", 0, 2, 0.027, 0.086},
        {"computer,group,network", 0, 3, 0.027, 0.114},
        {"computer,data,network", 0, 2, 0.027, 0.086},
        {"data,group,network", 0, 2, 0.027, 0.086},
        {"computer,data,group", 0, 2, 0.027, 0.086},
        {"computer,data,group,network", 0, 2, 0.027, 0.086},
    };
    return table;
}

// Binary incidence of the training corpus: term, then one digit per document
// D1..D10, in the published row order.
inline const std::vector<std::pair<std::string, std::string>>& expected_incidence() {
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"website", "1110000000"},
        {"application", "1000000000"},
        {"people", "1111110000"},
        {"information", "1000110000"},
        {"profile", "0100000000"},
        {"community", "0101010000"},
        {"interest", "0101010000"},
        {"network", "0011011111"},
        {"service", "0010000000"},
        {"platform", "0010000000"},
        {"relation", "0010000000"},
        {"commonality", "0001000000"},
        {"internet", "0001000000"},
        {"group", "0000100111"},
        {"contact", "0000010000"},
        {"experience", "0000100000"},
        {"purpose", "0000100000"},
        {"prospect", "0000010000"},
        {"support", "0000010000"},
        {"computer", "0000001111"},
        {"device", "0000001000"},
        {"channel", "0000001000"},
        {"communication", "0000001000"},
        {"user", "0000001000"},
        {"resource", "0000001000"},
        {"data", "0000001001"},
        {"server", "0000000100"},
        {"cable", "0000000010"},
        {"signal", "0000000010"},
        {"protocol", "0000000010"},
    };
    return rows;
}

// Pipeline configuration for raw sample documents; lexicon_file selects the
// training or the general allow-list.
inline fpnb::PipelineConfig sample_config(const std::string& lexicon_file) {
    fpnb::PipelineConfig cfg;
    cfg.stopwords = fpnb::read_word_list(data_path("stopwords.txt"));
    cfg.keyword_lexicon = fpnb::read_word_list(data_path(lexicon_file));
    cfg.aliases = fpnb::read_alias_list(data_path("aliases.txt"));
    cfg.singularize = true;
    cfg.stemming = fpnb::Stemming::off;
    return cfg;
}

// Random transaction databases for the miner-versus-oracle properties.
inline fpnb::TransactionDB random_db(std::mt19937& rng, int max_items = 12, int max_transactions = 30) {
    std::uniform_int_distribution<int> item_count(1, max_items);
    const int universe = item_count(rng);
    std::uniform_int_distribution<int> txn_count(0, max_transactions);
    const int transactions = txn_count(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> density(0.1, 0.7);

    std::vector<fpnb::Transaction> lists;
    for (int t = 0; t < transactions; ++t) {
        const double p = density(rng);
        fpnb::Transaction txn;
        for (int i = 0; i < universe; ++i)
            if (unit(rng) < p) txn.push_back(std::string(1, static_cast<char>('a' + i)));
        lists.push_back(std::move(txn));
    }
    return fpnb::TransactionDB::from_itemlists(std::move(lists));
}

}  // namespace testutil

#endif  // FPNB_TEST_UTIL_HPP
