#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fpnb/preprocess.hpp"
#include "test_util.hpp"

using namespace fpnb;

TEST(Tokenize, SplitsOnNonAlphabetic) {
    EXPECT_EQ(tokenize("A computer network is a group"),
              (std::vector<std::string>{"a", "computer", "network", "is", "a", "group"}));
    EXPECT_EQ(tokenize(""), std::vector<std::string>{});
    EXPECT_EQ(tokenize("inter-network"), (std::vector<std::string>{"inter", "network"}));
    EXPECT_EQ(tokenize("web 2.0 sites!"), (std::vector<std::string>{"web", "sites"}));
}

TEST(Singularize, RuleApplication) {
    EXPECT_EQ(singularize("computers"), "computer");
    EXPECT_EQ(singularize("communities"), "community");
    EXPECT_EQ(singularize("glass"), "glass");
    EXPECT_EQ(singularize("purposes"), "purpose");
    EXPECT_EQ(singularize("classes"), "class");
    EXPECT_EQ(singularize("gas"), "gas");  // too short for the trailing-s rule
    EXPECT_EQ(singularize("data"), "data");
}

TEST(Singularize, Idempotent) {
    const std::vector<std::string> words = {"computers", "communities", "glasses",  "purposes", "analyses",
                                            "ties",      "studies",     "business", "messes",   "people"};
    for (const std::string& word : words) {
        const std::string once = singularize(word);
        EXPECT_EQ(singularize(once), once) << "word: " << word;
    }
}

TEST(Preprocess, SampleTrainingDocument) {
    const RawDocument doc{"D1", testutil::kSocial,
                          "A dedicated website or other application that enables people to communicate "
                          "with each other by posting information."};
    const KeywordSet result = preprocess_document(doc, testutil::sample_config("lexicon_train.txt"));
    EXPECT_EQ(result.id, "D1");
    EXPECT_EQ(result.label, testutil::kSocial);
    EXPECT_TRUE(result.same_keywords(testutil::kwset("D1", "", "website application people information")));
}

TEST(Preprocess, SampleTestDocument) {
    const RawDocument doc{"T3", "", "A network firewall guards a group of computer against unauthorized data access."};
    const KeywordSet result = preprocess_document(doc, testutil::sample_config("lexicon.txt"));
    EXPECT_TRUE(result.same_keywords(
        testutil::kwset("T3", "", "network group firewall guard computer unauthorize data access")));
}

TEST(Preprocess, AllStopwordsYieldEmptySet) {
    PipelineConfig cfg;
    cfg.stopwords = {"the"};
    const KeywordSet result = preprocess_document({"X", "", "the the the"}, cfg);
    EXPECT_TRUE(result.keywords.empty());
}

TEST(Preprocess, LexiconResolvesSuffixForms) {
    PipelineConfig cfg = testutil::sample_config("lexicon.txt");
    EXPECT_EQ(preprocess_tokens("networking", cfg), std::vector<std::string>{"network"});
    EXPECT_EQ(preprocess_tokens("sharing", cfg), std::vector<std::string>{"share"});
    EXPECT_EQ(preprocess_tokens("unauthorized", cfg), std::vector<std::string>{"unauthorize"});
    EXPECT_EQ(preprocess_tokens("sites", cfg), std::vector<std::string>{"website"});
    EXPECT_EQ(preprocess_tokens("nonsense", cfg), std::vector<std::string>{});
}

TEST(Preprocess, StemmingAppliesAfterNormalization) {
    PipelineConfig cfg;
    cfg.singularize = false;
    cfg.stemming = Stemming::porter;
    EXPECT_EQ(preprocess_tokens("communities of interest", cfg),
              (std::vector<std::string>{"commun", "of", "interest"}));
}

TEST(Preprocess, DeduplicationBound) {
    PipelineConfig cfg;
    const std::string text = "alpha beta alpha gamma beta alpha";
    const auto tokens = preprocess_tokens(text, cfg);
    const KeywordSet set = preprocess_document({"X", "", text}, cfg);
    EXPECT_LE(set.keywords.size(), tokens.size());
    auto sorted = set.sorted();
    EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    EXPECT_TRUE(set.same_keywords(testutil::kwset("X", "", "alpha beta gamma")));
}

// Preprocessing the space-joined keywords of a processed document gives the
// document back, for every sample document and both lexicons.
TEST(Preprocess, IdempotentOnSampleCorpus) {
    for (const char* lexicon : {"lexicon_train.txt", "lexicon.txt"}) {
        const PipelineConfig cfg = testutil::sample_config(lexicon);
        const auto docs = lexicon == std::string("lexicon_train.txt") ? testutil::train_keyword_sets()
                                                                      : testutil::test_keyword_sets();
        for (const KeywordSet& doc : docs) {
            std::string joined;
            for (const std::string& word : doc.keywords) joined += word + " ";
            const KeywordSet again = preprocess_document({doc.id, doc.label, joined}, cfg);
            EXPECT_TRUE(again.same_keywords(doc)) << "doc: " << doc.id << " lexicon: " << lexicon;
        }
    }
}

TEST(Preprocess, OrderIndependence) {
    const PipelineConfig cfg = testutil::sample_config("lexicon_train.txt");
    std::vector<std::string> words = tokenize(
        "A dedicated website or other application that enables people to communicate with each other by "
        "posting information");
    std::mt19937 rng(7);
    const KeywordSet reference = preprocess_document({"X", "", "website application people information"}, cfg);
    for (int round = 0; round < 10; ++round) {
        std::shuffle(words.begin(), words.end(), rng);
        std::string text;
        for (const std::string& word : words) text += word + " ";
        EXPECT_TRUE(preprocess_document({"X", "", text}, cfg).same_keywords(reference));
    }
}
