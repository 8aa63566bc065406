#ifndef FPNB_FPGROWTH_HPP
#define FPNB_FPGROWTH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fpnb {

using Transaction = std::vector<std::string>;  // items unique within a transaction

struct TransactionDB {
    std::vector<Transaction> transactions;

    // Deduplicates items within each transaction, keeping first occurrence.
    static TransactionDB from_itemlists(std::vector<Transaction> lists) {
        TransactionDB db;
        db.transactions.reserve(lists.size());
        for (Transaction& list : lists) {
            Transaction unique;
            for (std::string& item : list)
                if (std::find(unique.begin(), unique.end(), item) == unique.end())
                    unique.push_back(std::move(item));
            db.transactions.push_back(std::move(unique));
        }
        return db;
    }
};

struct FPNode {
    std::string item;  // empty for the root
    std::uint32_t count = 0;
    FPNode* parent = nullptr;
    FPNode* node_link = nullptr;  // next node carrying the same item
    std::vector<std::unique_ptr<FPNode>> children;

    FPNode* find_child(const std::string& child_item) const {
        for (const auto& child : children)
            if (child->item == child_item) return child.get();
        return nullptr;
    }
};

struct HeaderEntry {
    std::string item;
    std::uint32_t support = 0;
    FPNode* head = nullptr;  // start of the node-link chain
};

using WeightedTransaction = std::pair<Transaction, std::uint32_t>;

// Prefix tree of transactions with items in descending-support order, plus
// the header table threading all nodes of each item. Ties in support are
// broken lexicographically so trees and dumps are deterministic.
class FPTree {
public:
    FPTree() : root_(std::make_unique<FPNode>()) {}

    static FPTree from_database(const TransactionDB& db, std::uint32_t min_sup) {
        std::vector<WeightedTransaction> weighted;
        weighted.reserve(db.transactions.size());
        for (const Transaction& t : db.transactions) weighted.emplace_back(t, 1);
        return FPTree(weighted, min_sup);
    }

    FPTree(const std::vector<WeightedTransaction>& weighted, std::uint32_t min_sup)
        : FPTree() {
        if (min_sup == 0) throw std::invalid_argument("min_sup must be at least 1");
        std::unordered_map<std::string, std::uint32_t> support;
        for (const auto& [items, weight] : weighted)
            for (const std::string& item : items) support[item] += weight;

        std::vector<HeaderEntry> entries;
        for (const auto& [item, sup] : support)
            if (sup >= min_sup) entries.push_back({item, sup, nullptr});
        std::sort(entries.begin(), entries.end(), [](const HeaderEntry& a, const HeaderEntry& b) {
            if (a.support != b.support) return a.support > b.support;
            return a.item < b.item;
        });
        header_ = std::move(entries);
        for (std::size_t i = 0; i < header_.size(); ++i) order_index_[header_[i].item] = i;

        for (const auto& [items, weight] : weighted) {
            Transaction sorted_items;
            for (const std::string& item : items)
                if (order_index_.count(item)) sorted_items.push_back(item);
            std::sort(sorted_items.begin(), sorted_items.end(), [this](const std::string& a, const std::string& b) {
                return order_index_.at(a) < order_index_.at(b);
            });
            insert(sorted_items, weight);
        }
    }

    const FPNode& root() const { return *root_; }
    const std::vector<HeaderEntry>& header() const { return header_; }
    bool empty() const { return root_->children.empty(); }

    std::vector<std::string> item_order() const {
        std::vector<std::string> order;
        order.reserve(header_.size());
        for (const HeaderEntry& e : header_) order.push_back(e.item);
        return order;
    }

    std::size_t order_position(const std::string& item) const { return order_index_.at(item); }

    std::size_t node_count() const { return count_nodes(*root_) - 1; }  // excluding the root

private:
    std::unique_ptr<FPNode> root_;
    std::vector<HeaderEntry> header_;
    std::unordered_map<std::string, std::size_t> order_index_;
    std::unordered_map<std::string, FPNode*> chain_tail_;

    void insert(const Transaction& items, std::uint32_t weight) {
        FPNode* node = root_.get();
        for (const std::string& item : items) {
            FPNode* child = node->find_child(item);
            if (!child) {
                auto fresh = std::make_unique<FPNode>();
                fresh->item = item;
                fresh->parent = node;
                child = fresh.get();
                node->children.push_back(std::move(fresh));
                link_node(child);
            }
            child->count += weight;
            node = child;
        }
    }

    void link_node(FPNode* node) {
        auto [it, inserted] = chain_tail_.emplace(node->item, node);
        if (inserted) {
            header_[order_index_.at(node->item)].head = node;
        } else {
            it->second->node_link = node;
            it->second = node;
        }
    }

    static std::size_t count_nodes(const FPNode& node) {
        std::size_t n = 1;
        for (const auto& child : node.children) n += count_nodes(*child);
        return n;
    }
};

// A mined word set: items in ascending lexicographic order plus the number
// of transactions containing all of them.
struct FrequentItemset {
    std::vector<std::string> items;
    std::uint32_t support = 0;

    bool operator==(const FrequentItemset& other) const = default;

    std::string joined() const {
        std::string out;
        for (const std::string& item : items) {
            if (!out.empty()) out += ',';
            out += item;
        }
        return out;
    }

    bool contains_all_of(const std::vector<std::string>& other) const {
        for (const std::string& item : other)
            if (!std::binary_search(items.begin(), items.end(), item)) return false;
        return true;
    }
};

// Orders itemsets by (size, items); with lowercase items this matches
// ordering by (size, comma-joined string).
inline bool canonical_less(const FrequentItemset& a, const FrequentItemset& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
}

struct MineOptions {
    bool single_prefix_path = true;  // combination enumeration on single prefix paths
};

namespace detail {

using RawPattern = std::pair<std::vector<std::string>, std::uint32_t>;

// Nodes of the single prefix path leading from the root to the first
// branching point; empty when the root itself branches or is empty.
inline std::vector<const FPNode*> prefix_chain(const FPTree& tree) {
    std::vector<const FPNode*> chain;
    const FPNode* node = &tree.root();
    while (node->children.size() == 1) {
        node = node->children.front().get();
        chain.push_back(node);
    }
    return chain;
}

// Transactions of the subtree hanging below `top`, one weighted path per
// node that terminates a transaction there.
inline std::vector<WeightedTransaction> subtree_paths(const FPNode& top) {
    std::vector<WeightedTransaction> paths;
    std::vector<std::string> stack;
    auto walk = [&](auto&& self, const FPNode& node) -> void {
        stack.push_back(node.item);
        std::uint32_t below = 0;
        for (const auto& child : node.children) below += child->count;
        if (node.count > below) paths.emplace_back(stack, node.count - below);
        for (const auto& child : node.children) self(self, *child);
        stack.pop_back();
    };
    for (const auto& child : top.children) walk(walk, *child);
    return paths;
}

// FP-growth over one tree: patterns are item sets drawn from the tree with
// their supports, relative to whatever suffix the caller is extending.
inline std::vector<RawPattern> mine_tree(const FPTree& tree, std::uint32_t min_sup, const MineOptions& opts) {
    std::vector<RawPattern> patterns;
    if (tree.empty()) return patterns;

    if (opts.single_prefix_path) {
        const std::vector<const FPNode*> chain = prefix_chain(tree);
        if (!chain.empty()) {
            // Every combination of chain nodes is frequent; its support is
            // the count of the deepest node chosen.
            std::vector<RawPattern> chain_patterns;
            const std::size_t n = chain.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<std::string> items;
                std::uint32_t support = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask & (std::uint64_t{1} << i)) {
                        items.push_back(chain[i]->item);
                        support = chain[i]->count;
                    }
                }
                chain_patterns.emplace_back(std::move(items), support);
            }

            std::vector<RawPattern> branch_patterns;
            if (!chain.back()->children.empty()) {
                FPTree below(subtree_paths(*chain.back()), min_sup);
                branch_patterns = mine_tree(below, min_sup, opts);
            }

            patterns = chain_patterns;
            for (const RawPattern& q : branch_patterns) {
                patterns.push_back(q);
                for (const RawPattern& p : chain_patterns) {
                    std::vector<std::string> items = p.first;
                    items.insert(items.end(), q.first.begin(), q.first.end());
                    patterns.emplace_back(std::move(items), std::min(p.second, q.second));
                }
            }
            return patterns;
        }
    }

    for (const HeaderEntry& entry : tree.header()) {
        patterns.push_back({{entry.item}, entry.support});

        // Conditional pattern base: the prefix path above each node of the
        // item, weighted by that node's count.
        std::vector<WeightedTransaction> base;
        for (const FPNode* node = entry.head; node; node = node->node_link) {
            Transaction path;
            for (const FPNode* up = node->parent; up && up->parent; up = up->parent) path.push_back(up->item);
            std::reverse(path.begin(), path.end());
            if (!path.empty()) base.emplace_back(std::move(path), node->count);
        }
        if (base.empty()) continue;

        FPTree conditional(base, min_sup);
        for (RawPattern& q : mine_tree(conditional, min_sup, opts)) {
            q.first.push_back(entry.item);
            patterns.push_back(std::move(q));
        }
    }
    return patterns;
}

}  // namespace detail

inline FPTree build_fp_tree(const TransactionDB& db, std::uint32_t min_sup) {
    return FPTree::from_database(db, min_sup);
}

// All itemsets of size >= max(min_size, 1) with support >= min_sup, in
// canonical (size, items) order.
inline std::vector<FrequentItemset> mine_frequent_itemsets(const TransactionDB& db, std::uint32_t min_sup,
                                                           std::size_t min_size = 0,
                                                           const MineOptions& opts = {}) {
    if (min_sup == 0) throw std::invalid_argument("min_sup must be at least 1");
    const std::size_t size_floor = std::max<std::size_t>(min_size, 1);
    FPTree tree = FPTree::from_database(db, min_sup);
    std::vector<FrequentItemset> result;
    for (detail::RawPattern& pattern : detail::mine_tree(tree, min_sup, opts)) {
        if (pattern.first.size() < size_floor) continue;
        std::sort(pattern.first.begin(), pattern.first.end());
        result.push_back({std::move(pattern.first), pattern.second});
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

// Exhaustive oracle: enumerates every subset of the item universe and counts
// containing transactions. Only usable for small universes.
inline std::vector<FrequentItemset> mine_bruteforce(const TransactionDB& db, std::uint32_t min_sup,
                                                    std::size_t min_size = 0) {
    if (min_sup == 0) throw std::invalid_argument("min_sup must be at least 1");
    std::vector<std::string> universe;
    {
        std::unordered_set<std::string> seen;
        for (const Transaction& t : db.transactions)
            for (const std::string& item : t)
                if (seen.insert(item).second) universe.push_back(item);
    }
    std::sort(universe.begin(), universe.end());
    if (universe.size() > 20)
        throw std::invalid_argument("brute-force enumeration limited to 20 distinct items");

    std::unordered_map<std::string, std::size_t> bit;
    for (std::size_t i = 0; i < universe.size(); ++i) bit[universe[i]] = i;
    std::vector<std::uint32_t> masks;
    masks.reserve(db.transactions.size());
    for (const Transaction& t : db.transactions) {
        std::uint32_t mask = 0;
        for (const std::string& item : t) mask |= std::uint32_t{1} << bit.at(item);
        masks.push_back(mask);
    }

    const std::size_t size_floor = std::max<std::size_t>(min_size, 1);
    std::vector<FrequentItemset> result;
    const std::uint32_t limit = universe.empty() ? 0 : (std::uint32_t{1} << universe.size()) - 1;
    for (std::uint32_t subset = 1; subset <= limit && limit != 0; ++subset) {
        if (static_cast<std::size_t>(std::popcount(subset)) < size_floor) continue;
        std::uint32_t count = 0;
        for (std::uint32_t mask : masks)
            if ((mask & subset) == subset) ++count;
        if (count < min_sup) continue;
        FrequentItemset set;
        set.support = count;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (subset & (std::uint32_t{1} << i)) set.items.push_back(universe[i]);
        result.push_back(std::move(set));
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

// Deterministic indented rendering, one "item:count" line per node, children
// in descending-support order.
inline std::string dump_tree(const FPTree& tree) {
    std::string out = "ROOT";
    auto render = [&](auto&& self, const FPNode& node, std::size_t depth) -> void {
        std::vector<const FPNode*> kids;
        for (const auto& child : node.children) kids.push_back(child.get());
        std::sort(kids.begin(), kids.end(), [&](const FPNode* a, const FPNode* b) {
            return tree.order_position(a->item) < tree.order_position(b->item);
        });
        for (const FPNode* kid : kids) {
            out += '\n';
            out.append(depth * 2, ' ');
            out += kid->item;
            out += ':';
            out += std::to_string(kid->count);
            self(self, *kid, depth + 1);
        }
    };
    render(render, tree.root(), 1);
    return out;
}

}  // namespace fpnb

#endif  // FPNB_FPGROWTH_HPP
