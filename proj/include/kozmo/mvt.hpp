#ifndef KOZMO_MVT_HPP
#define KOZMO_MVT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kozmo/monomial.hpp"

namespace kozmo {

enum class PivotRule { LastGenerator, LexFirst, Custom };

/**
 * Chooses the generator that splits a Mayer-Vietoris node.
 *
 * LexFirst takes the lex-largest generator, LastGenerator the last one in
 * canonical (lex descending) order, Custom the generator that comes first
 * under a user supplied strict weak order.
 */
class PivotStrategy {
public:
    using Precedes = std::function<bool(const Multidegree&, const Multidegree&)>;

    static PivotStrategy lex_first();
    static PivotStrategy last_generator();
    static PivotStrategy custom(Precedes precedes, std::string name = "custom");

    PivotRule rule() const noexcept { return rule_; }
    const std::string& name() const noexcept { return name_; }

    /// Index of the pivot among gens (which must be non-empty).
    std::size_t select(std::span<const Multidegree> gens) const;

private:
    PivotStrategy(PivotRule rule, std::string name, Precedes precedes = {})
        : rule_(rule), name_(std::move(name)), precedes_(std::move(precedes)) {}

    PivotRule rule_;
    std::string name_;
    Precedes precedes_;
};

struct MvtOptions {
    PivotStrategy strategy = PivotStrategy::lex_first();
    /// Skip subtrees of nodes with fewer than n - dimension generators.
    bool prune_by_generators = true;
    /// Skip subtrees of nodes whose generators do not involve every variable.
    bool prune_by_indeterminates = true;
    /// With LexFirst, nodes of dimension n - 2 only vary in the last two
    /// variables; their dimension n - 1 generators are then read off directly.
    bool eliminate_variables = false;
    /// Worker threads; sibling subtrees are explored independently.
    unsigned threads = 1;

    /// Full recursion, no pruning rule.
    static MvtOptions unpruned(PivotStrategy strategy = PivotStrategy::lex_first());
};

/// Bits recording why a node of a pruned tree has no children.
enum PruneReason : unsigned {
    kNotPruned = 0,
    kPrunedByGenerators = 1U << 0,
    kPrunedByIndeterminates = 1U << 1,
    kPrunedByDimension = 1U << 2,
};

struct MvtNode {
    MonomialIdeal ideal;
    /// Root-to-node steps; false is a left step, true a right step.
    std::vector<bool> path;
    std::size_t dimension = 0;
    bool relevant = false;
    unsigned pruned = kNotPruned;
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;

    /// Root is 1, children of p are 2p and 2p + 1.
    boost::multiprecision::cpp_int position() const;
};

class MvtTree {
public:
    MvtTree() = default;
    MvtTree(std::size_t n, bool pruned, std::vector<MvtNode> nodes)
        : n_(n), pruned_(pruned), nodes_(std::move(nodes)) {}

    std::size_t ring_dimension() const noexcept { return n_; }
    /// Built with the pruning rules enabled.
    bool is_pruned() const noexcept { return pruned_; }
    /// Nodes in pre-order; index 0 is the root.
    const std::vector<MvtNode>& nodes() const noexcept { return nodes_; }
    const MvtNode& root() const { return nodes_.front(); }
    std::size_t size() const noexcept { return nodes_.size(); }

private:
    std::size_t n_ = 0;
    bool pruned_ = false;
    std::vector<MvtNode> nodes_;
};

inline constexpr std::size_t kDefaultMaxTreeNodes = 2'000'000;

/// Left child minimalize({lcm(m_i, pivot)}) and right child J without the pivot.
std::pair<MonomialIdeal, MonomialIdeal> mvt_children(const MonomialIdeal& ideal, const PivotStrategy& strategy);

/**
 * Materializes a Mayer-Vietoris tree. With prune set, subtrees are cut by
 * the generator and indeterminate rules and below dimension n - 1.
 * Throws ScaleError past max_nodes nodes.
 */
MvtTree build_mvt(const MonomialIdeal& ideal, const PivotStrategy& strategy, bool prune,
                  std::size_t max_nodes = kDefaultMaxTreeNodes);

struct BettiKey {
    std::size_t degree = 0;
    Multidegree mu;

    auto operator<=>(const BettiKey&) const = default;
    bool operator==(const BettiKey&) const = default;
};

struct BettiBound {
    std::size_t lower = 0;
    std::size_t upper = 0;

    bool operator==(const BettiBound&) const = default;
};

using BettiBounds = std::map<BettiKey, BettiBound>;

/**
 * Lower and upper bounds on the multigraded Betti numbers read off an
 * unpruned tree. upper counts the relevant nodes of dimension i that have mu
 * as a generator; lower is 1 when mu is a generator of exactly one relevant
 * node in the whole tree, recorded at that node's dimension.
 */
BettiBounds betti_bounds(const MvtTree& tree);

struct MvtStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_by_generators = 0;
    std::uint64_t pruned_by_indeterminates = 0;
    std::uint64_t shortcut_nodes = 0;
    /// Generators collected from nodes of dimension n - 1, with multiplicity.
    std::uint64_t candidates = 0;
    std::uint64_t distinct_candidates = 0;
};

struct CornerSearch {
    std::vector<Multidegree> corners;
    MvtStats stats;
};

/// Multidegrees with non-zero (n-1)-st Koszul homology, i.e. the maximal corners, lex descending.
std::vector<Multidegree> compute_b_n_minus_1(const MonomialIdeal& ideal, const MvtOptions& options = {});
CornerSearch search_maximal_corners(const MonomialIdeal& ideal, const MvtOptions& options = {});

/// One line per node in pre-order: "position dimension R|- [generators]" plus a pruning note.
std::string dump_tree(const MvtTree& tree, std::span<const std::string> names);

}  // namespace kozmo

#endif  // KOZMO_MVT_HPP
