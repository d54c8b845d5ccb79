#include "kozmo/mvt.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>

#include "kozmo/errors.hpp"
#include "kozmo/simplicial.hpp"

namespace kozmo {

// --- PivotStrategy --------------------------------------------------------

PivotStrategy PivotStrategy::lex_first() { return PivotStrategy(PivotRule::LexFirst, "lex"); }

PivotStrategy PivotStrategy::last_generator() { return PivotStrategy(PivotRule::LastGenerator, "last"); }

PivotStrategy PivotStrategy::custom(Precedes precedes, std::string name) {
    if (!precedes) throw InvalidInputError("custom pivot strategy needs a comparator");
    return PivotStrategy(PivotRule::Custom, std::move(name), std::move(precedes));
}

std::size_t PivotStrategy::select(std::span<const Multidegree> gens) const {
    if (gens.empty()) throw LeafError("no generator to pivot on");
    switch (rule_) {
        case PivotRule::LexFirst:
            return static_cast<std::size_t>(std::max_element(gens.begin(), gens.end()) - gens.begin());
        case PivotRule::LastGenerator:
            return static_cast<std::size_t>(std::min_element(gens.begin(), gens.end()) - gens.begin());
        case PivotRule::Custom:
            return static_cast<std::size_t>(std::min_element(gens.begin(), gens.end(), precedes_) - gens.begin());
    }
    return 0;
}

MvtOptions MvtOptions::unpruned(PivotStrategy strategy) {
    MvtOptions o;
    o.strategy = std::move(strategy);
    o.prune_by_generators = false;
    o.prune_by_indeterminates = false;
    return o;
}

boost::multiprecision::cpp_int MvtNode::position() const {
    boost::multiprecision::cpp_int p = 1;
    for (bool right_step : path) p = 2 * p + (right_step ? 1 : 0);
    return p;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("the zero ideal has no Mayer-Vietoris tree");
    if (ideal.is_unit()) throw DomainError("the unit ideal has no Mayer-Vietoris tree");
}

// Node ideals inside the engine are packed row-major, n exponents per generator.
using Rows = std::vector<Exponent>;

class Engine {
public:
    struct Sink {
        Rows candidates;
        MvtStats stats;
    };

    struct Pending {
        Rows rows;
        std::size_t dimension;
    };

    Engine(std::size_t n, const MvtOptions& options)
        : n_(n),
          options_(options),
          capped_(options.prune_by_generators || options.prune_by_indeterminates),
          shortcut_(options.eliminate_variables && options.strategy.rule() == PivotRule::LexFirst && n >= 2) {}

    void run(Rows root, Sink& sink) const {
        if (options_.threads <= 1) {
            dfs(std::move(root), 0, sink);
            return;
        }
        // Breadth-first expansion until there is enough independent work.
        std::deque<Pending> frontier;
        frontier.push_back({std::move(root), 0});
        const std::size_t target = 8 * static_cast<std::size_t>(options_.threads);
        while (!frontier.empty() && frontier.size() < target) {
            Pending p = std::move(frontier.front());
            frontier.pop_front();
            Rows left;
            Rows right;
            if (process(p.rows, p.dimension, sink, left, right)) {
                frontier.push_back({std::move(left), p.dimension + 1});
                frontier.push_back({std::move(right), p.dimension});
            }
        }
        std::vector<Pending> work(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));
        std::vector<Sink> local(options_.threads);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < options_.threads; ++t) {
            pool.emplace_back([&, t] {
                for (auto k = next.fetch_add(1); k < work.size(); k = next.fetch_add(1)) {
                    dfs(std::move(work[k].rows), work[k].dimension, local[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& s : local) {
            sink.candidates.insert(sink.candidates.end(), s.candidates.begin(), s.candidates.end());
            sink.stats.nodes += s.stats.nodes;
            sink.stats.pruned_by_generators += s.stats.pruned_by_generators;
            sink.stats.pruned_by_indeterminates += s.stats.pruned_by_indeterminates;
            sink.stats.shortcut_nodes += s.stats.shortcut_nodes;
            sink.stats.candidates += s.stats.candidates;
        }
    }

private:
    std::size_t count(const Rows& rows) const { return rows.size() / n_; }
    const Exponent* row(const Rows& rows, std::size_t i) const { return rows.data() + i * n_; }

    bool lex_less(const Exponent* a, const Exponent* b) const { return std::lexicographical_compare(a, a + n_, b, b + n_); }

    bool full_support(const Rows& rows) const {
        std::size_t covered = 0;
        std::vector<bool> seen(n_, false);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k] != 0 && !seen[k % n_]) {
                seen[k % n_] = true;
                if (++covered == n_) return true;
            }
        }
        return covered == n_;
    }

    std::size_t pivot(const Rows& rows) const {
        const auto g = count(rows);
        switch (options_.strategy.rule()) {
            case PivotRule::LexFirst: {
                std::size_t best = 0;
                for (std::size_t j = 1; j < g; ++j) {
                    if (lex_less(row(rows, best), row(rows, j))) best = j;
                }
                return best;
            }
            case PivotRule::LastGenerator: {
                std::size_t best = 0;
                for (std::size_t j = 1; j < g; ++j) {
                    if (lex_less(row(rows, j), row(rows, best))) best = j;
                }
                return best;
            }
            case PivotRule::Custom: {
                std::vector<Multidegree> gens;
                gens.reserve(g);
                for (std::size_t j = 0; j < g; ++j) gens.emplace_back(std::span<const Exponent>(row(rows, j), n_));
                return options_.strategy.select(gens);
            }
        }
        return 0;
    }

    // Keeps the divisibility-minimal rows, without duplicates.
    Rows minimal_rows(const Rows& rows) const {
        const auto g = count(rows);
        std::vector<std::uint64_t> degree(g, 0);
        for (std::size_t j = 0; j < g; ++j) {
            const auto* r = row(rows, j);
            degree[j] = std::accumulate(r, r + n_, std::uint64_t{0});
        }
        std::vector<std::size_t> order(g);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
        Rows kept;
        kept.reserve(rows.size());
        for (auto j : order) {
            const auto* candidate = row(rows, j);
            bool redundant = false;
            for (std::size_t k = 0; k < kept.size() / n_ && !redundant; ++k) {
                const auto* keeper = kept.data() + k * n_;
                std::size_t i = 0;
                while (i < n_ && keeper[i] <= candidate[i]) ++i;
                redundant = i == n_;
            }
            if (!redundant) kept.insert(kept.end(), candidate, candidate + n_);
        }
        return kept;
    }

    void emit(const Exponent* r, Sink& sink) const { sink.candidates.insert(sink.candidates.end(), r, r + n_); }

    // Applies the pruning rules and collects candidates. Returns true and
    // fills the children when the node has to be expanded.
    bool process(const Rows& rows, std::size_t dimension, Sink& sink, Rows& left, Rows& right) const {
        ++sink.stats.nodes;
        const auto g = count(rows);
        if (options_.prune_by_generators && g + dimension < n_) {
            ++sink.stats.pruned_by_generators;
            return false;
        }
        if (options_.prune_by_indeterminates && !full_support(rows)) {
            ++sink.stats.pruned_by_indeterminates;
            return false;
        }
        if (dimension + 1 == n_) {
            for (std::size_t j = 0; j < g; ++j) emit(row(rows, j), sink);
            sink.stats.candidates += g;
            // Right descendants repeat a subset of these generators, left ones
            // sit above dimension n - 1.
            if (capped_) return false;
        } else if (shortcut_ && dimension + 2 == n_) {
            // All generators agree on x_1..x_{n-2}; in the remaining two
            // variables the dimension n - 1 nodes are the lcms of neighbours
            // in lex order.
            std::vector<std::size_t> order(g);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return lex_less(row(rows, b), row(rows, a)); });
            std::vector<Exponent> l(n_);
            for (std::size_t j = 0; j + 1 < g; ++j) {
                const auto* a = row(rows, order[j]);
                const auto* b = row(rows, order[j + 1]);
                for (std::size_t i = 0; i < n_; ++i) l[i] = std::max(a[i], b[i]);
                emit(l.data(), sink);
            }
            sink.stats.candidates += g > 0 ? g - 1 : 0;
            ++sink.stats.shortcut_nodes;
            return false;
        }
        if (g < 2) return false;

        const auto p = pivot(rows);
        const auto* pr = row(rows, p);
        Rows lcms;
        lcms.reserve((g - 1) * n_);
        right.clear();
        right.reserve((g - 1) * n_);
        for (std::size_t j = 0; j < g; ++j) {
            if (j == p) continue;
            const auto* r = row(rows, j);
            right.insert(right.end(), r, r + n_);
            for (std::size_t i = 0; i < n_; ++i) lcms.push_back(std::max(r[i], pr[i]));
        }
        left = minimal_rows(lcms);
        return true;
    }

    void dfs(Rows rows, std::size_t dimension, Sink& sink) const {
        Rows left;
        Rows right;
        if (!process(rows, dimension, sink, left, right)) return;
        rows.clear();
        rows.shrink_to_fit();
        dfs(std::move(left), dimension + 1, sink);
        dfs(std::move(right), dimension, sink);
    }

    std::size_t n_;
    const MvtOptions& options_;
    bool capped_;
    bool shortcut_;
};

Rows pack(const MonomialIdeal& ideal) {
    Rows rows;
    rows.reserve(ideal.size() * ideal.ring_dimension());
    for (const auto& g : ideal.generators()) {
        auto e = g.exponents();
        rows.insert(rows.end(), e.begin(), e.end());
    }
    return rows;
}

bool has_full_support(const MonomialIdeal& ideal) {
    std::uint64_t bits = 0;
    for (const auto& g : ideal.generators()) bits |= support_of(g).bits();
    return VarSet(bits) == VarSet::full(ideal.ring_dimension());
}

}  // namespace

// --- children and trees ---------------------------------------------------

std::pair<MonomialIdeal, MonomialIdeal> mvt_children(const MonomialIdeal& ideal, const PivotStrategy& strategy) {
    const auto& gens = ideal.generators();
    if (gens.size() < 2) throw LeafError("a node needs at least two generators to have children");
    const auto p = strategy.select(gens);
    std::vector<Multidegree> lcms;
    std::vector<Multidegree> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == p) continue;
        lcms.push_back(lcm_of(gens[j], gens[p]));
        rest.push_back(gens[j]);
    }
    const auto n = ideal.ring_dimension();
    return {minimalize(std::move(lcms), n), minimalize(std::move(rest), n)};
}

MvtTree build_mvt(const MonomialIdeal& ideal, const PivotStrategy& strategy, bool prune, std::size_t max_nodes) {
    require_proper_nonzero(ideal);
    const auto n = ideal.ring_dimension();
    std::vector<MvtNode> nodes;

    struct Frame {
        MonomialIdeal ideal;
        std::vector<bool> path;
        std::size_t dimension;
    };
    // Explicit stack so that deep trees do not exhaust the call stack; the
    // right child is pushed first so that nodes come out in pre-order.
    std::vector<std::pair<Frame, std::optional<std::pair<std::size_t, bool>>>> stack;
    stack.push_back({Frame{ideal, {}, 0}, std::nullopt});
    while (!stack.empty()) {
        auto [frame, parent] = std::move(stack.back());
        stack.pop_back();
        if (nodes.size() >= max_nodes) {
            throw ScaleError("Mayer-Vietoris tree exceeds " + std::to_string(max_nodes) + " nodes");
        }
        const auto index = nodes.size();
        if (parent) {
            auto& p = nodes[parent->first];
            (parent->second ? p.right : p.left) = index;
        }
        MvtNode node;
        node.dimension = frame.dimension;
        node.relevant = frame.path.empty() || !frame.path.back();
        const auto g = frame.ideal.size();
        if (prune) {
            if (g + frame.dimension < n) node.pruned |= kPrunedByGenerators;
            if (!has_full_support(frame.ideal)) node.pruned |= kPrunedByIndeterminates;
            if (node.pruned == kNotPruned && frame.dimension + 1 >= n && g >= 2) node.pruned |= kPrunedByDimension;
        }
        const bool expand = node.pruned == kNotPruned && g >= 2;
        std::optional<std::pair<MonomialIdeal, MonomialIdeal>> kids;
        if (expand) kids = mvt_children(frame.ideal, strategy);
        node.ideal = std::move(frame.ideal);
        node.path = frame.path;
        nodes.push_back(std::move(node));
        if (kids) {
            auto right_path = frame.path;
            right_path.push_back(true);
            auto left_path = std::move(frame.path);
            left_path.push_back(false);
            stack.push_back({Frame{std::move(kids->second), std::move(right_path), frame.dimension}, {{index, true}}});
            stack.push_back(
                {Frame{std::move(kids->first), std::move(left_path), frame.dimension + 1}, {{index, false}}});
        }
    }
    return MvtTree(n, prune, std::move(nodes));
}

BettiBounds betti_bounds(const MvtTree& tree) {
    if (tree.is_pruned()) throw InvalidInputError("Betti bounds need an unpruned Mayer-Vietoris tree");
    BettiBounds bounds;
    std::map<Multidegree, std::size_t> occurrences;
    for (const auto& node : tree.nodes()) {
        if (!node.relevant) continue;
        for (const auto& g : node.ideal.generators()) {
            ++bounds[BettiKey{node.dimension, g}].upper;
            ++occurrences[g];
        }
    }
    for (auto& [key, bound] : bounds) {
        if (occurrences.at(key.mu) == 1) bound.lower = 1;
    }
    return bounds;
}

// --- maximal corners ------------------------------------------------------

CornerSearch search_maximal_corners(const MonomialIdeal& ideal, const MvtOptions& options) {
    require_proper_nonzero(ideal);
    const auto n = ideal.ring_dimension();
    Engine::Sink sink;
    Engine(n, options).run(pack(ideal), sink);

    std::vector<Multidegree> candidates;
    candidates.reserve(sink.candidates.size() / n);
    for (std::size_t k = 0; k < sink.candidates.size(); k += n) {
        candidates.emplace_back(std::span<const Exponent>(sink.candidates.data() + k, n));
    }
    sink.candidates.clear();
    sink.candidates.shrink_to_fit();
    std::sort(candidates.begin(), candidates.end(), LexDescending{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    CornerSearch result;
    result.stats = sink.stats;
    result.stats.distinct_candidates = candidates.size();
    for (auto& c : candidates) {
        if (is_maximal_corner(ideal, c)) result.corners.push_back(std::move(c));
    }
    return result;
}

std::vector<Multidegree> compute_b_n_minus_1(const MonomialIdeal& ideal, const MvtOptions& options) {
    return search_maximal_corners(ideal, options).corners;
}

std::string dump_tree(const MvtTree& tree, std::span<const std::string> names) {
    std::ostringstream out;
    for (const auto& node : tree.nodes()) {
        out << node.position() << ' ' << node.dimension << ' ' << (node.relevant ? 'R' : '-') << " [";
        bool first = true;
        for (const auto& g : node.ideal.generators()) {
            out << (first ? "" : ", ") << format_monomial(g, names);
            first = false;
        }
        out << ']';
        if (node.pruned != kNotPruned) {
            out << " pruned:";
            const char* sep = "";
            if (node.pruned & kPrunedByGenerators) {
                out << sep << "generators";
                sep = ",";
            }
            if (node.pruned & kPrunedByIndeterminates) {
                out << sep << "indeterminates";
                sep = ",";
            }
            if (node.pruned & kPrunedByDimension) out << sep << "dimension";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace kozmo
