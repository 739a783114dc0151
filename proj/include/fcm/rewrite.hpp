// rewrite.hpp -- one-step and outermost rewriting on ground terms, a
// bounded-depth reachability oracle, and ground term enumeration.

#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fcm/term.hpp"

namespace fcm {

enum class RewriteStrategy { any, outermost };

inline constexpr int kUnboundedSize = INT_MAX;

/// All terms obtained from t by rewriting one subterm occurrence with one
/// rule. t must be ground.
std::set<Term> one_step_successors(const Term& t, const Trs& trs);

/// Successors obtained by rewriting at the root position only.
std::set<Term> outermost_successors(const Term& t, const Trs& trs);

std::set<Term> successors(const Term& t, const Trs& trs, RewriteStrategy strategy);

struct ReachableSet {
    std::set<Term> terms;
    bool pruned = false; // true when some successor exceeded the size cap
};

/// Breadth-first union of all terms reachable from t0 in at most `depth`
/// steps, keeping only terms with node_count() <= size_cap. Always
/// contains t0.
ReachableSet bounded_reachable(const Term& t0, const Trs& trs, int depth, int size_cap,
                               RewriteStrategy strategy);

/// Breadth-first search for a term satisfying `target`, returning the full
/// rewrite trace t0 => ... => t if found within the bounds.
std::optional<std::vector<Term>> find_rewrite_trace(const Term& t0, const Trs& trs,
                                                    const std::function<bool(const Term&)>& target,
                                                    int depth, int size_cap,
                                                    RewriteStrategy strategy);

/// All ground terms over vocab with depth(t) <= max_depth, in term order.
std::vector<Term> enumerate_ground_terms(const Vocabulary& vocab, int max_depth);

} // namespace fcm
