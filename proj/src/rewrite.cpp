#include "fcm/rewrite.hpp"

#include <deque>
#include <map>

namespace fcm {

namespace {

void require_ground(const Term& t, const char* op) {
    if (!t.is_ground())
        throw std::invalid_argument(std::string(op) + ": input term is not ground: " + t.str());
}

std::set<Term> root_rewrites(const Term& t, const Trs& trs) {
    std::set<Term> out;
    for (const RewriteRule& rule : trs.rules())
        if (auto s = match(rule.lhs(), t))
            out.insert(apply_substitution(rule.rhs(), *s));
    return out;
}

// Successors of t at any position, built bottom-up: rewrite each argument
// in place, then the root.
std::set<Term> all_rewrites(const Term& t, const Trs& trs) {
    std::set<Term> out = root_rewrites(t, trs);
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        for (const Term& arg_rewritten : all_rewrites(t.args()[i], trs)) {
            std::vector<Term> args = t.args();
            args[i] = arg_rewritten;
            out.insert(Term::app(t.head(), std::move(args)));
        }
    }
    return out;
}

} // namespace

std::set<Term> one_step_successors(const Term& t, const Trs& trs) {
    require_ground(t, "one_step_successors");
    return all_rewrites(t, trs);
}

std::set<Term> outermost_successors(const Term& t, const Trs& trs) {
    require_ground(t, "outermost_successors");
    return root_rewrites(t, trs);
}

std::set<Term> successors(const Term& t, const Trs& trs, RewriteStrategy strategy) {
    return strategy == RewriteStrategy::any ? one_step_successors(t, trs)
                                            : outermost_successors(t, trs);
}

ReachableSet bounded_reachable(const Term& t0, const Trs& trs, int depth, int size_cap,
                               RewriteStrategy strategy) {
    require_ground(t0, "bounded_reachable");
    if (depth < 0)
        throw std::invalid_argument("bounded_reachable: negative depth");
    if (size_cap < t0.node_count())
        throw std::invalid_argument("bounded_reachable: size cap below the initial term size");

    ReachableSet result;
    result.terms.insert(t0);
    std::vector<Term> frontier{t0};
    for (int step = 0; step < depth && !frontier.empty(); ++step) {
        std::vector<Term> next;
        for (const Term& t : frontier) {
            for (const Term& succ : successors(t, trs, strategy)) {
                if (succ.node_count() > size_cap) {
                    result.pruned = true;
                    continue;
                }
                if (result.terms.insert(succ).second)
                    next.push_back(succ);
            }
        }
        frontier = std::move(next);
    }
    return result;
}

std::optional<std::vector<Term>> find_rewrite_trace(const Term& t0, const Trs& trs,
                                                    const std::function<bool(const Term&)>& target,
                                                    int depth, int size_cap,
                                                    RewriteStrategy strategy) {
    require_ground(t0, "find_rewrite_trace");
    std::map<Term, Term> parent; // child -> predecessor
    auto unwind = [&](Term t) {
        std::vector<Term> trace{t};
        while (true) {
            auto it = parent.find(trace.back());
            if (it == parent.end())
                break;
            trace.push_back(it->second);
        }
        std::reverse(trace.begin(), trace.end());
        return trace;
    };

    if (target(t0))
        return unwind(t0);
    std::set<Term> seen{t0};
    std::vector<Term> frontier{t0};
    for (int step = 0; step < depth && !frontier.empty(); ++step) {
        std::vector<Term> next;
        for (const Term& t : frontier) {
            for (const Term& succ : successors(t, trs, strategy)) {
                if (succ.node_count() > size_cap || !seen.insert(succ).second)
                    continue;
                parent.emplace(succ, t);
                if (target(succ))
                    return unwind(succ);
                next.push_back(succ);
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<Term> enumerate_ground_terms(const Vocabulary& vocab, int max_depth) {
    // by_depth[d] holds all ground terms of depth exactly d.
    std::vector<std::vector<Term>> by_depth;
    std::vector<Term> up_to; // depth <= current
    for (int d = 0; d <= max_depth; ++d) {
        std::vector<Term> level;
        for (const Symbol& s : vocab.symbols()) {
            if (d == 0) {
                if (s.arity == 0)
                    level.push_back(Term::app(s.name));
                continue;
            }
            if (s.arity == 0)
                continue;
            // All argument tuples from terms of depth < d with at least one
            // argument of depth exactly d-1.
            std::vector<Term> args(s.arity, Term::var("_"));
            std::function<void(int, bool)> fill = [&](int pos, bool has_max) {
                if (pos == s.arity) {
                    if (has_max)
                        level.push_back(Term::app(s.name, args));
                    return;
                }
                for (const Term& t : up_to) {
                    args[pos] = t;
                    fill(pos + 1, has_max || t.depth() == d - 1);
                }
            };
            fill(0, false);
        }
        by_depth.push_back(level);
        up_to.insert(up_to.end(), level.begin(), level.end());
    }
    std::sort(up_to.begin(), up_to.end());
    return up_to;
}

} // namespace fcm
