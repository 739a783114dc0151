// term.hpp -- ranked vocabularies, first-order terms, substitutions,
// rewrite rules and term-rewriting systems.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcm {

/// A function symbol with a fixed arity. Arity 0 symbols are constants.
struct Symbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A finite set of function symbols with unique names.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Adds a symbol; throws std::invalid_argument on a duplicate name
    /// (also when the duplicate has a different arity).
    const Symbol& add(const std::string& name, int arity);

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    const Symbol* find(const std::string& name) const;

    /// Arity of a declared symbol; throws std::invalid_argument if unknown.
    int arity(const std::string& name) const;

    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::vector<Symbol> constants() const;
    bool empty() const { return symbols_.empty(); }

private:
    std::vector<Symbol> symbols_;          // declaration order, used for canonical output
    std::map<std::string, std::size_t> index_;
};

/// An immutable first-order term: a variable or an application
/// f(t1, ..., tn). Sharing is by value; copies are cheap (shared nodes).
class Term {
public:
    static Term var(std::string name);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_variable() const { return node_->is_var; }
    /// Variable name or applied symbol name.
    const std::string& head() const { return node_->head; }
    const std::vector<Term>& args() const { return node_->args; }

    int node_count() const { return node_->node_count; }
    /// Constants and variables have depth 0, f(a) has depth 1, and so on.
    int depth() const { return node_->depth; }
    bool is_ground() const { return node_->ground; }

    /// Free variable names in first-occurrence order (left to right).
    std::vector<std::string> vars() const;
    std::set<std::string> var_set() const;

    std::string str() const;

    std::size_t hash() const { return node_->hash; }

    /// Structural total order; variables sort before applications.
    int compare(const Term& other) const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) { return a.compare(b) < 0; }

private:
    struct Node {
        bool is_var;
        std::string head;
        std::vector<Term> args;
        int node_count;
        int depth;
        bool ground;
        std::size_t hash;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Checks that every application in t names a declared symbol with the
/// right argument count; throws std::invalid_argument otherwise.
void validate_term(const Term& t, const Vocabulary& vocab);

/// A finite map from variable names to terms; identity elsewhere.
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::map<std::string, Term> mapping) : mapping_(std::move(mapping)) {}

    /// Binds var to t. Returns false (and leaves the binding alone) if var
    /// is already bound to a different term.
    bool bind(const std::string& var, const Term& t);

    const Term* lookup(const std::string& var) const;
    const std::map<std::string, Term>& mapping() const { return mapping_; }
    bool empty() const { return mapping_.empty(); }

private:
    std::map<std::string, Term> mapping_;
};

/// Homomorphic application: all variables replaced simultaneously,
/// unmapped variables left unchanged.
Term apply_substitution(const Term& t, const Substitution& s);

/// First-order matching: a substitution s with pattern.s = subject, if one
/// exists. Variables of the subject are treated as inert constants.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// A rewrite rule l -> r. The constructor rejects a bare-variable lhs and
/// rhs variables that do not occur in the lhs.
class RewriteRule {
public:
    RewriteRule(Term lhs, Term rhs);

    const Term& lhs() const { return lhs_; }
    const Term& rhs() const { return rhs_; }

    std::string str() const { return lhs_.str() + " -> " + rhs_.str(); }

    friend bool operator==(const RewriteRule& a, const RewriteRule& b) {
        return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
    }

private:
    Term lhs_;
    Term rhs_;
};

/// A term-rewriting system over a vocabulary. Construction validates that
/// every rule only uses declared symbols at their declared arities.
class Trs {
public:
    Trs(Vocabulary vocabulary, std::vector<RewriteRule> rules);

    const Vocabulary& vocabulary() const { return vocabulary_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

private:
    Vocabulary vocabulary_;
    std::vector<RewriteRule> rules_;
};

} // namespace fcm
