#include "fcm/term.hpp"

#include <algorithm>
#include <functional>

namespace fcm {

namespace {

std::size_t combine_hash(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

const Symbol& Vocabulary::add(const std::string& name, int arity) {
    if (arity < 0)
        throw std::invalid_argument("negative arity for symbol '" + name + "'");
    auto it = index_.find(name);
    if (it != index_.end())
        throw std::invalid_argument("duplicate symbol '" + name + "'");
    symbols_.push_back(Symbol{name, arity});
    index_[name] = symbols_.size() - 1;
    return symbols_.back();
}

const Symbol* Vocabulary::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &symbols_[it->second];
}

int Vocabulary::arity(const std::string& name) const {
    const Symbol* s = find(name);
    if (!s)
        throw std::invalid_argument("unknown symbol '" + name + "'");
    return s->arity;
}

std::vector<Symbol> Vocabulary::constants() const {
    std::vector<Symbol> out;
    for (const Symbol& s : symbols_)
        if (s.arity == 0)
            out.push_back(s);
    return out;
}

Term Term::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->is_var = true;
    node->head = std::move(name);
    node->node_count = 1;
    node->depth = 0;
    node->ground = false;
    node->hash = combine_hash(0x5u, std::hash<std::string>{}(node->head));
    return Term(std::move(node));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
    auto node = std::make_shared<Node>();
    node->is_var = false;
    node->head = std::move(symbol);
    node->args = std::move(args);
    node->node_count = 1;
    node->depth = 0;
    node->ground = true;
    std::size_t h = combine_hash(0x7u, std::hash<std::string>{}(node->head));
    for (const Term& a : node->args) {
        node->node_count += a.node_count();
        node->depth = std::max(node->depth, a.depth() + 1);
        node->ground = node->ground && a.is_ground();
        h = combine_hash(h, a.hash());
    }
    node->hash = h;
    return Term(std::move(node));
}

std::vector<std::string> Term::vars() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::function<void(const Term&)> walk = [&](const Term& t) {
        if (t.is_variable()) {
            if (seen.insert(t.head()).second)
                out.push_back(t.head());
            return;
        }
        for (const Term& a : t.args())
            walk(a);
    };
    walk(*this);
    return out;
}

std::set<std::string> Term::var_set() const {
    std::vector<std::string> v = vars();
    return std::set<std::string>(v.begin(), v.end());
}

std::string Term::str() const {
    std::string out = head();
    if (!is_variable() && !args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < args().size(); ++i) {
            if (i > 0)
                out += ',';
            out += args()[i].str();
        }
        out += ')';
    }
    return out;
}

int Term::compare(const Term& other) const {
    if (node_ == other.node_)
        return 0;
    if (is_variable() != other.is_variable())
        return is_variable() ? -1 : 1;
    if (int c = head().compare(other.head()); c != 0)
        return c < 0 ? -1 : 1;
    if (args().size() != other.args().size())
        return args().size() < other.args().size() ? -1 : 1;
    for (std::size_t i = 0; i < args().size(); ++i)
        if (int c = args()[i].compare(other.args()[i]); c != 0)
            return c;
    return 0;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.hash() != b.hash())
        return false;
    return a.compare(b) == 0;
}

void validate_term(const Term& t, const Vocabulary& vocab) {
    if (t.is_variable())
        return;
    const Symbol* s = vocab.find(t.head());
    if (!s)
        throw std::invalid_argument("undeclared symbol '" + t.head() + "' in term " + t.str());
    if (static_cast<std::size_t>(s->arity) != t.args().size())
        throw std::invalid_argument("arity mismatch for '" + t.head() + "' in term " + t.str() +
                                    ": declared " + std::to_string(s->arity) + ", applied to " +
                                    std::to_string(t.args().size()));
    for (const Term& a : t.args())
        validate_term(a, vocab);
}

bool Substitution::bind(const std::string& var, const Term& t) {
    auto [it, inserted] = mapping_.emplace(var, t);
    return inserted || it->second == t;
}

const Term* Substitution::lookup(const std::string& var) const {
    auto it = mapping_.find(var);
    return it == mapping_.end() ? nullptr : &it->second;
}

Term apply_substitution(const Term& t, const Substitution& s) {
    if (t.is_variable()) {
        const Term* bound = s.lookup(t.head());
        return bound ? *bound : t;
    }
    if (t.is_ground() || s.empty())
        return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args())
        args.push_back(apply_substitution(a, s));
    return Term::app(t.head(), std::move(args));
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& out) {
    if (pattern.is_variable())
        return out.bind(pattern.head(), subject);
    if (subject.is_variable() || pattern.head() != subject.head() ||
        pattern.args().size() != subject.args().size())
        return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_into(pattern.args()[i], subject.args()[i], out))
            return false;
    return true;
}

} // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
    Substitution s;
    if (!match_into(pattern, subject, s))
        return std::nullopt;
    return s;
}

RewriteRule::RewriteRule(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (lhs_.is_variable())
        throw std::invalid_argument("rule lhs must not be a bare variable: " + str());
    std::set<std::string> lhs_vars = lhs_.var_set();
    for (const std::string& v : rhs_.vars())
        if (!lhs_vars.count(v))
            throw std::invalid_argument("rule rhs variable '" + v +
                                        "' does not occur in lhs: " + str());
}

Trs::Trs(Vocabulary vocabulary, std::vector<RewriteRule> rules)
    : vocabulary_(std::move(vocabulary)), rules_(std::move(rules)) {
    for (const RewriteRule& r : rules_) {
        validate_term(r.lhs(), vocabulary_);
        validate_term(r.rhs(), vocabulary_);
    }
}

} // namespace fcm
