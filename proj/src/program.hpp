#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ast.hpp"

namespace rqa {

// Predicate name -> arity. Shared by programs, mappings and queries; a name
// has exactly one arity across all of them.
class PredicateRegistry {
public:
    // Registers or checks; throws ErrorKind::Parse on an arity conflict.
    void declare(const std::string& name, int arity, const std::string& where);
    void merge(const PredicateRegistry& other);

    bool contains(const std::string& name) const { return arities_.count(name) > 0; }
    int arity(const std::string& name) const;
    const std::map<std::string, int>& all() const { return arities_; }

private:
    std::map<std::string, int> arities_;
};

// One rule per head conjunct, each sharing the original body, in head order.
std::vector<Rule> lloydToporSplit(const ParsedRule& rule);

struct SafetyViolation {
    size_t ruleIndex;
    std::string variable;
    bool inComparison;  // variable occurs only in comparisons

    std::string str() const;
};

// A rule is safe iff every head variable and every comparison variable
// occurs in some body atom.
std::vector<SafetyViolation> checkSafety(const Rule& rule, size_t ruleIndex = 0);

// Normalized rule set: single-head rules, all safe, arities consistent.
class Program {
public:
    Program() = default;
    static Program fromRules(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    const PredicateRegistry& predicates() const { return registry_; }

    // Essential: the predicate heads no rule, so its extension can only
    // come from the relational source.
    bool isDerived(const std::string& pred) const { return headPreds_.count(pred) > 0; }
    bool isEssential(const std::string& pred) const {
        return registry_.contains(pred) && !isDerived(pred);
    }
    std::set<std::string> essentialPredicates() const;

    std::string str() const;

private:
    std::vector<Rule> rules_;
    PredicateRegistry registry_;
    std::set<std::string> headPreds_;
};

// Edge p -> q iff some rule with head p has atom q in its body. Nodes and
// edge sets are ordered maps, so iteration is deterministic.
struct DependencyGraph {
    std::set<std::string> nodes;
    std::map<std::string, std::set<std::string>> edges;
};

DependencyGraph dependencyGraph(const Program& program);

// Predicates reachable from the query's atoms, query predicates included.
std::set<std::string> relevantClosure(const Query& query, const Program& program);

} // namespace rqa
