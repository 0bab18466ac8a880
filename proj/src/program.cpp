#include "program.hpp"

#include <deque>

namespace rqa {

void PredicateRegistry::declare(const std::string& name, int arity, const std::string& where) {
    auto [it, inserted] = arities_.emplace(name, arity);
    if (!inserted && it->second != arity)
        throw Error(ErrorKind::Parse, where + ": predicate " + name + " used with arity " +
                                          std::to_string(arity) + " but declared with arity " +
                                          std::to_string(it->second));
}

void PredicateRegistry::merge(const PredicateRegistry& other) {
    for (const auto& [name, arity] : other.arities_)
        declare(name, arity, "merge");
}

int PredicateRegistry::arity(const std::string& name) const {
    auto it = arities_.find(name);
    if (it == arities_.end())
        throw Error(ErrorKind::Parse, "unknown predicate " + name);
    return it->second;
}

std::vector<Rule> lloydToporSplit(const ParsedRule& rule) {
    std::vector<Rule> out;
    out.reserve(rule.heads.size());
    for (const Atom& head : rule.heads)
        out.push_back(Rule{head, rule.body, rule.pos});
    return out;
}

std::string SafetyViolation::str() const {
    std::string where = inComparison ? "occurs only in comparisons" : "in the head is unbound";
    return "rule " + std::to_string(ruleIndex + 1) + ": variable ?" + variable + " " + where +
           " (every head/comparison variable must occur in a body atom)";
}

std::vector<SafetyViolation> checkSafety(const Rule& rule, size_t ruleIndex) {
    std::set<std::string> atomVars;
    for (const Literal& lit : rule.body) {
        if (!isAtom(lit))
            continue;
        for (const Term& t : std::get<Atom>(lit).args)
            if (t.isVariable())
                atomVars.insert(t.varName());
    }

    std::vector<SafetyViolation> out;
    std::set<std::string> reported;
    for (const Term& t : rule.head.args)
        if (t.isVariable() && !atomVars.count(t.varName()) && reported.insert(t.varName()).second)
            out.push_back({ruleIndex, t.varName(), false});
    for (const Literal& lit : rule.body) {
        if (isAtom(lit))
            continue;
        const Comparison& cmp = std::get<Comparison>(lit);
        for (const Term* t : {&cmp.lhs, &cmp.rhs})
            if (t->isVariable() && !atomVars.count(t->varName()) &&
                reported.insert(t->varName()).second)
                out.push_back({ruleIndex, t->varName(), true});
    }
    return out;
}

Program Program::fromRules(std::vector<Rule> rules) {
    Program p;
    p.rules_ = std::move(rules);
    for (size_t i = 0; i < p.rules_.size(); i++) {
        const Rule& r = p.rules_[i];
        std::string where = "rule " + std::to_string(i + 1);
        p.registry_.declare(r.head.predicate, r.head.arity(), where);
        p.headPreds_.insert(r.head.predicate);
        for (const Literal& lit : r.body)
            if (isAtom(lit)) {
                const Atom& a = std::get<Atom>(lit);
                p.registry_.declare(a.predicate, a.arity(), where);
            }
    }
    return p;
}

std::set<std::string> Program::essentialPredicates() const {
    std::set<std::string> out;
    for (const auto& [name, arity] : registry_.all())
        if (!headPreds_.count(name))
            out.insert(name);
    return out;
}

std::string Program::str() const {
    std::string out;
    for (const Rule& r : rules_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

DependencyGraph dependencyGraph(const Program& program) {
    DependencyGraph g;
    for (const Rule& r : program.rules()) {
        g.nodes.insert(r.head.predicate);
        for (const Literal& lit : r.body)
            if (isAtom(lit)) {
                const Atom& a = std::get<Atom>(lit);
                g.nodes.insert(a.predicate);
                g.edges[r.head.predicate].insert(a.predicate);
            }
    }
    return g;
}

std::set<std::string> relevantClosure(const Query& query, const Program& program) {
    DependencyGraph g = dependencyGraph(program);
    std::set<std::string> seen;
    std::deque<std::string> todo;
    for (const Literal& lit : query.literals)
        if (isAtom(lit) && seen.insert(std::get<Atom>(lit).predicate).second)
            todo.push_back(std::get<Atom>(lit).predicate);
    while (!todo.empty()) {
        std::string pred = todo.front();
        todo.pop_front();
        auto it = g.edges.find(pred);
        if (it == g.edges.end())
            continue;
        for (const std::string& next : it->second)
            if (seen.insert(next).second)
                todo.push_back(next);
    }
    return seen;
}

} // namespace rqa
