#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "values.hpp"

namespace rqa {

// Variable or constant. Variables are written `?name` in source.
class Term {
public:
    static Term variable(std::string name);
    static Term constant(Value v);

    bool isVariable() const { return rep_.index() == 0; }
    bool isConstant() const { return rep_.index() == 1; }
    const std::string& varName() const { return std::get<0>(rep_); }
    const Value& value() const { return std::get<1>(rep_); }

    std::string str() const;

    friend bool operator==(const Term&, const Term&) = default;

private:
    std::variant<std::string, Value> rep_;
    explicit Term(decltype(rep_) rep) : rep_(std::move(rep)) {}
};

// Predicate application; arity is 1 or 2, enforced by the parser.
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    int arity() const { return static_cast<int>(args.size()); }
    std::string str() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Comparison {
    Term lhs;
    CmpOp op;
    Term rhs;

    std::string str() const;
    friend bool operator==(const Comparison&, const Comparison&) = default;
};

using Literal = std::variant<Atom, Comparison>;

std::string toString(const Literal& lit);
bool isAtom(const Literal& lit);

// Rule as written: one or more head atoms sharing a body. Normalization
// splits multi-head rules into plain Horn clauses.
struct ParsedRule {
    std::vector<Atom> heads;
    std::vector<Literal> body;
    SourcePos pos;
};

// Horn clause: single head. An empty body asserts the (ground) head.
struct Rule {
    Atom head;
    std::vector<Literal> body;
    SourcePos pos;

    std::string str() const;
    friend bool operator==(const Rule& a, const Rule& b) {
        return a.head == b.head && a.body == b.body;
    }
};

// Ground atom.
struct Fact {
    std::string predicate;
    std::vector<Value> args;

    int arity() const { return static_cast<int>(args.size()); }
    std::string str() const;

    friend bool operator==(const Fact&, const Fact&) = default;
    friend auto operator<=>(const Fact&, const Fact&) = default;
};

struct FactHash {
    size_t operator()(const Fact& f) const;
};

// Canonical triple form: unary C(a) <-> "a <TAB> isa <TAB> C", binary
// p(a,b) <-> "a <TAB> p <TAB> b". `isa` is reserved for this encoding.
inline constexpr const char* kIsaPredicate = "isa";

std::string factToTriple(const Fact& f);
Fact tripleToFact(const std::string& line);

// Conjunctive query: atoms plus comparisons. Answer variables are the
// variables of the atoms in first-occurrence order.
struct Query {
    std::vector<Literal> literals;
    std::vector<std::string> answerVars;

    std::string str() const;
};

// True for predicate names the engine reserves for rewriting machinery
// (they contain '$'); user sources may not declare them.
bool isInternalPredicate(const std::string& name);

} // namespace rqa
