#pragma once

#include <string>
#include <vector>

#include "program.hpp"

namespace rqa {

// Token-level scanner shared by the rule, query and mapping grammars.
// `%` starts a line comment; names are [A-Za-z_][A-Za-z0-9_$]*, `$` being
// admitted only so rewritten programs stay within the grammar.
class Lexer {
public:
    enum class Tok { Name, Variable, Int, Dec, Str, LParen, RParen, Comma, Dot, Implies, MapsFrom, Cmp, End };

    explicit Lexer(std::string_view text);

    Tok kind() const { return kind_; }
    const std::string& text() const { return text_; }
    CmpOp cmpOp() const { return cmpOp_; }
    SourcePos pos() const { return pos_; }

    void next();
    bool at(Tok t) const { return kind_ == t; }
    // True for a Name token equal to `word` (mapping-grammar keywords).
    bool atWord(const char* word) const { return kind_ == Tok::Name && text_ == word; }
    void expect(Tok t, const char* what);

    [[noreturn]] void fail(const std::string& message) const;

private:
    std::string_view src_;
    size_t offset_ = 0;
    int line_ = 1, column_ = 1;

    Tok kind_ = Tok::End;
    std::string text_;
    CmpOp cmpOp_ = CmpOp::Eq;
    SourcePos pos_;

    char peek(size_t ahead = 0) const;
    char take();
    void skipSpace();
};

struct ParseOptions {
    // Permit '$' in predicate names (rewritten-program dumps only).
    bool allowInternalNames = false;
};

// Parses rule-language source into a normalized program: multi-head rules
// are split, arities registered, and safety enforced. Throws ErrorKind::
// Parse for syntax/arity problems and ErrorKind::Safety for unsafe rules
// (the message lists every violation with rule text and variable).
Program parseProgram(const std::string& text, ParseOptions opts = {});

// Same parse, but safety violations are returned instead of thrown, so
// callers can report all of them at once.
struct ProgramParseResult {
    Program program;
    std::vector<SafetyViolation> violations;
};
ProgramParseResult parseProgramLenient(const std::string& text, ParseOptions opts = {});

// Parses query-language source (body literals, no trailing dot). Every
// predicate must be known to `registry` with matching arity; every
// comparison variable must occur in some query atom.
Query parseQuery(const std::string& text, const PredicateRegistry& registry,
                 ParseOptions opts = {});

// Term/atom sub-parsers shared with the mapping grammar.
Term parseTerm(Lexer& lx);
Atom parseAtom(Lexer& lx, ParseOptions opts);

} // namespace rqa
