#include "ast.hpp"

#include <sstream>

namespace rqa {

Term Term::variable(std::string name) { return Term(decltype(rep_){std::in_place_index<0>, std::move(name)}); }
Term Term::constant(Value v) { return Term(decltype(rep_){std::in_place_index<1>, std::move(v)}); }

std::string Term::str() const {
    return isVariable() ? "?" + varName() : value().str();
}

std::string Atom::str() const {
    std::string out = predicate + "(";
    for (size_t i = 0; i < args.size(); i++) {
        if (i) out += ", ";
        out += args[i].str();
    }
    return out + ")";
}

std::string Comparison::str() const {
    return lhs.str() + " " + toString(op) + " " + rhs.str();
}

std::string toString(const Literal& lit) {
    return isAtom(lit) ? std::get<Atom>(lit).str() : std::get<Comparison>(lit).str();
}

bool isAtom(const Literal& lit) { return lit.index() == 0; }

std::string Rule::str() const {
    if (body.empty())
        return head.str() + ".";
    std::string out = head.str() + " :- ";
    for (size_t i = 0; i < body.size(); i++) {
        if (i) out += ", ";
        out += toString(body[i]);
    }
    return out + ".";
}

std::string Fact::str() const {
    std::string out = predicate + "(";
    for (size_t i = 0; i < args.size(); i++) {
        if (i) out += ", ";
        out += args[i].str();
    }
    return out + ")";
}

size_t FactHash::operator()(const Fact& f) const {
    size_t h = std::hash<std::string>{}(f.predicate);
    for (const Value& v : f.args)
        h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string factToTriple(const Fact& f) {
    if (f.arity() == 1)
        return f.args[0].str() + "\t" + kIsaPredicate + "\t" + f.predicate;
    return f.args[0].str() + "\t" + f.predicate + "\t" + f.args[1].str();
}

namespace {

// Triple fields hold constants in source syntax; predicates are bare names.
Value parseConstantField(const std::string& field) {
    if (field.empty())
        throw Error(ErrorKind::Data, "empty field in triple line");
    if (field.front() == '\'') {
        if (field.size() < 2 || field.back() != '\'')
            throw Error(ErrorKind::Data, "unterminated text in triple: " + field);
        std::string chars;
        for (size_t i = 1; i + 1 < field.size(); i++) {
            if (field[i] == '\'') {
                if (i + 2 >= field.size() || field[i + 1] != '\'')
                    throw Error(ErrorKind::Data, "stray quote in triple: " + field);
                i++;
            }
            chars += field[i];
        }
        return Value::text(chars);
    }
    char c = field.front();
    if (c == '-' || (c >= '0' && c <= '9')) {
        if (field.find('.') != std::string::npos) {
            auto dec = Decimal::parse(field);
            if (!dec)
                throw Error(ErrorKind::Data, "bad decimal in triple: " + field);
            return Value::decimal(*dec);
        }
        int64_t v = 0;
        try {
            v = std::stoll(field);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Data, "bad integer in triple: " + field);
        }
        return Value::integer(v);
    }
    return Value::symbol(field);
}

} // namespace

Fact tripleToFact(const std::string& line) {
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
        throw Error(ErrorKind::Data, "triple line needs two tabs: " + line);
    std::string subject = line.substr(0, t1);
    std::string predicate = line.substr(t1 + 1, t2 - t1 - 1);
    std::string object = line.substr(t2 + 1);
    if (predicate == kIsaPredicate)
        return Fact{object, {parseConstantField(subject)}};
    return Fact{predicate, {parseConstantField(subject), parseConstantField(object)}};
}

std::string Query::str() const {
    std::string out;
    for (size_t i = 0; i < literals.size(); i++) {
        if (i) out += ", ";
        out += toString(literals[i]);
    }
    return out;
}

bool isInternalPredicate(const std::string& name) {
    return name.find('$') != std::string::npos;
}

} // namespace rqa
