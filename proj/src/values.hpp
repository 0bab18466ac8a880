#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "error.hpp"

namespace rqa {

enum class ValueType : uint8_t { Symbol, Integer, Decimal, Text };

const char* toString(ValueType t);

// Exact base-10 number: digits * 10^-scale, kept canonical (scale >= 0 and
// digits not divisible by 10 unless the value is 0/0). Canonical form makes
// structural equality coincide with numeric equality.
struct Decimal {
    int64_t digits = 0;
    int32_t scale = 0;

    static Decimal make(int64_t digits, int32_t scale);
    static std::optional<Decimal> parse(std::string_view text);

    std::string str() const;
    friend bool operator==(const Decimal&, const Decimal&) = default;
};

// Numeric order over decimals; mixes with Integer via Value comparisons.
std::strong_ordering compareNumeric(const Decimal& a, const Decimal& b);

// A typed constant. Symbols and text are distinct types: symbols come from
// unquoted identifiers (and `sym` columns), text from quoted strings (and
// `str` columns).
class Value {
public:
    Value() : rep_(std::in_place_index<1>, int64_t{0}) {}

    static Value symbol(std::string name);
    static Value integer(int64_t v);
    static Value decimal(Decimal d);
    static Value text(std::string chars);

    ValueType type() const;
    bool isNumeric() const { return type() == ValueType::Integer || type() == ValueType::Decimal; }

    int64_t asInteger() const { return std::get<1>(rep_); }
    const Decimal& asDecimal() const { return std::get<2>(rep_); }
    // Symbol name or text contents.
    const std::string& asString() const;

    // Structural identity: (type, payload). This is the identity used for
    // fact sets and substitutions; 5 and 5.0 are distinct values here.
    friend bool operator==(const Value& a, const Value& b) { return a.rep_ == b.rep_; }

    // Total order for deterministic containers: type rank, then payload
    // (numeric within a type, bytewise for strings).
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

    // Source/dump syntax: bare symbols, quoted text ('' escapes a quote),
    // plain integers, decimals always with a fraction part.
    std::string str() const;

    size_t hash() const;

private:
    // index order defines the cross-type sort rank
    std::variant<std::string, int64_t, Decimal, std::string> rep_;

    explicit Value(decltype(rep_) rep) : rep_(std::move(rep)) {}
};

std::ostream& operator<<(std::ostream& os, const Value& v);

enum class CmpOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

const char* toString(CmpOp op);

// Comparison semantics shared by rule bodies, queries and selection
// constraints:
//   - integer/decimal compare numerically with each other,
//   - text-text and symbol-symbol compare bytewise under every operator,
//   - = and != across incompatible types answer false resp. true,
//   - <, <=, >, >= across incompatible types raise ErrorKind::Data.
// `context` names the caller in the error message.
bool compareValues(CmpOp op, const Value& a, const Value& b, const std::string& context);

struct ValueHash {
    size_t operator()(const Value& v) const { return v.hash(); }
};

} // namespace rqa
