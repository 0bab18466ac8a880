#include "values.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace rqa {

const char* toString(ValueType t) {
    switch (t) {
        case ValueType::Symbol: return "symbol";
        case ValueType::Integer: return "integer";
        case ValueType::Decimal: return "decimal";
        case ValueType::Text: return "text";
    }
    return "?";
}

Decimal Decimal::make(int64_t digits, int32_t scale) {
    while (digits != 0 && digits % 10 == 0 && scale > 0) {
        digits /= 10;
        scale--;
    }
    if (digits == 0)
        scale = 0;
    return Decimal{digits, scale};
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    bool negative = false;
    size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        i++;
    }
    int64_t digits = 0;
    int32_t scale = 0;
    bool seenDot = false, seenDigit = false;
    for (; i < text.size(); i++) {
        char c = text[i];
        if (c == '.') {
            if (seenDot)
                return std::nullopt;
            seenDot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        seenDigit = true;
        if (digits > (INT64_MAX - 9) / 10)
            return std::nullopt;  // overflow
        digits = digits * 10 + (c - '0');
        if (seenDot)
            scale++;
        if (scale > 17)
            return std::nullopt;
    }
    if (!seenDigit)
        return std::nullopt;
    return make(negative ? -digits : digits, scale);
}

std::string Decimal::str() const {
    std::string ds = std::to_string(digits < 0 ? -digits : digits);
    std::string out = digits < 0 ? "-" : "";
    if (scale == 0)
        return out + ds + ".0";
    if (static_cast<int32_t>(ds.size()) <= scale)
        ds.insert(0, scale - ds.size() + 1, '0');
    ds.insert(ds.size() - scale, ".");
    return out + ds;
}

std::strong_ordering compareNumeric(const Decimal& a, const Decimal& b) {
    // Scale-align via 128-bit products; scales are capped at parse time.
    __int128 la = a.digits, lb = b.digits;
    for (int32_t s = a.scale; s < b.scale; s++) la *= 10;
    for (int32_t s = b.scale; s < a.scale; s++) lb *= 10;
    if (la < lb) return std::strong_ordering::less;
    if (la > lb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Value Value::symbol(std::string name) { return Value(decltype(rep_){std::in_place_index<0>, std::move(name)}); }
Value Value::integer(int64_t v) { return Value(decltype(rep_){std::in_place_index<1>, v}); }
Value Value::decimal(Decimal d) { return Value(decltype(rep_){std::in_place_index<2>, d}); }
Value Value::text(std::string chars) { return Value(decltype(rep_){std::in_place_index<3>, std::move(chars)}); }

ValueType Value::type() const {
    switch (rep_.index()) {
        case 0: return ValueType::Symbol;
        case 1: return ValueType::Integer;
        case 2: return ValueType::Decimal;
        default: return ValueType::Text;
    }
}

const std::string& Value::asString() const {
    return rep_.index() == 0 ? std::get<0>(rep_) : std::get<3>(rep_);
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.rep_.index() != b.rep_.index())
        return a.rep_.index() <=> b.rep_.index();
    switch (a.rep_.index()) {
        case 0: return std::get<0>(a.rep_) <=> std::get<0>(b.rep_);
        case 1: return std::get<1>(a.rep_) <=> std::get<1>(b.rep_);
        case 2: return compareNumeric(std::get<2>(a.rep_), std::get<2>(b.rep_));
        default: return std::get<3>(a.rep_) <=> std::get<3>(b.rep_);
    }
}

std::string Value::str() const {
    switch (rep_.index()) {
        case 0: return std::get<0>(rep_);
        case 1: return std::to_string(std::get<1>(rep_));
        case 2: return std::get<2>(rep_).str();
        default: {
            std::string out = "'";
            for (char c : std::get<3>(rep_)) {
                out += c;
                if (c == '\'')
                    out += '\'';
            }
            out += '\'';
            return out;
        }
    }
}

size_t Value::hash() const {
    size_t h = rep_.index();
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    switch (rep_.index()) {
        case 0: mix(std::hash<std::string>{}(std::get<0>(rep_))); break;
        case 1: mix(std::hash<int64_t>{}(std::get<1>(rep_))); break;
        case 2:
            mix(std::hash<int64_t>{}(std::get<2>(rep_).digits));
            mix(std::hash<int32_t>{}(std::get<2>(rep_).scale));
            break;
        default: mix(std::hash<std::string>{}(std::get<3>(rep_))); break;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

const char* toString(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

namespace {

std::strong_ordering orderWithin(const Value& a, const Value& b, const std::string& context) {
    if (a.isNumeric() && b.isNumeric()) {
        Decimal da = a.type() == ValueType::Integer ? Decimal::make(a.asInteger(), 0) : a.asDecimal();
        Decimal db = b.type() == ValueType::Integer ? Decimal::make(b.asInteger(), 0) : b.asDecimal();
        return compareNumeric(da, db);
    }
    if (a.type() == b.type() && (a.type() == ValueType::Symbol || a.type() == ValueType::Text))
        return a.asString() <=> b.asString();
    throw Error(ErrorKind::Data, context + ": cannot order " + toString(a.type()) + " " +
                                     a.str() + " against " + toString(b.type()) + " " + b.str());
}

} // namespace

bool compareValues(CmpOp op, const Value& a, const Value& b, const std::string& context) {
    bool comparable = (a.isNumeric() && b.isNumeric()) || a.type() == b.type();
    if (op == CmpOp::Eq)
        return comparable && orderWithin(a, b, context) == std::strong_ordering::equal;
    if (op == CmpOp::Ne)
        return !comparable || orderWithin(a, b, context) != std::strong_ordering::equal;
    auto ord = orderWithin(a, b, context);
    switch (op) {
        case CmpOp::Lt: return ord < 0;
        case CmpOp::Le: return ord <= 0;
        case CmpOp::Gt: return ord > 0;
        case CmpOp::Ge: return ord >= 0;
        default: return false;
    }
}

} // namespace rqa
