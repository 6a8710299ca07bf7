#include "nested/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace nested {

LineCol line_col(std::string_view text, std::size_t offset) {
    LineCol lc;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++lc.line;
            lc.column = 1;
        } else {
            ++lc.column;
        }
    }
    return lc;
}

std::string render_diagnostic(std::string_view text, const Diagnostic& d) {
    const LineCol lc = line_col(text, d.offset);
    std::ostringstream out;
    out << lc.line << ":" << lc.column << ": "
        << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message;
    return out.str();
}

namespace {

enum class Tok { Ident, Int, Addr, LBrace, RBrace, Semi, Equals, End, Bad };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::size_t length = 0;
    std::string text;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           c == ':' || c == '(' || c == ')';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
        Token t;
        t.offset = pos;
        if (pos >= text.size()) {
            t.length = 0;
            tokens.push_back(t);
            return tokens;
        }
        const char c = text[pos];
        if (c == '{' || c == '}' || c == ';' || c == '=') {
            t.kind = c == '{' ? Tok::LBrace
                   : c == '}' ? Tok::RBrace
                   : c == ';' ? Tok::Semi
                              : Tok::Equals;
            t.length = 1;
            t.text = std::string(1, c);
            ++pos;
            tokens.push_back(std::move(t));
            continue;
        }
        if (!is_word_char(c)) {
            t.kind = Tok::Bad;
            t.length = 1;
            t.text = std::string(1, c);
            ++pos;
            tokens.push_back(std::move(t));
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && is_word_char(text[end])) ++end;
        t.length = end - pos;
        t.text = std::string(text.substr(pos, end - pos));
        pos = end;
        const bool has_addr_char = t.text.find_first_of(".()") != std::string::npos;
        const bool all_digits =
            std::all_of(t.text.begin(), t.text.end(),
                        [](char ch) { return ch >= '0' && ch <= '9'; });
        if (has_addr_char) {
            t.kind = Tok::Addr;
        } else if (all_digits) {
            t.kind = Tok::Int;
        } else if ((std::isalpha(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_') &&
                   t.text.find(':') == std::string::npos) {
            t.kind = Tok::Ident;
        } else {
            t.kind = Tok::Bad;
        }
        tokens.push_back(std::move(t));
    }
}

struct RawRule {
    Token left;
    Token right;
    Token keyword;
};

struct RawCorner {
    Token addr;
};

struct RawRestrict {
    bool left_side = true;
    Token value;
    Token keyword;
};

struct RawSpace {
    Token name;
    std::vector<std::pair<Token, Token>> parts; // (keyword, value)
    std::vector<RawRule> rules;
    std::vector<RawCorner> corners;
    std::vector<RawRestrict> restricts;
};

class Parser {
public:
    Parser(std::string_view text, std::vector<Diagnostic>& diags)
        : tokens_(tokenize(text)), diags_(diags) {}

    std::vector<RawSpace> parse() {
        std::vector<RawSpace> spaces;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Ident && peek().text == "space") {
                if (auto space = parse_space()) spaces.push_back(std::move(*space));
            } else {
                error(peek(), "expected 'space' declaration");
                advance();
                sync_to_space();
            }
        }
        return spaces;
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    std::vector<Diagnostic>& diags_;

    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }

    void error(const Token& at, const std::string& message, Errc code = Errc::SyntaxError) {
        diags_.push_back({Severity::Error, code, at.offset, std::max<std::size_t>(at.length, 1),
                          message});
    }

    bool expect(Tok kind, const char* what) {
        if (peek().kind == kind) {
            advance();
            return true;
        }
        error(peek(), std::string("expected ") + what);
        return false;
    }

    void sync_to_space() {
        while (peek().kind != Tok::End &&
               !(peek().kind == Tok::Ident && peek().text == "space"))
            advance();
    }

    // Skip to the end of the current item so one bad item yields one
    // diagnostic instead of a cascade.
    void sync_item() {
        while (peek().kind != Tok::Semi && peek().kind != Tok::RBrace &&
               peek().kind != Tok::End)
            advance();
        if (peek().kind == Tok::Semi) advance();
    }

    std::optional<Token> take(Tok kind, const char* what) {
        if (peek().kind == kind) {
            Token t = peek();
            advance();
            return t;
        }
        error(peek(), std::string("expected ") + what);
        return std::nullopt;
    }

    std::optional<RawSpace> parse_space() {
        advance(); // 'space'
        RawSpace space;
        auto name = take(Tok::Ident, "space name");
        if (!name) {
            sync_to_space();
            return std::nullopt;
        }
        space.name = *name;
        if (!expect(Tok::LBrace, "'{'")) {
            sync_to_space();
            return std::nullopt;
        }
        while (peek().kind != Tok::RBrace && peek().kind != Tok::End) parse_item(space);
        if (!expect(Tok::RBrace, "'}'")) return std::nullopt;
        return space;
    }

    void parse_item(RawSpace& space) {
        if (peek().kind != Tok::Ident) {
            error(peek(), "expected item (parts, rule, corner, restrict)");
            sync_item();
            return;
        }
        const Token keyword = peek();
        if (keyword.text == "parts") {
            advance();
            auto value = take(Tok::Int, "part count");
            if (!value || !expect(Tok::Semi, "';'")) {
                sync_item();
                return;
            }
            space.parts.emplace_back(keyword, *value);
        } else if (keyword.text == "rule") {
            advance();
            auto left = take(Tok::Addr, "address literal");
            if (!left || !expect(Tok::Equals, "'='")) {
                sync_item();
                return;
            }
            auto right = take(Tok::Addr, "address literal");
            if (!right || !expect(Tok::Semi, "';'")) {
                sync_item();
                return;
            }
            space.rules.push_back({*left, *right, keyword});
        } else if (keyword.text == "corner") {
            advance();
            auto addr = take(Tok::Addr, "address literal");
            if (!addr || !expect(Tok::Semi, "';'")) {
                sync_item();
                return;
            }
            space.corners.push_back({*addr});
        } else if (keyword.text == "restrict") {
            advance();
            if (peek().kind != Tok::Ident ||
                (peek().text != "left" && peek().text != "right")) {
                error(peek(), "expected 'left' or 'right'");
                sync_item();
                return;
            }
            const bool left_side = peek().text == "left";
            advance();
            auto value = take(Tok::Int, "digit limit");
            if (!value || !expect(Tok::Semi, "';'")) {
                sync_item();
                return;
            }
            space.restricts.push_back({left_side, *value, keyword});
        } else {
            error(keyword, "unknown item '" + keyword.text + "'");
            advance();
            sync_item();
        }
    }
};

constexpr unsigned long kMaxParts = 1000000;

std::optional<unsigned long> parse_uint(const Token& t, unsigned long max_value,
                                        std::vector<Diagnostic>& diags,
                                        const std::string& what) {
    unsigned long v = 0;
    for (char c : t.text) {
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > max_value) {
            diags.push_back({Severity::Error, Errc::SyntaxError, t.offset, t.length,
                             what + " out of range (max " + std::to_string(max_value) + ")"});
            return std::nullopt;
        }
    }
    return v;
}

// Semantic pass over one parsed space; returns nullopt and appends
// diagnostics when invalid.
std::optional<SpaceSpec> analyze_space(const RawSpace& raw, std::vector<Diagnostic>& diags) {
    const std::size_t before = diags.size();

    if (raw.parts.empty()) {
        diags.push_back({Severity::Error, Errc::InvalidSpace, raw.name.offset,
                         raw.name.length, "space '" + raw.name.text + "' declares no parts"});
        return std::nullopt;
    }
    for (std::size_t i = 1; i < raw.parts.size(); ++i)
        diags.push_back({Severity::Error, Errc::InvalidSpace, raw.parts[i].first.offset,
                         raw.parts[i].first.length, "duplicate parts declaration"});
    auto n = parse_uint(raw.parts[0].second, kMaxParts, diags, "part count");
    if (!n) return std::nullopt;
    if (*n < 2) {
        diags.push_back({Severity::Error, Errc::InvalidSpace, raw.parts[0].second.offset,
                         raw.parts[0].second.length, "part count must be at least 2"});
        return std::nullopt;
    }
    const unsigned n_parts = static_cast<unsigned>(*n);

    std::optional<unsigned> left_limit;
    std::optional<unsigned> right_limit;
    for (const RawRestrict& r : raw.restricts) {
        auto value = parse_uint(r.value, 1000000, diags, "digit limit");
        if (!value) continue;
        auto& slot = r.left_side ? left_limit : right_limit;
        if (slot) {
            diags.push_back({Severity::Error, Errc::InvalidSpace, r.keyword.offset,
                             r.keyword.length, "duplicate restrict declaration"});
            continue;
        }
        if (r.left_side && *value < 1) {
            diags.push_back({Severity::Error, Errc::InvalidSpace, r.value.offset,
                             r.value.length, "left limit must be at least 1"});
            continue;
        }
        slot = static_cast<unsigned>(*value);
    }

    const auto parse_literal = [&](const Token& t) -> std::optional<Address> {
        try {
            return parse_address(t.text, n_parts);
        } catch (const Error& e) {
            diags.push_back({Severity::Error, e.code(), t.offset, t.length, e.what()});
            return std::nullopt;
        }
    };

    std::vector<std::pair<Address, Address>> raw_pairs;
    std::set<ConnectivityRule> seen;
    const auto add_pair = [&](const Address& a, const Address& b, const Token& at) {
        try {
            ConnectivityRule canon = canonicalize_rule(a, b, n_parts);
            if (right_limit &&
                (!side_fits_right_limit(canon.left) || !side_fits_right_limit(canon.right))) {
                diags.push_back({Severity::Error, Errc::ConflictingRestriction, at.offset,
                                 at.length,
                                 "rule tail has no instance within the right digit limit"});
                return;
            }
            if (!seen.insert(canon).second) {
                diags.push_back({Severity::Warning, Errc::SyntaxError, at.offset, at.length,
                                 "duplicate rule collapsed"});
                return;
            }
            raw_pairs.emplace_back(a, b);
        } catch (const Error& e) {
            diags.push_back({Severity::Error, e.code(), at.offset, at.length, e.what()});
        }
    };

    for (const RawRule& rule : raw.rules) {
        auto left = parse_literal(rule.left);
        auto right = parse_literal(rule.right);
        if (left && right) add_pair(*left, *right, rule.keyword);
    }
    for (const RawCorner& corner : raw.corners) {
        if (auto addr = parse_literal(corner.addr)) add_pair(*addr, *addr, corner.addr);
    }

    const bool failed = std::any_of(diags.begin() + static_cast<long>(before), diags.end(),
                                    [](const Diagnostic& d) {
                                        return d.severity == Severity::Error;
                                    });
    if (failed) return std::nullopt;

    try {
        return SpaceSpec::make(raw.name.text, n_parts, raw_pairs, left_limit, right_limit);
    } catch (const Error& e) {
        diags.push_back({Severity::Error, e.code(), raw.name.offset, raw.name.length,
                         e.what()});
        return std::nullopt;
    }
}

} // namespace

DocumentParse parse_document(std::string_view text) {
    DocumentParse result;
    Parser parser(text, result.diagnostics);
    for (const RawSpace& raw : parser.parse())
        if (auto spec = analyze_space(raw, result.diagnostics))
            result.spaces.push_back(std::move(*spec));
    return result;
}

SpaceSpec parse_spec(std::string_view text) {
    DocumentParse doc = parse_document(text);
    for (const Diagnostic& d : doc.diagnostics)
        if (d.severity == Severity::Error)
            throw Error(d.code, render_diagnostic(text, d));
    if (doc.spaces.empty())
        throw Error(Errc::SyntaxError, "no space declarations in document");
    return doc.spaces.front();
}

std::string format_spec(const SpaceSpec& spec) {
    std::ostringstream out;
    out << "space " << spec.name << " {\n";
    out << "  parts " << spec.n_parts << ";\n";
    for (const ConnectivityRule& rule : spec.rules)
        if (!rule.reflexive)
            out << "  rule " << format_rule_side(rule.left, spec.n_parts) << " = "
                << format_rule_side(rule.right, spec.n_parts) << ";\n";
    for (const ConnectivityRule& rule : spec.rules)
        if (rule.reflexive)
            out << "  corner " << format_rule_side(rule.left, spec.n_parts) << ";\n";
    if (spec.left_limit) out << "  restrict left " << *spec.left_limit << ";\n";
    if (spec.right_limit) out << "  restrict right " << *spec.right_limit << ";\n";
    out << "}\n";
    return out.str();
}

// -- builtin spaces ------------------------------------------------------------

namespace {

Address single_digit(Digit d) { return Address({d}, Tail::zero()); }

Address pure_tail(Digit d) { return Address({}, Tail::make({}, {d})); }

std::vector<std::pair<Address, Address>> real_line_pairs(unsigned n) {
    std::vector<std::pair<Address, Address>> pairs;
    for (Digit i = 0; i + 1 < n; ++i)
        pairs.emplace_back(Address({i}, Tail::make({}, {n - 1})), single_digit(i + 1));
    for (Digit i = 0; i < n; ++i) {
        pairs.emplace_back(single_digit(i), single_digit(i));
        const Address hi({i}, Tail::make({}, {n - 1}));
        pairs.emplace_back(hi, hi);
    }
    return pairs;
}

std::vector<std::pair<Address, Address>> gasket_pairs() {
    std::vector<std::pair<Address, Address>> pairs;
    for (Digit i = 0; i < 3; ++i)
        for (Digit j = 0; j < 3; ++j)
            pairs.emplace_back(Address({i}, Tail::make({}, {j})),
                               Address({j}, Tail::make({}, {i})));
    return pairs;
}

std::optional<unsigned> parse_builtin_arg(const std::string& name, std::string_view prefix) {
    if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
        return std::nullopt;
    unsigned long v = 0;
    for (std::size_t i = prefix.size() + 1; i + 1 < name.size(); ++i) {
        const char c = name[i];
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > kMaxParts) return std::nullopt;
    }
    return static_cast<unsigned>(v);
}

} // namespace

SpaceSpec builtin(const std::string& name) {
    if (name == "cantor") {
        std::vector<std::pair<Address, Address>> pairs;
        for (Digit i = 0; i < 2; ++i) {
            pairs.emplace_back(single_digit(i), single_digit(i));
            const Address hi({i}, Tail::make({}, {1}));
            pairs.emplace_back(hi, hi);
        }
        return SpaceSpec::make("cantor", 2, pairs);
    }
    if (name == "gasket") return SpaceSpec::make("gasket", 3, gasket_pairs());
    if (name == "gasket_compact")
        return SpaceSpec::make("gasket_compact", 3, gasket_pairs(), 1);
    if (name == "gasket_lattice")
        return SpaceSpec::make("gasket_lattice", 3, gasket_pairs(), std::nullopt, 0,
                               RestrictionPolicy::DropIncompatible);
    if (auto n = parse_builtin_arg(name, "real_line")) {
        if (*n < 2) throw Error(Errc::UnknownBuiltin, "real_line requires at least 2 parts");
        return SpaceSpec::make("real_line_" + std::to_string(*n), *n, real_line_pairs(*n));
    }
    if (auto n = parse_builtin_arg(name, "unit_interval")) {
        if (*n < 2)
            throw Error(Errc::UnknownBuiltin, "unit_interval requires at least 2 parts");
        return SpaceSpec::make("unit_interval_" + std::to_string(*n), *n,
                               real_line_pairs(*n), 1);
    }
    if (auto n = parse_builtin_arg(name, "naturals")) {
        if (*n < 2) throw Error(Errc::UnknownBuiltin, "naturals requires at least 2 parts");
        return SpaceSpec::make("naturals_" + std::to_string(*n), *n, real_line_pairs(*n),
                               std::nullopt, 0, RestrictionPolicy::DropIncompatible);
    }
    throw Error(Errc::UnknownBuiltin, "unknown builtin space '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "cantor",       "gasket",        "gasket_compact", "gasket_lattice",
        "real_line(N)", "unit_interval(N)", "naturals(N)",
    };
    return names;
}

} // namespace nested
