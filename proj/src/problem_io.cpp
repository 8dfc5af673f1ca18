#include "alldiff/problem_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace alldiff::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string join_errors(const std::vector<ModelError>& errors) {
    std::string out = "invalid problem";
    for (const auto& e : errors) out += "\n  " + to_string(e);
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ModelError> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

namespace {

enum class Tok { Name, Int, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        const std::size_t start_line = line;
        const std::size_t start_col = column;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Name, std::string(text.substr(i, j - i)), start_line, start_col});
            advance(j - i);
            continue;
        }
        const bool signed_int = (ch == '-' || ch == '+') && i + 1 < text.size() &&
                                std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
                                !out.empty() && out.back().kind == Tok::Punct &&
                                out.back().text != ")";
        if (std::isdigit(static_cast<unsigned char>(ch)) || signed_int) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, std::string(text.substr(i, j - i)), start_line, start_col});
            advance(j - i);
            continue;
        }
        if (std::string_view("[]{}(),:=+-").find(ch) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, ch), start_line, start_col});
            advance(1);
            continue;
        }
        throw ParseError(start_line, start_col, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({Tok::End, "", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Problem parse() {
        while (peek().kind != Tok::End) {
            const Token& t = next();
            if (t.kind == Tok::Name && t.text == "var") {
                parse_var();
            } else if (t.kind == Tok::Name && t.text == "alldifferent") {
                parse_alldifferent();
            } else {
                fail(t, "expected 'var' or 'alldifferent', found " + describe(t));
            }
        }
        if (problem_.n == 0) fail(peek(), "no variables declared");
        problem_.domains = DomainStore(std::move(domains_));
        if (auto errors = validate(problem_); !errors.empty()) throw ValidationError(errors);
        return std::move(problem_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] static void fail(const Token& t, const std::string& message) {
        throw ParseError(t.line, t.column, message);
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    }

    void expect(std::string_view punct) {
        const Token& t = next();
        if (t.kind != Tok::Punct || t.text != punct) {
            fail(t, "expected '" + std::string(punct) + "', found " + describe(t));
        }
    }

    bool accept(std::string_view punct) {
        if (peek().kind == Tok::Punct && peek().text == punct) {
            next();
            return true;
        }
        return false;
    }

    Value parse_int() {
        const Token& t = next();
        if (t.kind != Tok::Int) fail(t, "expected an integer, found " + describe(t));
        Value v = 0;
        const char* first = t.text.data() + (t.text[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "integer out of range: " + t.text);
        }
        return v;
    }

    const Token& parse_name() {
        const Token& t = next();
        if (t.kind != Tok::Name) fail(t, "expected a name, found " + describe(t));
        return t;
    }

    VariableId lookup(const Token& t) const {
        auto it = ids_.find(t.text);
        if (it == ids_.end()) fail(t, "undeclared variable '" + t.text + "'");
        return it->second;
    }

    Domain parse_domain() {
        const Token& open = peek();
        if (accept("[")) {
            Value lo = parse_int();
            expect(",");
            Value hi = parse_int();
            expect("]");
            if (lo <= hi && span_of(lo, hi) >= kMaxRangeValues) {
                fail(open, "range [" + std::to_string(lo) + "," + std::to_string(hi) +
                               "] expands to too many values");
            }
            return Domain::range(lo, hi);
        }
        if (accept("{")) {
            std::vector<Value> values;
            if (!accept("}")) {
                do {
                    values.push_back(parse_int());
                } while (accept(","));
                expect("}");
            }
            return Domain(std::move(values));
        }
        fail(open, "expected '[' or '{' to start a domain, found " + describe(open));
    }

    void parse_var() {
        const Token& name = parse_name();
        if (name.text == "var" || name.text == "alldifferent") {
            fail(name, "'" + name.text + "' is a keyword");
        }
        if (ids_.count(name.text)) fail(name, "variable '" + name.text + "' declared twice");

        std::optional<Domain> domain;
        if (accept(":")) domain = parse_domain();
        std::optional<OffsetChannel> channel;
        if (accept("=")) {
            const VariableId base = lookup(parse_name());
            Value sign = 1;
            if (accept("-")) {
                sign = -1;
            } else {
                expect("+");
            }
            const Value offset = sign * parse_int();
            channel = OffsetChannel{base, VariableId{problem_.n}, offset};
            if (!domain) domain = domains_[base.index].shifted(offset);
        }
        if (!domain) fail(peek(), "expected ':' or '=' after variable name");

        const VariableId id{problem_.n++};
        ids_.emplace(name.text, id);
        problem_.names.push_back(name.text);
        domains_.push_back(std::move(*domain));
        if (channel) problem_.channels.push_back(*channel);
    }

    void parse_alldifferent() {
        expect("(");
        AllDifferentConstraint c;
        if (!accept(")")) {
            do {
                c.vars.push_back(lookup(parse_name()));
            } while (accept(","));
            expect(")");
        }
        problem_.constraints.push_back(std::move(c));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Problem problem_;
    std::vector<Domain> domains_;
    std::unordered_map<std::string, VariableId> ids_;
};

void write_domain(std::ostream& os, const Domain& d) {
    if (d.size() >= 2 && d.is_contiguous()) {
        os << '[' << d.min() << ',' << d.max() << ']';
        return;
    }
    os << to_string(d);
}

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string serialize_problem(const Problem& p) {
    std::vector<const OffsetChannel*> channel_of(p.n, nullptr);
    for (const auto& ch : p.channels) channel_of[ch.derived.index] = &ch;

    std::ostringstream os;
    for (std::size_t i = 0; i < p.n; ++i) {
        const VariableId v{i};
        os << "var " << p.name_of(v) << " : ";
        write_domain(os, p.domains[v]);
        if (const auto* ch = channel_of[i]) {
            os << " = " << p.name_of(ch->base) << (ch->offset < 0 ? " - " : " + ");
            if (ch->offset < 0) {
                os << (0 - static_cast<std::uint64_t>(ch->offset));
            } else {
                os << ch->offset;
            }
        }
        os << '\n';
    }
    for (const auto& c : p.constraints) {
        os << "alldifferent(";
        for (std::size_t k = 0; k < c.vars.size(); ++k) {
            if (k) os << ", ";
            os << p.name_of(c.vars[k]);
        }
        os << ")\n";
    }
    return os.str();
}

}  // namespace alldiff::io
