// Copyright 2026 The ADQC Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adqc/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <set>

namespace adqc {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Number, Punct, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += static_cast<int>(n);
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            out.push_back({Tok::Newline, "\\n", line, col});
            ++i;
            ++line;
            col = 1;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            std::string buf(text.substr(i, std::min<std::size_t>(64, text.size() - i)));
            char* end = nullptr;
            std::strtod(buf.c_str(), &end);
            std::size_t len = static_cast<std::size_t>(end - buf.c_str());
            if (len == 0) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            out.push_back({Tok::Number, buf.substr(0, len), line, col});
            advance(len);
        } else if (c == '{' || c == '}' || c == '[' || c == ']' || c == ':' || c == ';' || c == ',') {
            out.push_back({Tok::Punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    out.push_back({Tok::End, "end of input", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const ParseOptions& opts) : toks_(std::move(toks)), opts_(opts) {}

    Pattern run() {
        Pattern p;
        skip_newlines();
        expect_word("pattern");
        p.name = expect(Tok::Ident, "pattern name").text;
        expect_punct("{");
        skip_newlines();
        expect_word("system");
        expect_punct(":");
        p.systems = id_list();
        expect_punct(";");
        skip_newlines();
        expect_word("ancilla");
        expect_punct(":");
        p.ancillas = id_list();
        expect_punct(";");
        skip_newlines();
        for (const auto* list : {&p.systems, &p.ancillas}) {
            for (const auto& q : *list) {
                if (!declared_.insert(q).second) throw ParseError("duplicate declaration of '" + q + "'", decl_line_, 1);
            }
        }
        expect_word("commands");
        expect_punct(":");
        for (;;) {
            skip_newlines();
            if (peek().kind == Tok::Punct && peek().text == "}") break;
            p.commands.push_back(command());
            if (peek().kind != Tok::Newline && !(peek().kind == Tok::Punct && peek().text == "}")) {
                fail("expected end of line");
            }
        }
        expect_punct("}");
        skip_newlines();
        if (peek().kind != Tok::End) fail("trailing input after pattern");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (found '" + peek().text + "')", peek().line, peek().column);
    }

    void skip_newlines() {
        while (peek().kind == Tok::Newline) ++pos_;
    }

    const Token& expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        return next();
    }

    void expect_word(const std::string& w) {
        if (peek().kind != Tok::Ident || peek().text != w) fail("expected '" + w + "'");
        next();
    }

    void expect_punct(const std::string& w) {
        if (peek().kind != Tok::Punct || peek().text != w) fail("expected '" + w + "'");
        next();
    }

    bool at_punct(const char* w) const { return peek().kind == Tok::Punct && peek().text == w; }

    std::vector<QubitId> id_list() {
        decl_line_ = peek().line;
        std::vector<QubitId> out;
        if (peek().kind != Tok::Ident) return out;
        out.push_back(next().text);
        while (at_punct(",")) {
            next();
            out.push_back(expect(Tok::Ident, "qubit name").text);
        }
        return out;
    }

    QubitId qubit() {
        const Token& t = expect(Tok::Ident, "qubit name");
        if (!declared_.count(t.text)) throw ParseError("unknown qubit '" + t.text + "'", t.line, t.column);
        return t.text;
    }

    double number() {
        const Token& t = expect(Tok::Number, "angle");
        return std::strtod(t.text.c_str(), nullptr) * opts_.angle_scale;
    }

    Signal signal_body() {
        expect_punct("[");
        Signal s;
        if (!at_punct("]")) {
            s.toggle(qubit());
            while (at_punct(",")) {
                next();
                s.toggle(qubit());
            }
        }
        expect_punct("]");
        return s;
    }

    // Optional "<tag>[...]" after a measurement.
    Signal tagged_signal(const char* tag) {
        if (peek().kind == Tok::Ident && peek().text == tag && pos_ + 1 < toks_.size() &&
            toks_[pos_ + 1].kind == Tok::Punct && toks_[pos_ + 1].text == "[") {
            next();
            return signal_body();
        }
        return {};
    }

    Command command() {
        const Token op = expect(Tok::Ident, "command");
        if (op.text == "N") {
            cmd::Prep c{qubit()};
            if (peek().kind == Tok::Number) {
                c.theta = number();
                c.phi = number();
            }
            return c;
        }
        if (op.text == "E") {
            QubitId a = qubit();
            return cmd::Interact{a, qubit()};
        }
        if (op.text == "M") {
            cmd::Measure m;
            m.q = qubit();
            const Token& pl = expect(Tok::Ident, "measurement plane");
            if (pl.text == "XY") {
                m.plane = Plane::XY;
            } else if (pl.text == "XZ") {
                m.plane = Plane::XZ;
            } else if (pl.text == "YZ") {
                m.plane = Plane::YZ;
            } else {
                throw ParseError("unknown measurement plane '" + pl.text + "'", pl.line, pl.column);
            }
            m.angle = normalize_angle(number());
            m.s = tagged_signal("s");
            m.t = tagged_signal("t");
            return m;
        }
        if (op.text == "X" || op.text == "Z") {
            cmd::Correct c{qubit(), op.text == "X" ? cmd::Axis::X : cmd::Axis::Z, {}};
            if (at_punct("[")) c.signal = signal_body();
            return c;
        }
        if (op.text == "S") {
            cmd::Shift c{qubit(), {}};
            c.signal = signal_body();
            return c;
        }
        if (op.text == "H") return cmd::LocalClifford{qubit(), cmd::CliffordKind::H, 0.0};
        if (op.text == "P") {
            QubitId q = qubit();
            return cmd::LocalClifford{q, cmd::CliffordKind::P, number()};
        }
        throw ParseError("unknown command '" + op.text + "'", op.line, op.column);
    }

    std::vector<Token> toks_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    std::set<QubitId> declared_;
    int decl_line_ = 1;
};

std::string join(const std::vector<QubitId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += ids[i];
    }
    return out;
}

}  // namespace

Pattern parse_pattern(std::string_view text, const ParseOptions& opts) { return Parser(lex(text), opts).run(); }

std::string print_pattern(const Pattern& p) {
    std::string out = "# commands are listed in execution order (top line runs first)\n";
    out += "pattern " + p.name + " {\n";
    out += "  system: " + join(p.systems) + ";\n";
    out += "  ancilla: " + join(p.ancillas) + ";\n";
    out += "  commands:\n";
    for (const auto& c : p.commands) out += "    " + describe(c) + "\n";
    out += "}\n";
    return out;
}

}  // namespace adqc
