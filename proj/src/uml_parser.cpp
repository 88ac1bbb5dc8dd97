// Copyright 2026 The umlq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umlq/uml_parser.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

namespace umlq {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool has_quantum_stereotype(const std::vector<std::string>& stereotypes) {
    for (const auto& s : stereotypes) {
        if (s == "Quantum") return true;
    }
    return false;
}

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
    Ident,
    String,
    Stereotype,
    Number,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Less,
    Greater,
    Colon,
    Comma,
    Plus,
    Minus,
    Hash,
    Star,
    Slash,
    EqEq,
    Arrow,      // -->
    ThinArrow,  // ->
    Directive,  // @startuml / @enduml
    Newline,
    Eof,
    Invalid,
};

struct Token {
    Tok type = Tok::Eof;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::string describe(const Token& t) {
    switch (t.type) {
        case Tok::Eof:
            return "end of input";
        case Tok::Newline:
            return "end of line";
        case Tok::Stereotype:
            return "'<<" + t.text + ">>'";
        case Tok::String:
            return "\"" + t.text + "\"";
        default:
            return "'" + t.text + "'";
    }
}

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '.'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    Lexer(std::string_view src, bool newlines_significant)
        : src_(src), newlines_(newlines_significant) {}

    const Token& peek() {
        if (!cached_) {
            cache_ = lex();
            cached_ = true;
        }
        return cache_;
    }

    Token next() {
        peek();
        cached_ = false;
        return std::move(cache_);
    }

    bool accept(Tok type) {
        if (peek().type != type) return false;
        next();
        return true;
    }

    Token expect(Tok type, const std::string& what) {
        if (peek().type != type) fail(peek(), what);
        return next();
    }

    [[noreturn]] static void fail(const Token& at, const std::string& expected) {
        throw ParseError(at.line, at.column, expected, describe(at));
    }

    /// Raw text up to the end of the current line (comment stripped, trimmed).
    /// Only valid while no token is buffered.
    std::string rest_of_line() {
        std::string out;
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\'') {
            out.push_back(src_[pos_]);
            bump();
        }
        auto first = out.find_first_not_of(" \t\r");
        if (first == std::string::npos) return {};
        auto last = out.find_last_not_of(" \t\r");
        return out.substr(first, last - first + 1);
    }

private:
    char at(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                bump();
            } else if (c == '\'') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == '\n' && !newlines_) {
                bump();
            } else {
                break;
            }
        }
    }

    Token make(Tok type, std::string text, std::size_t line, std::size_t col) {
        return Token{type, std::move(text), line, col};
    }

    Token lex() {
        skip_trivia();
        const std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return make(Tok::Eof, "", line, col);
        const char c = src_[pos_];

        if (c == '\n') {
            bump();
            return make(Tok::Newline, "\\n", line, col);
        }
        if (is_ident_start(c)) {
            std::string text;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                text.push_back(src_[pos_]);
                bump();
            }
            return make(Tok::Ident, std::move(text), line, col);
        }
        if (is_digit(c) || (c == '.' && is_digit(at(1)))) {
            std::string text;
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '.')) {
                text.push_back(src_[pos_]);
                bump();
            }
            if (at() == 'e' || at() == 'E') {
                std::size_t k = 1;
                if (at(k) == '+' || at(k) == '-') ++k;
                if (is_digit(at(k))) {
                    for (std::size_t i = 0; i < k; ++i) {
                        text.push_back(src_[pos_]);
                        bump();
                    }
                    while (pos_ < src_.size() && is_digit(src_[pos_])) {
                        text.push_back(src_[pos_]);
                        bump();
                    }
                }
            }
            return make(Tok::Number, std::move(text), line, col);
        }
        if (c == '"') {
            bump();
            std::string text;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                text.push_back(src_[pos_]);
                bump();
            }
            if (at() != '"') throw ParseError(line, col, "closing '\"'", "end of line");
            bump();
            return make(Tok::String, std::move(text), line, col);
        }
        if (c == '<' && at(1) == '<') {
            bump();
            bump();
            std::string text;
            while (pos_ < src_.size() && !(src_[pos_] == '>' && at(1) == '>') && src_[pos_] != '\n') {
                text.push_back(src_[pos_]);
                bump();
            }
            if (!(at() == '>' && at(1) == '>')) throw ParseError(line, col, "closing '>>'", "end of line");
            bump();
            bump();
            return make(Tok::Stereotype, std::move(text), line, col);
        }
        if (c == '-' && at(1) == '-' && at(2) == '>') {
            bump();
            bump();
            bump();
            return make(Tok::Arrow, "-->", line, col);
        }
        if (c == '-' && at(1) == '>') {
            bump();
            bump();
            return make(Tok::ThinArrow, "->", line, col);
        }
        if (c == '=' && at(1) == '=') {
            bump();
            bump();
            return make(Tok::EqEq, "==", line, col);
        }
        if (c == '@') {
            std::string text;
            bump();
            text.push_back('@');
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                text.push_back(src_[pos_]);
                bump();
            }
            if (text != "@startuml" && text != "@enduml") {
                return make(Tok::Invalid, std::move(text), line, col);
            }
            return make(Tok::Directive, std::move(text), line, col);
        }

        Tok type = Tok::Invalid;
        switch (c) {
            case '{': type = Tok::LBrace; break;
            case '}': type = Tok::RBrace; break;
            case '(': type = Tok::LParen; break;
            case ')': type = Tok::RParen; break;
            case '[': type = Tok::LBracket; break;
            case ']': type = Tok::RBracket; break;
            case '<': type = Tok::Less; break;
            case '>': type = Tok::Greater; break;
            case ':': type = Tok::Colon; break;
            case ',': type = Tok::Comma; break;
            case '+': type = Tok::Plus; break;
            case '-': type = Tok::Minus; break;
            case '#': type = Tok::Hash; break;
            case '*': type = Tok::Star; break;
            case '/': type = Tok::Slash; break;
            default: break;
        }
        bump();
        return make(type, std::string(1, c), line, col);
    }

    std::string_view src_;
    bool newlines_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token cache_;
    bool cached_ = false;
};

// ---------------------------------------------------------------------------
// Class diagrams

class ClassParser {
public:
    explicit ClassParser(std::string_view src) : lex_(src, false) {}

    ClassModel parse() {
        ClassModel model;
        parse_scope(model.packages, model.classes, nullptr);
        check_associations(model);
        // associations declared inside packages are hoisted to the model
        model.associations = std::move(associations_);
        return model;
    }

private:
    struct PendingEndpoint {
        std::string name;
        std::size_t line;
        std::size_t column;
    };

    // `opener` is the '{' of the enclosing package, or null at top level.
    void parse_scope(std::vector<PackageNode>& packages, std::vector<ClassNode>& classes, const Token* opener) {
        std::set<std::string> names;
        for (;;) {
            const Token& t = lex_.peek();
            if (t.type == Tok::Eof) {
                if (opener != nullptr) {
                    throw ParseError(opener->line, opener->column, "'}' closing this '{'", "end of input");
                }
                return;
            }
            if (t.type == Tok::RBrace) {
                if (opener == nullptr) Lexer::fail(t, "a declaration (unbalanced '}')");
                lex_.next();
                return;
            }
            if (t.type == Tok::Directive) {
                if (opener != nullptr) Lexer::fail(t, "a declaration");
                lex_.next();
                continue;
            }
            if (t.type != Tok::Ident) Lexer::fail(t, "'package', 'class' or an association");

            Token head = lex_.next();
            if (head.text == "package") {
                PackageNode pkg = parse_package(names);
                packages.push_back(std::move(pkg));
            } else if (head.text == "class") {
                ClassNode cls = parse_class(names);
                classes.push_back(std::move(cls));
            } else if (lex_.peek().type == Tok::Arrow) {
                parse_association(head);
            } else {
                throw ParseError(head.line, head.column, "'package', 'class' or an association",
                                 "unknown keyword '" + head.text + "'");
            }
        }
    }

    Token declare(std::set<std::string>& names, const std::string& what) {
        Token name = lex_.expect(Tok::Ident, what + " name");
        if (!names.insert(name.text).second) {
            throw ParseError(name.line, name.column, "unique " + what + " name",
                             "duplicate declaration '" + name.text + "'");
        }
        return name;
    }

    std::vector<std::string> stereotypes() {
        std::vector<std::string> out;
        while (lex_.peek().type == Tok::Stereotype) out.push_back(lex_.next().text);
        return out;
    }

    PackageNode parse_package(std::set<std::string>& names) {
        PackageNode pkg;
        pkg.name = declare(names, "package").text;
        pkg.stereotypes = stereotypes();
        Token open = lex_.expect(Tok::LBrace, "'{'");
        parse_scope(pkg.packages, pkg.classes, &open);
        return pkg;
    }

    ClassNode parse_class(std::set<std::string>& names) {
        ClassNode cls;
        cls.name = declare(names, "class").text;
        cls.stereotypes = stereotypes();
        if (lex_.peek().type != Tok::LBrace) return cls;
        Token open = lex_.next();
        std::set<std::string> members;
        for (;;) {
            const Token& t = lex_.peek();
            if (t.type == Tok::RBrace) {
                lex_.next();
                return cls;
            }
            if (t.type == Tok::Eof) {
                throw ParseError(open.line, open.column, "'}' closing this '{'", "end of input");
            }
            parse_member(cls, members);
        }
    }

    void parse_member(ClassNode& cls, std::set<std::string>& members) {
        Visibility vis = Visibility::Unspecified;
        if (lex_.accept(Tok::Plus)) {
            vis = Visibility::Public;
        } else if (lex_.accept(Tok::Minus)) {
            vis = Visibility::Private;
        } else if (lex_.accept(Tok::Hash)) {
            vis = Visibility::Protected;
        }
        Token name = lex_.expect(Tok::Ident, "member name");
        if (!members.insert(name.text).second) {
            throw ParseError(name.line, name.column, "unique member name",
                             "duplicate declaration '" + name.text + "'");
        }
        if (lex_.accept(Tok::LParen)) {
            OperationNode op;
            op.name = name.text;
            op.visibility = vis;
            if (!lex_.accept(Tok::RParen)) {
                for (;;) {
                    ParameterNode p;
                    p.name = lex_.expect(Tok::Ident, "parameter name").text;
                    lex_.expect(Tok::Colon, "':' before parameter type");
                    p.type = parse_type();
                    op.params.push_back(std::move(p));
                    if (lex_.accept(Tok::RParen)) break;
                    lex_.expect(Tok::Comma, "',' or ')'");
                }
            }
            if (lex_.accept(Tok::Colon)) op.return_type = parse_type();
            cls.operations.push_back(std::move(op));
        } else {
            AttributeNode attr;
            attr.name = name.text;
            attr.visibility = vis;
            if (lex_.accept(Tok::Colon)) attr.type = parse_type();
            cls.attributes.push_back(std::move(attr));
        }
    }

    std::string parse_type() {
        std::string text = lex_.expect(Tok::Ident, "type name").text;
        if (lex_.accept(Tok::Less)) {
            text += '<';
            for (;;) {
                text += parse_type();
                if (lex_.accept(Tok::Greater)) break;
                lex_.expect(Tok::Comma, "',' or '>'");
                text += ',';
            }
            text += '>';
        }
        while (lex_.accept(Tok::LBracket)) {
            lex_.expect(Tok::RBracket, "']'");
            text += "[]";
        }
        return text;
    }

    void parse_association(const Token& source) {
        lex_.expect(Tok::Arrow, "'-->'");
        Token target = lex_.expect(Tok::Ident, "association target class");
        AssociationNode assoc{source.text, target.text, {}};
        if (lex_.peek().type == Tok::Colon) {
            lex_.next();
            assoc.label = lex_.rest_of_line();
        }
        endpoints_.push_back({source.text, source.line, source.column});
        endpoints_.push_back({target.text, target.line, target.column});
        associations_.push_back(std::move(assoc));
    }

    static void collect(const std::vector<PackageNode>& pkgs, const std::vector<ClassNode>& classes,
                        std::set<std::string>& out) {
        for (const auto& c : classes) out.insert(c.name);
        for (const auto& p : pkgs) collect(p.packages, p.classes, out);
    }

    void check_associations(const ClassModel& model) const {
        std::set<std::string> declared;
        collect(model.packages, model.classes, declared);
        for (const auto& e : endpoints_) {
            if (!declared.count(e.name)) {
                throw ParseError(e.line, e.column, "a declared class", "undeclared class '" + e.name + "'");
            }
        }
    }

    Lexer lex_;
    std::vector<AssociationNode> associations_;
    std::vector<PendingEndpoint> endpoints_;
};

// ---------------------------------------------------------------------------
// Sequence diagrams

class SequenceParser {
public:
    explicit SequenceParser(std::string_view src) : lex_(src, true) {}

    SequenceModel parse() {
        parse_block(model_.events, nullptr);
        return std::move(model_);
    }

private:
    void end_of_line() {
        const Token& t = lex_.peek();
        if (t.type == Tok::Eof) return;
        lex_.expect(Tok::Newline, "end of line");
    }

    const Participant* find(const std::string& alias) const {
        for (const auto& p : model_.participants) {
            if (p.alias == alias) return &p;
        }
        return nullptr;
    }

    const Participant& resolve(const Token& t) const {
        const Participant* p = find(t.text);
        if (p == nullptr) throw ParseError(t.line, t.column, "a declared participant alias", "'" + t.text + "'");
        return *p;
    }

    // `opener` is the `group`/`alt` keyword of the enclosing block, or null at top level.
    void parse_block(std::vector<EventNode>& events, const Token* opener) {
        for (;;) {
            if (lex_.accept(Tok::Newline)) continue;
            const Token& t = lex_.peek();
            if (t.type == Tok::Eof) {
                if (opener != nullptr) {
                    throw ParseError(opener->line, opener->column, "'end' closing this '" + opener->text + "'",
                                     "end of input");
                }
                return;
            }
            if (t.type == Tok::Directive) {
                if (opener != nullptr) Lexer::fail(t, "a message or 'end'");
                lex_.next();
                end_of_line();
                continue;
            }
            if (t.type != Tok::Ident) Lexer::fail(t, "'participant', 'group', 'alt' or a message");

            Token head = lex_.next();
            if (head.text == "end") {
                if (opener == nullptr) {
                    throw ParseError(head.line, head.column, "a statement", "'end' without 'group' or 'alt'");
                }
                end_of_line();
                return;
            }
            if (head.text == "participant") {
                if (opener != nullptr) Lexer::fail(head, "a message or 'end'");
                parse_participant();
            } else if (head.text == "group") {
                events.push_back(EventNode{parse_group(head)});
            } else if (head.text == "alt") {
                events.push_back(EventNode{parse_alt(head)});
            } else if (lex_.peek().type == Tok::ThinArrow) {
                events.push_back(EventNode{parse_message(head, false)});
            } else {
                throw ParseError(head.line, head.column, "'participant', 'group', 'alt' or a message",
                                 "unknown keyword '" + head.text + "'");
            }
        }
    }

    void parse_participant() {
        Participant p;
        const Token& nt = lex_.peek();
        if (nt.type == Tok::String || nt.type == Tok::Ident) {
            p.name = lex_.next().text;
        } else {
            Lexer::fail(nt, "participant name");
        }
        Token as = lex_.expect(Tok::Ident, "'as'");
        if (as.text != "as") Lexer::fail(as, "'as'");
        Token alias = lex_.expect(Tok::Ident, "participant alias");
        if (find(alias.text) != nullptr) {
            throw ParseError(alias.line, alias.column, "unique participant alias",
                             "duplicate declaration '" + alias.text + "'");
        }
        p.alias = alias.text;
        const Token& st = lex_.peek();
        if (st.type != Tok::Stereotype) Lexer::fail(st, "<<qubit>> or <<classical_bit>>");
        if (st.text == "qubit") {
            p.kind = ParticipantKind::Qubit;
        } else if (st.text == "classical_bit") {
            p.kind = ParticipantKind::ClassicalBit;
        } else {
            Lexer::fail(st, "<<qubit>> or <<classical_bit>>");
        }
        lex_.next();
        end_of_line();
        model_.participants.push_back(std::move(p));
    }

    double parse_atom() {
        const Token& t = lex_.peek();
        if (t.type == Tok::Number) {
            Token num = lex_.next();
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
            if (ec != std::errc{} || ptr != num.text.data() + num.text.size()) {
                Lexer::fail(num, "a real literal");
            }
            return v;
        }
        if (t.type == Tok::Ident && t.text == "pi") {
            lex_.next();
            return std::numbers::pi;
        }
        Lexer::fail(t, "a real literal");
    }

    double parse_real() {
        double sign = 1.0;
        if (lex_.accept(Tok::Minus)) {
            sign = -1.0;
        } else {
            lex_.accept(Tok::Plus);
        }
        double v = parse_atom();
        for (;;) {
            if (lex_.accept(Tok::Star)) {
                v *= parse_atom();
            } else if (lex_.accept(Tok::Slash)) {
                v /= parse_atom();
            } else {
                break;
            }
        }
        return sign * v;
    }

    std::vector<double> parse_params() {
        std::vector<double> out;
        if (!lex_.accept(Tok::LParen)) return out;
        if (lex_.accept(Tok::RParen)) return out;
        for (;;) {
            out.push_back(parse_real());
            if (lex_.accept(Tok::RParen)) return out;
            lex_.expect(Tok::Comma, "',' or ')'");
        }
    }

    MessageNode parse_message(const Token& sender_tok, bool in_group) {
        const Participant& sender = resolve(sender_tok);
        lex_.expect(Tok::ThinArrow, "'->'");
        Token receiver_tok = lex_.expect(Tok::Ident, "receiver alias");
        const Participant& receiver = resolve(receiver_tok);

        MessageNode msg;
        msg.sender = sender.alias;
        msg.receiver = receiver.alias;
        Token name_tok = receiver_tok;
        if (lex_.accept(Tok::Colon)) {
            for (;;) {
                const Token& t = lex_.peek();
                if (t.type == Tok::Stereotype) {
                    if (t.text == "control") {
                        msg.control = true;
                    } else if (t.text == "controlled") {
                        msg.controlled = true;
                    } else {
                        Lexer::fail(t, "<<control>> or <<controlled>>");
                    }
                    lex_.next();
                } else if (t.type == Tok::Ident && msg.name.empty()) {
                    name_tok = lex_.next();
                    msg.name = name_tok.text;
                    msg.params = parse_params();
                } else {
                    break;
                }
            }
        }
        end_of_line();

        if (sender.alias == receiver.alias) {
            msg.kind = MessageKind::SelfMessage;
        } else if (sender.kind == ParticipantKind::Qubit && receiver.kind == ParticipantKind::ClassicalBit &&
                   msg.name == "measure") {
            msg.kind = MessageKind::Measure;
            if (!msg.params.empty()) Lexer::fail(name_tok, "'measure' without parameters");
        } else {
            msg.kind = MessageKind::Cross;
        }
        if (!in_group && msg.name.empty()) {
            throw ParseError(sender_tok.line, sender_tok.column, "a message name after ':'",
                             "message without a name");
        }
        return msg;
    }

    GroupNode parse_group(const Token& head) {
        GroupNode group;
        group.name = lex_.expect(Tok::Ident, "group name").text;
        group.params = parse_params();
        end_of_line();
        for (;;) {
            if (lex_.accept(Tok::Newline)) continue;
            const Token& t = lex_.peek();
            if (t.type == Tok::Eof) {
                throw ParseError(head.line, head.column, "'end' closing this 'group'", "end of input");
            }
            if (t.type != Tok::Ident) Lexer::fail(t, "a message or 'end'");
            Token first = lex_.next();
            if (first.text == "end") {
                if (group.messages.empty()) {
                    throw ParseError(head.line, head.column, "at least one message inside 'group'", "empty group");
                }
                end_of_line();
                return group;
            }
            if (lex_.peek().type != Tok::ThinArrow) {
                throw ParseError(first.line, first.column, "a message or 'end'",
                                 "unknown keyword '" + first.text + "'");
            }
            group.messages.push_back(parse_message(first, true));
        }
    }

    AltNode parse_alt(const Token& head) {
        AltNode alt;
        const Token& bit = lex_.peek();
        if (bit.type != Tok::Ident) Lexer::fail(bit, "alt condition of the form 'ALIAS == 0|1'");
        const Participant* p = find(bit.text);
        if (p == nullptr || p->kind != ParticipantKind::ClassicalBit) {
            Lexer::fail(bit, "a classical_bit alias in the alt condition");
        }
        alt.clbit = lex_.next().text;
        lex_.expect(Tok::EqEq, "'==' in the alt condition");
        const Token& value = lex_.peek();
        if (value.type != Tok::Number || (value.text != "0" && value.text != "1")) {
            Lexer::fail(value, "0 or 1 in the alt condition");
        }
        alt.value = lex_.next().text == "1" ? 1 : 0;
        end_of_line();
        parse_block(alt.events, &head);
        return alt;
    }

    Lexer lex_;
    SequenceModel model_;
};

// ---------------------------------------------------------------------------
// Pretty printers

const char* visibility_prefix(Visibility v) {
    switch (v) {
        case Visibility::Public: return "+";
        case Visibility::Private: return "-";
        case Visibility::Protected: return "#";
        case Visibility::Unspecified: break;
    }
    return "";
}

void print_stereotypes(std::ostream& os, const std::vector<std::string>& st) {
    for (const auto& s : st) os << " <<" << s << ">>";
}

void print_class(std::ostream& os, const ClassNode& c, const std::string& indent) {
    os << indent << "class " << c.name;
    print_stereotypes(os, c.stereotypes);
    os << " {\n";
    for (const auto& a : c.attributes) {
        os << indent << "  " << visibility_prefix(a.visibility) << a.name;
        if (!a.type.empty()) os << ": " << a.type;
        os << "\n";
    }
    for (const auto& op : c.operations) {
        os << indent << "  " << visibility_prefix(op.visibility) << op.name << "(";
        for (std::size_t i = 0; i < op.params.size(); ++i) {
            if (i) os << ", ";
            os << op.params[i].name << ": " << op.params[i].type;
        }
        os << ")";
        if (!op.return_type.empty()) os << ": " << op.return_type;
        os << "\n";
    }
    os << indent << "}\n";
}

void print_package(std::ostream& os, const PackageNode& p, const std::string& indent) {
    os << indent << "package " << p.name;
    print_stereotypes(os, p.stereotypes);
    os << " {\n";
    for (const auto& sub : p.packages) print_package(os, sub, indent + "  ");
    for (const auto& c : p.classes) print_class(os, c, indent + "  ");
    os << indent << "}\n";
}

void print_params(std::ostream& os, const std::vector<double>& params) {
    if (params.empty()) return;
    os << "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ", ";
        os << format_real(params[i]);
    }
    os << ")";
}

void print_message(std::ostream& os, const MessageNode& m, const std::string& indent) {
    os << indent << m.sender << " -> " << m.receiver;
    if (m.control || m.controlled || !m.name.empty()) {
        os << " :";
        if (m.control) os << " <<control>>";
        if (m.controlled) os << " <<controlled>>";
        if (!m.name.empty()) {
            os << " " << m.name;
            print_params(os, m.params);
        }
    }
    os << "\n";
}

void print_events(std::ostream& os, const std::vector<EventNode>& events, const std::string& indent) {
    for (const auto& e : events) {
        if (const auto* m = std::get_if<MessageNode>(&e.node)) {
            print_message(os, *m, indent);
        } else if (const auto* g = std::get_if<GroupNode>(&e.node)) {
            os << indent << "group " << g->name;
            print_params(os, g->params);
            os << "\n";
            for (const auto& m2 : g->messages) print_message(os, m2, indent + "  ");
            os << indent << "end\n";
        } else if (const auto* a = std::get_if<AltNode>(&e.node)) {
            os << indent << "alt " << a->clbit << " == " << a->value << "\n";
            print_events(os, a->events, indent + "  ");
            os << indent << "end\n";
        }
    }
}

}  // namespace

ClassModel parse_class_diagram(std::string_view source) { return ClassParser(source).parse(); }

SequenceModel parse_sequence_diagram(std::string_view source) { return SequenceParser(source).parse(); }

std::string print_class_model(const ClassModel& model) {
    std::ostringstream os;
    os << "@startuml\n";
    for (const auto& p : model.packages) print_package(os, p, "");
    for (const auto& c : model.classes) print_class(os, c, "");
    for (const auto& a : model.associations) {
        os << a.source << " --> " << a.target;
        if (!a.label.empty()) os << " : " << a.label;
        os << "\n";
    }
    os << "@enduml\n";
    return os.str();
}

std::string print_sequence_model(const SequenceModel& model) {
    std::ostringstream os;
    os << "@startuml\n";
    for (const auto& p : model.participants) {
        os << "participant \"" << p.name << "\" as " << p.alias << " <<"
           << (p.kind == ParticipantKind::Qubit ? "qubit" : "classical_bit") << ">>\n";
    }
    print_events(os, model.events, "");
    os << "@enduml\n";
    return os.str();
}

}  // namespace umlq
