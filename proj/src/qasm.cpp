#include "ftqc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ftqc/errors.hpp"

namespace ftqc {

bool is_two_qubit(GateKind k) {
    return k == GateKind::CNOT || k == GateKind::CZ;
}

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::CNOT: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::RZ: return "rz";
    }
    return "?";
}

namespace {

std::optional<GateKind> builtin_gate(const std::string& name) {
    static const std::unordered_map<std::string, GateKind> table = {
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"s", GateKind::S},
        {"sdg", GateKind::Sdg}, {"h", GateKind::H},     {"x", GateKind::X},
        {"z", GateKind::Z},     {"cx", GateKind::CNOT}, {"cnot", GateKind::CNOT},
        {"cz", GateKind::CZ},   {"rz", GateKind::RZ},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

struct Token {
    enum Type { Ident, Number, Symbol, String, End } type = End;
    std::string text;
    std::size_t line = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token peek() {
        if (!lookahead_) lookahead_ = lex();
        return *lookahead_;
    }

    Token next() {
        if (lookahead_) {
            Token t = *lookahead_;
            lookahead_.reset();
            return t;
        }
        return lex();
    }

  private:
    Token lex() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        if (pos_ >= src_.size()) return {Token::End, "", line_};

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            return {Token::Ident, std::string(src_.substr(start, pos_ - start)), line_};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t start = pos_;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
                    ++pos_;
                } else if ((d == 'e' || d == 'E') && pos_ + 1 < src_.size()) {
                    char e = src_[pos_ + 1];
                    if (std::isdigit(static_cast<unsigned char>(e)) || e == '+' || e == '-') {
                        pos_ += 2;
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
            return {Token::Number, std::string(src_.substr(start, pos_ - start)), line_};
        }
        if (c == '"') {
            std::size_t start = ++pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') ++pos_;
            if (pos_ >= src_.size()) throw parse_error(line_, "unterminated string literal");
            std::string text(src_.substr(start, pos_ - start));
            ++pos_;
            return {Token::String, text, line_};
        }
        ++pos_;
        return {Token::Symbol, std::string(1, c), line_};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::optional<Token> lookahead_;
};

// Angle expression: sums/products of numbers, pi, and gate-definition
// parameters. Stored as a token slice and evaluated at expansion time.
using TokenExpr = std::vector<Token>;
using AngleEnv = std::map<std::string, double>;

class ExprEval {
  public:
    ExprEval(const TokenExpr& toks, const AngleEnv& env) : toks_(toks), env_(env) {}

    double eval() {
        double v = sum();
        if (i_ != toks_.size()) {
            throw parse_error(toks_.empty() ? 0 : toks_[0].line, "malformed angle expression");
        }
        return v;
    }

  private:
    double sum() {
        double v = product();
        while (match("+") || match("-")) {
            bool minus = toks_[i_ - 1].text == "-";
            double rhs = product();
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    double product() {
        double v = unary();
        while (match("*") || match("/")) {
            bool div = toks_[i_ - 1].text == "/";
            double rhs = unary();
            if (div && rhs == 0.0) throw parse_error(toks_[i_ - 1].line, "division by zero in angle");
            v = div ? v / rhs : v * rhs;
        }
        return v;
    }

    double unary() {
        if (match("-")) return -unary();
        return primary();
    }

    double primary() {
        if (i_ >= toks_.size()) {
            throw parse_error(toks_.empty() ? 0 : toks_.back().line, "truncated angle expression");
        }
        const Token& t = toks_[i_];
        if (t.type == Token::Number) {
            ++i_;
            return std::stod(t.text);
        }
        if (t.type == Token::Ident) {
            ++i_;
            if (t.text == "pi") return std::numbers::pi;
            auto it = env_.find(t.text);
            if (it == env_.end()) {
                throw parse_error(t.line, "unknown symbol '" + t.text + "' in angle expression");
            }
            return it->second;
        }
        if (t.type == Token::Symbol && t.text == "(") {
            ++i_;
            double v = sum();
            if (i_ >= toks_.size() || toks_[i_].text != ")") {
                throw parse_error(t.line, "missing ')' in angle expression");
            }
            ++i_;
            return v;
        }
        throw parse_error(t.line, "malformed angle expression");
    }

    bool match(const char* sym) {
        if (i_ < toks_.size() && toks_[i_].type == Token::Symbol && toks_[i_].text == sym) {
            ++i_;
            return true;
        }
        return false;
    }

    const TokenExpr& toks_;
    const AngleEnv& env_;
    std::size_t i_ = 0;
};

struct DefStatement {
    std::string name;
    std::size_t line = 0;
    std::vector<TokenExpr> angle_args;
    std::vector<std::string> qubit_args;  // formal names
};

struct GateDef {
    std::vector<std::string> params;   // angle formals
    std::vector<std::string> formals;  // qubit formals
    std::vector<DefStatement> body;
};

struct Register {
    std::uint32_t offset = 0;
    std::uint32_t size = 0;
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    GateList parse() {
        for (;;) {
            Token t = lex_.next();
            if (t.type == Token::End) break;
            if (t.type != Token::Ident) {
                throw parse_error(t.line, "expected statement, got '" + t.text + "'");
            }
            if (t.text == "OPENQASM") {
                skip_statement();
            } else if (t.text == "include") {
                expect(Token::String, "include path");
                expect_symbol(";");
            } else if (t.text == "qreg") {
                parse_qreg();
            } else if (t.text == "creg") {
                skip_statement();
            } else if (t.text == "gate") {
                parse_gate_def();
            } else {
                parse_call(t);
            }
        }
        return std::move(out_);
    }

  private:
    void skip_statement() {
        for (;;) {
            Token t = lex_.next();
            if (t.type == Token::End) throw parse_error(t.line, "missing ';'");
            if (t.type == Token::Symbol && t.text == ";") return;
        }
    }

    Token expect(Token::Type type, const char* what) {
        Token t = lex_.next();
        if (t.type != type) throw parse_error(t.line, std::string("expected ") + what);
        return t;
    }

    void expect_symbol(const char* sym) {
        Token t = lex_.next();
        if (t.type != Token::Symbol || t.text != sym) {
            throw parse_error(t.line, std::string("expected '") + sym + "', got '" + t.text + "'");
        }
    }

    void parse_qreg() {
        Token name = expect(Token::Ident, "register name");
        if (registers_.count(name.text)) {
            throw parse_error(name.line, "register '" + name.text + "' redeclared");
        }
        expect_symbol("[");
        Token size = expect(Token::Number, "register size");
        expect_symbol("]");
        expect_symbol(";");
        const double v = std::stod(size.text);
        if (v < 0 || v != std::floor(v) || v > 1e9) {
            throw parse_error(size.line, "invalid register size '" + size.text + "'");
        }
        const auto n = static_cast<std::uint32_t>(v);
        registers_[name.text] = {out_.qubit_count, n};
        out_.qubit_count += n;
    }

    void parse_gate_def() {
        Token name = expect(Token::Ident, "gate name");
        if (builtin_gate(name.text)) {
            throw parse_error(name.line, "cannot redefine builtin gate '" + name.text + "'");
        }
        GateDef def;
        if (lex_.peek().type == Token::Symbol && lex_.peek().text == "(") {
            lex_.next();
            while (!(lex_.peek().type == Token::Symbol && lex_.peek().text == ")")) {
                def.params.push_back(expect(Token::Ident, "angle parameter").text);
                if (lex_.peek().type == Token::Symbol && lex_.peek().text == ",") lex_.next();
            }
            lex_.next();  // ')'
        }
        for (;;) {
            def.formals.push_back(expect(Token::Ident, "qubit formal").text);
            Token t = lex_.peek();
            if (t.type == Token::Symbol && t.text == ",") {
                lex_.next();
            } else {
                break;
            }
        }
        expect_symbol("{");
        while (!(lex_.peek().type == Token::Symbol && lex_.peek().text == "}")) {
            Token head = expect(Token::Ident, "gate statement");
            DefStatement st;
            st.name = head.text;
            st.line = head.line;
            if (lex_.peek().type == Token::Symbol && lex_.peek().text == "(") {
                lex_.next();
                st.angle_args = parse_expr_list(")");
            }
            for (;;) {
                st.qubit_args.push_back(expect(Token::Ident, "qubit formal").text);
                Token t = lex_.peek();
                if (t.type == Token::Symbol && t.text == ",") {
                    lex_.next();
                } else {
                    break;
                }
            }
            expect_symbol(";");
            def.body.push_back(std::move(st));
        }
        lex_.next();  // '}'
        defs_[name.text] = std::move(def);
    }

    std::vector<TokenExpr> parse_expr_list(const char* closer) {
        std::vector<TokenExpr> exprs;
        TokenExpr cur;
        int depth = 0;
        for (;;) {
            Token t = lex_.next();
            if (t.type == Token::End) throw parse_error(t.line, "unterminated expression list");
            if (t.type == Token::Symbol) {
                if (t.text == "(") ++depth;
                if (t.text == ")" && depth > 0) --depth;
                else if (t.text == closer && depth == 0) {
                    if (!cur.empty()) exprs.push_back(std::move(cur));
                    return exprs;
                } else if (t.text == "," && depth == 0) {
                    exprs.push_back(std::move(cur));
                    cur.clear();
                    continue;
                }
            }
            cur.push_back(t);
        }
    }

    // Operand in the main program: reg[idx], flattened to a global index.
    std::uint32_t parse_operand() {
        Token reg = expect(Token::Ident, "register operand");
        auto it = registers_.find(reg.text);
        if (it == registers_.end()) {
            throw parse_error(reg.line, "unknown register '" + reg.text + "'");
        }
        expect_symbol("[");
        Token idx = expect(Token::Number, "qubit index");
        expect_symbol("]");
        const double v = std::stod(idx.text);
        if (v < 0 || v != std::floor(v) || v >= it->second.size) {
            throw parse_error(idx.line, "operand index " + idx.text + " out of range for register '" +
                                            reg.text + "'");
        }
        return it->second.offset + static_cast<std::uint32_t>(v);
    }

    void parse_call(const Token& head) {
        std::vector<TokenExpr> angle_args;
        if (lex_.peek().type == Token::Symbol && lex_.peek().text == "(") {
            lex_.next();
            angle_args = parse_expr_list(")");
        }
        std::vector<std::uint32_t> operands;
        for (;;) {
            operands.push_back(parse_operand());
            Token t = lex_.peek();
            if (t.type == Token::Symbol && t.text == ",") {
                lex_.next();
            } else {
                break;
            }
        }
        expect_symbol(";");
        std::vector<double> angles;
        angles.reserve(angle_args.size());
        for (const auto& e : angle_args) {
            angles.push_back(ExprEval(e, {}).eval());
        }
        emit(head.text, head.line, angles, operands, 0);
    }

    void emit(const std::string& name, std::size_t line, const std::vector<double>& angles,
              const std::vector<std::uint32_t>& operands, int depth) {
        if (depth > 64) throw parse_error(line, "gate definition expansion too deep");
        if (auto kind = builtin_gate(name)) {
            emit_builtin(*kind, line, angles, operands);
            return;
        }
        auto it = defs_.find(name);
        if (it == defs_.end()) {
            throw parse_error(line, "unsupported gate name '" + name + "'");
        }
        const GateDef& def = it->second;
        if (angles.size() != def.params.size()) {
            throw parse_error(line, "gate '" + name + "' expects " +
                                        std::to_string(def.params.size()) + " angle argument(s)");
        }
        if (operands.size() != def.formals.size()) {
            throw parse_error(line, "gate '" + name + "' expects " +
                                        std::to_string(def.formals.size()) + " operand(s)");
        }
        AngleEnv env;
        std::map<std::string, std::uint32_t> qmap;
        for (std::size_t i = 0; i < def.params.size(); ++i) env[def.params[i]] = angles[i];
        for (std::size_t i = 0; i < def.formals.size(); ++i) qmap[def.formals[i]] = operands[i];
        for (const DefStatement& st : def.body) {
            std::vector<double> sub_angles;
            sub_angles.reserve(st.angle_args.size());
            for (const auto& e : st.angle_args) sub_angles.push_back(ExprEval(e, env).eval());
            std::vector<std::uint32_t> sub_ops;
            sub_ops.reserve(st.qubit_args.size());
            for (const auto& q : st.qubit_args) {
                auto qi = qmap.find(q);
                if (qi == qmap.end()) {
                    throw parse_error(st.line, "unknown qubit formal '" + q + "' in gate body");
                }
                sub_ops.push_back(qi->second);
            }
            emit(st.name, st.line, sub_angles, sub_ops, depth + 1);
        }
    }

    void emit_builtin(GateKind kind, std::size_t line, const std::vector<double>& angles,
                      const std::vector<std::uint32_t>& operands) {
        const std::size_t want_ops = is_two_qubit(kind) ? 2 : 1;
        if (operands.size() != want_ops) {
            throw parse_error(line, std::string("gate '") + gate_name(kind) + "' expects " +
                                        std::to_string(want_ops) + " operand(s)");
        }
        const std::size_t want_angles = kind == GateKind::RZ ? 1 : 0;
        if (angles.size() != want_angles) {
            throw parse_error(line, std::string("gate '") + gate_name(kind) + "' expects " +
                                        std::to_string(want_angles) + " angle argument(s)");
        }
        Gate g;
        g.kind = kind;
        g.q0 = operands[0];
        if (want_ops == 2) {
            g.q1 = operands[1];
            if (g.q0 == g.q1) {
                throw parse_error(line, "two-qubit gate operands must be distinct");
            }
        }
        if (want_angles == 1) g.angle = angles[0];
        out_.gates.push_back(g);
    }

    Lexer lex_;
    GateList out_;
    std::map<std::string, Register> registers_;
    std::map<std::string, GateDef> defs_;
};

}  // namespace

GateList parse_qasm(std::string_view text) {
    return Parser(text).parse();
}

std::string write_qasm(const GateList& g) {
    std::ostringstream os;
    os.precision(17);
    os << "OPENQASM 2.0;\n";
    os << "qreg q[" << g.qubit_count << "];\n";
    for (const Gate& gate : g.gates) {
        os << gate_name(gate.kind);
        if (gate.kind == GateKind::RZ) os << "(" << gate.angle << ")";
        os << " q[" << gate.q0 << "]";
        if (is_two_qubit(gate.kind)) os << ",q[" << gate.q1 << "]";
        os << ";\n";
    }
    return os.str();
}

}  // namespace ftqc
