#include "dqc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "dqc/errors.hpp"
#include "dqc/gates.hpp"

namespace dqc {

namespace {

enum class Tok {
  Id,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  Comma,
  Semicolon,
  Arrow,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        advance();
      return {Tok::Id, std::string(src_.substr(start, pos_ - start)), line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      bool digits = false;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
        digits = true;
      }
      if (pos_ < src_.size() && src_[pos_] == '.') {
        advance();
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          advance();
          digits = true;
        }
      }
      if (!digits) throw parse_error("stray '.'", line, col);
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
          advance();
        if (pos_ >= src_.size() ||
            !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw parse_error("malformed exponent", line_, col_);
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          advance();
      }
      return {Tok::Number, std::string(src_.substr(start, pos_ - start)), line,
              col};
    }
    if (c == '"') {
      advance();
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') advance();
      if (pos_ >= src_.size())
        throw parse_error("unterminated string", line, col);
      std::string text(src_.substr(start, pos_ - start));
      advance();
      return {Tok::Id, "\"" + text + "\"", line, col};
    }
    advance();
    switch (c) {
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case '[': return {Tok::LBracket, "[", line, col};
      case ']': return {Tok::RBracket, "]", line, col};
      case '{': return {Tok::LBrace, "{", line, col};
      case ',': return {Tok::Comma, ",", line, col};
      case ';': return {Tok::Semicolon, ";", line, col};
      case '+': return {Tok::Plus, "+", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        return {Tok::Minus, "-", line, col};
      default:
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line, col);
    }
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Reg {
  std::uint32_t size;
  std::uint32_t offset; // into the flat qubit space (qregs only)
};

// One gate operand: either a single flat index or a whole register.
struct Operand {
  bool whole_register;
  std::uint32_t index;  // flat index when !whole_register
  std::uint32_t offset; // register base when whole_register
  std::uint32_t size;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { bump(); }

  std::vector<Gate> parse(std::uint32_t& num_qubits_out) {
    expect_header();
    while (cur_.kind != Tok::End) statement();
    num_qubits_out = next_qubit_;
    return gates_;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, cur_.line, cur_.col);
  }
  [[noreturn]] void unsupported(const std::string& what) {
    throw unsupported_error("unsupported feature: " + what, cur_.line,
                            cur_.col);
  }

  void bump() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what);
    bump();
  }

  std::string expect_id(const char* what) {
    if (cur_.kind != Tok::Id) fail(std::string("expected ") + what);
    std::string text = cur_.text;
    bump();
    return text;
  }

  void expect_header() {
    if (cur_.kind != Tok::Id || cur_.text != "OPENQASM")
      fail("expected OPENQASM 2.0 header");
    bump();
    if (cur_.kind != Tok::Number || cur_.text != "2.0")
      fail("only OpenQASM version 2.0 is supported");
    bump();
    expect(Tok::Semicolon, "';' after version");
  }

  void statement() {
    if (cur_.kind != Tok::Id) fail("expected a statement");
    const std::string& kw = cur_.text;
    if (kw == "include") {
      bump();
      std::string file = expect_id("include file name");
      if (file != "\"qelib1.inc\"")
        unsupported("include of " + file + " (only \"qelib1.inc\")");
      expect(Tok::Semicolon, "';'");
    } else if (kw == "qreg" || kw == "creg") {
      declare_register(kw == "qreg");
    } else if (kw == "barrier") {
      bump();
      parse_operand_list(/*quantum=*/true);
      expect(Tok::Semicolon, "';'");
    } else if (kw == "measure") {
      bump();
      measure();
    } else if (kw == "opaque" || kw == "if" || kw == "reset" || kw == "gate") {
      unsupported(kw == "gate" ? "custom gate definitions" : "'" + kw + "'");
    } else {
      gate_call();
    }
  }

  void declare_register(bool quantum) {
    Token at = cur_;
    bump();
    std::string name = expect_id("register name");
    expect(Tok::LBracket, "'['");
    if (cur_.kind != Tok::Number) fail("expected register size");
    long size = std::strtol(cur_.text.c_str(), nullptr, 10);
    if (size <= 0 || cur_.text.find('.') != std::string::npos)
      throw structural_error("register '" + name + "' must have positive size");
    bump();
    expect(Tok::RBracket, "']'");
    expect(Tok::Semicolon, "';'");

    auto& table = quantum ? qregs_ : cregs_;
    if (qregs_.count(name) || cregs_.count(name))
      throw structural_error("register '" + name + "' declared twice");
    Reg reg{static_cast<std::uint32_t>(size), next_qubit_};
    if (quantum) next_qubit_ += reg.size;
    table.emplace(name, reg);
    (void)at;
  }

  Operand parse_operand(bool quantum) {
    Token at = cur_;
    std::string name = expect_id("register operand");
    const auto& table = quantum ? qregs_ : cregs_;
    auto it = table.find(name);
    if (it == table.end())
      throw structural_error("operand references undeclared " +
                             std::string(quantum ? "qreg" : "creg") + " '" +
                             name + "' at line " + std::to_string(at.line));
    const Reg& reg = it->second;
    if (cur_.kind == Tok::LBracket) {
      bump();
      if (cur_.kind != Tok::Number) fail("expected index");
      long idx = std::strtol(cur_.text.c_str(), nullptr, 10);
      bump();
      expect(Tok::RBracket, "']'");
      if (idx < 0 || static_cast<std::uint32_t>(idx) >= reg.size)
        throw structural_error("index " + std::to_string(idx) +
                               " out of bounds for '" + name + "[" +
                               std::to_string(reg.size) + "]' at line " +
                               std::to_string(at.line));
      return {false, reg.offset + static_cast<std::uint32_t>(idx), 0, 1};
    }
    return {true, 0, reg.offset, reg.size};
  }

  std::vector<Operand> parse_operand_list(bool quantum) {
    std::vector<Operand> ops;
    ops.push_back(parse_operand(quantum));
    while (cur_.kind == Tok::Comma) {
      bump();
      ops.push_back(parse_operand(quantum));
    }
    return ops;
  }

  void measure() {
    parse_operand(/*quantum=*/true);
    expect(Tok::Arrow, "'->'");
    parse_operand(/*quantum=*/false);
    expect(Tok::Semicolon, "';'");
    // measurement carries no teleportation cost; dropped
  }

  void gate_call() {
    Token at = cur_;
    std::string name = expect_id("gate name");
    auto sig = standard_gate(name);
    if (!sig)
      throw unsupported_error("unsupported feature: gate '" + name +
                                  "' is not in the standard set",
                              at.line, at.col);
    std::vector<double> params;
    if (cur_.kind == Tok::LParen) {
      bump();
      if (cur_.kind != Tok::RParen) {
        params.push_back(expression());
        while (cur_.kind == Tok::Comma) {
          bump();
          params.push_back(expression());
        }
      }
      expect(Tok::RParen, "')'");
    }
    if (params.size() != sig->num_params)
      throw parse_error("gate '" + name + "' takes " +
                            std::to_string(sig->num_params) +
                            " parameter(s), got " +
                            std::to_string(params.size()),
                        at.line, at.col);
    std::vector<Operand> ops = parse_operand_list(/*quantum=*/true);
    expect(Tok::Semicolon, "';'");
    if (ops.size() != sig->num_qubits)
      throw parse_error("gate '" + name + "' takes " +
                            std::to_string(sig->num_qubits) +
                            " qubit operand(s), got " +
                            std::to_string(ops.size()),
                        at.line, at.col);

    // Broadcast: whole-register operands expand elementwise and must agree
    // in size; indexed operands repeat.
    std::uint32_t span = 1;
    for (const Operand& op : ops) {
      if (!op.whole_register) continue;
      if (span != 1 && op.size != span)
        throw structural_error("mismatched register sizes in broadcast of '" +
                               name + "' at line " + std::to_string(at.line));
      span = op.size;
    }
    for (std::uint32_t rep = 0; rep < span; ++rep) {
      Gate gate;
      gate.name = name;
      gate.params = params;
      for (const Operand& op : ops)
        gate.qubits.push_back(op.whole_register ? op.offset + rep : op.index);
      gates_.push_back(std::move(gate));
    }
  }

  // --- parameter expressions ------------------------------------------------

  double expression() { return add_expr(); }

  double add_expr() {
    double v = mul_expr();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool plus = cur_.kind == Tok::Plus;
      bump();
      double rhs = mul_expr();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double mul_expr() {
    double v = unary_expr();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool mul = cur_.kind == Tok::Star;
      bump();
      double rhs = unary_expr();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary_expr() {
    if (cur_.kind == Tok::Minus) {
      bump();
      return -unary_expr();
    }
    return pow_expr();
  }

  double pow_expr() {
    double v = atom();
    if (cur_.kind == Tok::Caret) {
      bump();
      return std::pow(v, unary_expr()); // right-associative
    }
    return v;
  }

  double atom() {
    if (cur_.kind == Tok::Number) {
      double v = std::strtod(cur_.text.c_str(), nullptr);
      bump();
      return v;
    }
    if (cur_.kind == Tok::LParen) {
      bump();
      double v = expression();
      expect(Tok::RParen, "')'");
      return v;
    }
    if (cur_.kind == Tok::Id) {
      std::string name = cur_.text;
      if (name == "pi") {
        bump();
        return std::numbers::pi;
      }
      bump();
      expect(Tok::LParen, "'(' after function name");
      double arg = expression();
      expect(Tok::RParen, "')'");
      if (name == "sin") return std::sin(arg);
      if (name == "cos") return std::cos(arg);
      if (name == "tan") return std::tan(arg);
      if (name == "exp") return std::exp(arg);
      if (name == "ln") return std::log(arg);
      if (name == "sqrt") return std::sqrt(arg);
      fail("unknown function '" + name + "'");
    }
    fail("expected expression");
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0, 0};
  std::map<std::string, Reg> qregs_;
  std::map<std::string, Reg> cregs_;
  std::uint32_t next_qubit_ = 0;
  std::vector<Gate> gates_;
};

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

} // namespace

Circuit parse_qasm(std::string_view source, std::string name) {
  Parser parser(source);
  std::uint32_t num_qubits = 0;
  std::vector<Gate> gates = parser.parse(num_qubits);
  if (num_qubits == 0)
    throw structural_error("program declares no quantum registers");
  return layerize(gates, num_qubits, std::move(name));
}

std::string emit_qasm(const Circuit& circuit) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
  for (const Layer& layer : circuit.layers) {
    for (const Gate& gate : layer.gates) {
      out += gate.name;
      if (!gate.params.empty()) {
        out += '(';
        for (std::size_t i = 0; i < gate.params.size(); ++i) {
          if (i > 0) out += ',';
          append_number(out, gate.params[i]);
        }
        out += ')';
      }
      out += ' ';
      for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        if (i > 0) out += ',';
        out += "q[" + std::to_string(gate.qubits[i]) + "]";
      }
      out += ";\n";
    }
  }
  return out;
}

} // namespace dqc
