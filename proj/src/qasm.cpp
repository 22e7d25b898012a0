// Copyright 2026 The dequant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dequant/qasm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

namespace dequant {

QasmError::QasmError(Kind kind, SourceSpan span, const std::string& message)
    : std::runtime_error("line " + std::to_string(span.line) + ", column " +
                         std::to_string(span.column) + ": " + message),
      kind_(kind), span_(span) {}

namespace {

enum class TokenKind { Identifier, Number, String, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    while (true) {
      skipTrivia();
      if (pos_ >= src_.size()) {
        tokens.push_back({TokenKind::End, "", here(pos_)});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

private:
  SourceSpan here(std::size_t begin) const {
    return {line_, begin - lineStart_ + 1, begin, pos_};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      lineStart_ = pos_ + 1;
    }
    ++pos_;
  }

  void skipTrivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          advance();
        }
      } else if (src_.substr(pos_, 2) == "/*") {
        const std::size_t begin = pos_;
        const std::size_t line = line_;
        const std::size_t col = begin - lineStart_ + 1;
        pos_ += 2;
        while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") {
          advance();
        }
        if (pos_ >= src_.size()) {
          throw QasmError(QasmError::Kind::Syntax, {line, col, begin, pos_},
                          "unterminated block comment");
        }
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  Token next() {
    const std::size_t begin = pos_;
    const std::size_t col = begin - lineStart_ + 1;
    const char c = src_[pos_];
    auto make = [&](TokenKind kind, std::string text) {
      return Token{kind, std::move(text), {line_, col, begin, pos_}};
    };
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      return make(TokenKind::Identifier,
                  std::string(src_.substr(begin, pos_ - begin)));
    }
    // UTF-8 encoding of the Greek letter pi.
    if (src_.substr(pos_, 2) == "\xCF\x80") {
      pos_ += 2;
      return make(TokenKind::Identifier, "pi");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) != 0)) {
      auto digits = [&] {
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
          ++pos_;
        }
      };
      digits();
      if (pos_ < src_.size() && src_[pos_] == '.') {
        ++pos_;
        digits();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
          ++look;
        }
        if (look < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[look])) != 0) {
          pos_ = look;
          digits();
        }
      }
      return make(TokenKind::Number,
                  std::string(src_.substr(begin, pos_ - begin)));
    }
    if (c == '"') {
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
        ++pos_;
      }
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw QasmError(QasmError::Kind::Syntax, {line_, col, begin, pos_},
                        "unterminated string literal");
      }
      ++pos_;
      return make(TokenKind::String,
                  std::string(src_.substr(begin + 1, pos_ - begin - 2)));
    }
    for (const std::string_view two : {"==", "&&", "->", "!=", "||"}) {
      if (src_.substr(pos_, 2) == two) {
        pos_ += 2;
        return make(TokenKind::Symbol, std::string(two));
      }
    }
    if (std::string_view("[](){};,@=!+-*/<>").find(c) != std::string_view::npos) {
      ++pos_;
      return make(TokenKind::Symbol, std::string(1, c));
    }
    ++pos_;
    throw QasmError(QasmError::Kind::Syntax, {line_, col, begin, pos_},
                    std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t lineStart_ = 0;
};

struct GateSpec {
  GateType type;
  std::size_t builtinControls;
  bool hasAngle;
};

const std::unordered_map<std::string, GateSpec>& gateTable() {
  static const std::unordered_map<std::string, GateSpec> table = {
      {"h", {GateType::H, 0, false}},
      {"x", {GateType::X, 0, false}},
      {"y", {GateType::Y, 0, false}},
      {"z", {GateType::Z, 0, false}},
      {"s", {GateType::S, 0, false}},
      {"sdg", {GateType::Sdg, 0, false}},
      {"t", {GateType::T, 0, false}},
      {"tdg", {GateType::Tdg, 0, false}},
      {"p", {GateType::Phase, 0, true}},
      {"rx", {GateType::RX, 0, true}},
      {"ry", {GateType::RY, 0, true}},
      {"rz", {GateType::RZ, 0, true}},
      {"swap", {GateType::SWAP, 0, false}},
      {"gphase", {GateType::GlobalPhase, 0, true}},
      {"cx", {GateType::X, 1, false}},
      {"cz", {GateType::Z, 1, false}},
      {"ccx", {GateType::X, 2, false}},
  };
  return table;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).tokenize()) {}

  ParseResult run() {
    while (peek().kind != TokenKind::End) {
      statement();
    }
    if (!qubitName_) {
      throw QasmError(QasmError::Kind::Syntax, peek().span,
                      "missing qubit declaration");
    }
    result_.circuit.numQubits = numQubits_;
    result_.circuit.numRegisters = numBits_;
    return std::move(result_);
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) {
      ++pos_;
    }
    return t;
  }
  bool isSymbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool isKeyword(std::string_view s) const {
    return peek().kind == TokenKind::Identifier && peek().text == s;
  }
  [[noreturn]] void fail(QasmError::Kind kind, const Token& at,
                         const std::string& message) const {
    throw QasmError(kind, at.span, message);
  }
  [[noreturn]] void expected(std::string_view what) const {
    const Token& t = peek();
    fail(QasmError::Kind::Syntax, t,
         "expected " + std::string(what) + ", found " +
             (t.kind == TokenKind::End ? std::string("end of input")
                                       : "'" + t.text + "'"));
  }
  void expectSymbol(std::string_view s) {
    if (!isSymbol(s)) {
      expected("'" + std::string(s) + "'");
    }
    take();
  }
  std::string expectIdentifier() {
    if (peek().kind != TokenKind::Identifier) {
      expected("identifier");
    }
    return take().text;
  }
  std::size_t expectInteger() {
    if (peek().kind != TokenKind::Number) {
      expected("integer");
    }
    const Token& t = take();
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      fail(QasmError::Kind::Syntax, t, "expected integer, found '" + t.text + "'");
    }
    return value;
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::Identifier) {
      expected("statement");
    }
    const std::string& word = head.text;
    if (word == "OPENQASM") {
      take();
      if (peek().kind != TokenKind::Number) {
        expected("version number");
      }
      const Token& v = take();
      if (v.text != "3" && v.text != "3.0") {
        fail(QasmError::Kind::Unsupported, v,
             "unsupported OpenQASM version " + v.text);
      }
      expectSymbol(";");
    } else if (word == "include") {
      take();
      if (peek().kind != TokenKind::String) {
        expected("file name");
      }
      take();
      expectSymbol(";");
    } else if (word == "qubit" || word == "bit") {
      declaration(word == "qubit");
    } else if (word == "barrier") {
      const Token& t = take();
      while (!isSymbol(";")) {
        if (peek().kind == TokenKind::End) {
          expected("';'");
        }
        take();
      }
      take();
      result_.warnings.push_back({t.span, "barrier removed"});
    } else if (word == "reset") {
      take();
      Reset r{qubitRef()};
      expectSymbol(";");
      result_.circuit.body.emplace_back(r);
    } else if (word == "if") {
      ifStatement();
    } else if (isSymbol("[", 1)) {
      assignment();
    } else {
      gateCall({});
    }
  }

  void declaration(bool quantum) {
    const Token& kw = take();
    if (!isSymbol("[")) {
      fail(QasmError::Kind::Unsupported, kw,
           "unsupported construct: " + kw.text + " declaration without size");
    }
    take();
    const std::size_t size = expectInteger();
    expectSymbol("]");
    std::string name = expectIdentifier();
    expectSymbol(";");
    auto& slot = quantum ? qubitName_ : bitName_;
    if (slot) {
      fail(QasmError::Kind::Unsupported, kw,
           "unsupported construct: multiple " + kw.text + " declarations");
    }
    slot = std::move(name);
    (quantum ? numQubits_ : numBits_) = size;
  }

  Qubit qubitRef() {
    const Token& nameTok = peek();
    const std::string name = expectIdentifier();
    if (!qubitName_ || name != *qubitName_) {
      fail(QasmError::Kind::Syntax, nameTok, "unknown qubit register '" + name + "'");
    }
    if (!isSymbol("[")) {
      fail(QasmError::Kind::Unsupported, nameTok,
           "unsupported construct: whole-register operand '" + name + "'");
    }
    take();
    const Token& idxTok = peek();
    const std::size_t idx = expectInteger();
    expectSymbol("]");
    if (idx >= numQubits_) {
      fail(QasmError::Kind::IndexOutOfRange, idxTok,
           "qubit index " + std::to_string(idx) + " out of range for " + name +
               "[" + std::to_string(numQubits_) + "]");
    }
    return idx;
  }

  Register bitRef() {
    const Token& nameTok = peek();
    const std::string name = expectIdentifier();
    if (!bitName_ || name != *bitName_) {
      fail(QasmError::Kind::Syntax, nameTok, "unknown bit register '" + name + "'");
    }
    if (!isSymbol("[")) {
      fail(QasmError::Kind::Unsupported, nameTok,
           "unsupported construct: whole-register operand '" + name + "'");
    }
    take();
    const Token& idxTok = peek();
    const std::size_t idx = expectInteger();
    expectSymbol("]");
    if (idx >= numBits_) {
      fail(QasmError::Kind::IndexOutOfRange, idxTok,
           "bit index " + std::to_string(idx) + " out of range for " + name +
               "[" + std::to_string(numBits_) + "]");
    }
    return idx;
  }

  void assignment() {
    const Token& start = peek();
    const Register target = bitRef();
    expectSymbol("=");
    if (isKeyword("measure")) {
      take();
      const Qubit q = qubitRef();
      expectSymbol(";");
      result_.circuit.body.emplace_back(Measure{q, target, false});
      return;
    }
    if (isSymbol("!")) {
      take();
      const Register source = bitRef();
      expectSymbol(";");
      auto& body = result_.circuit.body;
      auto* last = body.empty() ? nullptr : std::get_if<Measure>(&body.back());
      if (source != target || last == nullptr || last->reg != target ||
          last->negated) {
        fail(QasmError::Kind::Unsupported, start,
             "unsupported construct: classical assignment (negation is only "
             "accepted directly after measuring into the same bit)");
      }
      last->negated = true;
      return;
    }
    fail(QasmError::Kind::Unsupported, start,
         "unsupported construct: classical assignment");
  }

  void ifStatement() {
    take();
    expectSymbol("(");
    std::vector<Condition> guards;
    std::set<Register> seen;
    while (true) {
      const Token& atomTok = peek();
      bool negated = false;
      if (isSymbol("!")) {
        take();
        negated = true;
      }
      const Register r = bitRef();
      bool value = true;
      if (!negated && isSymbol("==")) {
        take();
        const Token& vTok = peek();
        const std::size_t v = expectInteger();
        if (v > 1) {
          fail(QasmError::Kind::Unsupported, vTok,
               "unsupported construct: comparison against " + std::to_string(v));
        }
        value = v == 1;
      } else if (negated) {
        value = false;
      }
      if (!seen.insert(r).second) {
        fail(QasmError::Kind::Syntax, atomTok, "register guarded twice");
      }
      guards.push_back({r, polarityFor(value)});
      if (isSymbol("&&")) {
        take();
        continue;
      }
      break;
    }
    expectSymbol(")");
    if (isSymbol("{")) {
      fail(QasmError::Kind::Unsupported, peek(),
           "unsupported construct: if block");
    }
    gateCall(std::move(guards));
  }

  double angleExpr() { return sum(); }
  double sum() {
    double v = product();
    while (isSymbol("+") || isSymbol("-")) {
      const bool add = take().text == "+";
      const double rhs = product();
      v = add ? v + rhs : v - rhs;
    }
    return v;
  }
  double product() {
    double v = unary();
    while (isSymbol("*") || isSymbol("/")) {
      const bool mul = take().text == "*";
      const double rhs = unary();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }
  double unary() {
    if (isSymbol("-")) {
      take();
      return -unary();
    }
    if (isSymbol("+")) {
      take();
      return unary();
    }
    if (isSymbol("(")) {
      take();
      const double v = sum();
      expectSymbol(")");
      return v;
    }
    if (peek().kind == TokenKind::Number) {
      return std::strtod(take().text.c_str(), nullptr);
    }
    if (isKeyword("pi")) {
      take();
      return PI;
    }
    expected("angle expression");
  }

  void gateCall(std::vector<Condition> guards) {
    std::vector<Polarity> modifiers;
    while (isKeyword("ctrl") || isKeyword("negctrl") || isKeyword("inv") ||
           isKeyword("pow")) {
      const Token& mod = take();
      if (mod.text == "inv" || mod.text == "pow") {
        fail(QasmError::Kind::Unsupported, mod,
             "unsupported construct: '" + mod.text + "' modifier");
      }
      std::size_t count = 1;
      if (isSymbol("(")) {
        take();
        count = expectInteger();
        expectSymbol(")");
      }
      expectSymbol("@");
      modifiers.insert(modifiers.end(), count,
                       mod.text == "ctrl" ? Polarity::Pos : Polarity::Neg);
    }
    const Token& nameTok = peek();
    const std::string name = expectIdentifier();
    const auto& table = gateTable();
    const auto it = table.find(name);
    if (it == table.end()) {
      fail(QasmError::Kind::Unsupported, nameTok,
           "unsupported construct: '" + name + "'");
    }
    const GateSpec& spec = it->second;
    double angle = 0.0;
    if (spec.hasAngle) {
      expectSymbol("(");
      angle = angleExpr();
      expectSymbol(")");
    } else if (isSymbol("(")) {
      fail(QasmError::Kind::Syntax, peek(), "gate '" + name + "' takes no angle");
    }
    modifiers.insert(modifiers.end(), spec.builtinControls, Polarity::Pos);

    Apply a;
    a.gate = Gate(spec.type, angle);
    const std::size_t operands = modifiers.size() + a.gate.arity();
    std::vector<Qubit> qubits;
    std::set<Qubit> seen;
    if (operands > 0) {
      while (true) {
        const Token& opTok = peek();
        const Qubit q = qubitRef();
        if (!seen.insert(q).second) {
          fail(QasmError::Kind::Syntax, opTok,
               "qubit " + std::to_string(q) + " used twice in one gate");
        }
        qubits.push_back(q);
        if (!isSymbol(",")) {
          break;
        }
        take();
      }
    }
    if (qubits.size() != operands) {
      fail(QasmError::Kind::Syntax, nameTok,
           "gate '" + name + "' expects " + std::to_string(operands) +
               " operand(s), got " + std::to_string(qubits.size()));
    }
    expectSymbol(";");
    for (std::size_t i = 0; i < modifiers.size(); ++i) {
      a.controls.push_back({qubits[i], modifiers[i]});
    }
    a.targets.assign(qubits.begin() + static_cast<std::ptrdiff_t>(modifiers.size()),
                     qubits.end());
    a.guards = std::move(guards);
    a.normalize();
    if (a.gate.type == GateType::GlobalPhase && !a.isControlled() &&
        !a.isGuarded()) {
      result_.circuit.globalPhase += a.gate.angle;
      return;
    }
    result_.circuit.body.emplace_back(std::move(a));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::string> qubitName_;
  std::optional<std::string> bitName_;
  std::size_t numQubits_ = 0;
  std::size_t numBits_ = 0;
  ParseResult result_;
};

// Evaluates "k*pi/d" in the same order as the expression parser.
double piMultiple(long k, long d) {
  const double numerator =
      k == 1 ? PI : (k == -1 ? -PI : static_cast<double>(k) * PI);
  return d == 1 ? numerator : numerator / static_cast<double>(d);
}

std::string piString(long k, long d) {
  std::string s;
  if (k == -1) {
    s = "-pi";
  } else if (k == 1) {
    s = "pi";
  } else {
    s = std::to_string(k) + "*pi";
  }
  if (d != 1) {
    s += "/" + std::to_string(d);
  }
  return s;
}

} // namespace

ParseResult parseQasm(std::string_view text) { return Parser(text).run(); }

std::string formatAngle(double theta) {
  if (theta == 0.0) {
    return "0";
  }
  for (const long d : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 16L, 32L, 64L, 128L, 256L,
                       512L, 1024L}) {
    const double k = std::round(theta * static_cast<double>(d) / PI);
    if (k == 0.0 || std::abs(k) > 8.0 * static_cast<double>(d)) {
      continue;
    }
    const long ki = static_cast<long>(k);
    if (std::gcd(ki, d) != 1) {
      continue;
    }
    if (piMultiple(ki, d) == theta) {
      return piString(ki, d);
    }
  }
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", theta);
  return buf.data();
}

namespace {

std::string conditionList(const std::vector<Condition>& guards) {
  std::string s;
  for (std::size_t i = 0; i < guards.size(); ++i) {
    if (i > 0) {
      s += " && ";
    }
    if (guards[i].polarity == Polarity::Neg) {
      s += "!";
    }
    s += "c[" + std::to_string(guards[i].index) + "]";
  }
  return s;
}

std::string gateStatement(const Apply& a) {
  std::ostringstream out;
  if (a.isGuarded()) {
    out << "if (" << conditionList(a.guards) << ") ";
  }
  const bool allPositive =
      std::all_of(a.controls.begin(), a.controls.end(),
                  [](const Condition& c) { return c.polarity == Polarity::Pos; });
  std::string name(a.gate.name());
  std::size_t printedControls = 0;
  if (allPositive && a.gate.type == GateType::X && a.controls.size() == 1) {
    name = "cx";
    printedControls = 1;
  } else if (allPositive && a.gate.type == GateType::X && a.controls.size() == 2) {
    name = "ccx";
    printedControls = 2;
  } else if (allPositive && a.gate.type == GateType::Z && a.controls.size() == 1) {
    name = "cz";
    printedControls = 1;
  }
  for (std::size_t i = printedControls; i < a.controls.size(); ++i) {
    out << (a.controls[i].polarity == Polarity::Pos ? "ctrl @ " : "negctrl @ ");
  }
  out << name;
  if (a.gate.isParametrised()) {
    out << "(" << formatAngle(a.gate.angle) << ")";
  }
  // Operands follow modifier order: the short-form controls are the last
  // modifiers, so listing all controls in order matches both forms.
  std::vector<Qubit> operands;
  for (std::size_t i = printedControls; i < a.controls.size(); ++i) {
    operands.push_back(a.controls[i].index);
  }
  for (std::size_t i = 0; i < printedControls; ++i) {
    operands.push_back(a.controls[i].index);
  }
  operands.insert(operands.end(), a.targets.begin(), a.targets.end());
  for (std::size_t i = 0; i < operands.size(); ++i) {
    out << (i == 0 ? " " : ", ") << "q[" << operands[i] << "]";
  }
  out << ";";
  return out.str();
}

} // namespace

std::string emitInstruction(const Instruction& instr) {
  if (const auto* a = std::get_if<Apply>(&instr)) {
    return gateStatement(*a);
  }
  if (const auto* m = std::get_if<Measure>(&instr)) {
    std::string s = "c[" + std::to_string(m->reg) + "] = measure q[" +
                    std::to_string(m->qubit) + "];";
    if (m->negated) {
      s += "\nc[" + std::to_string(m->reg) + "] = !c[" +
           std::to_string(m->reg) + "];";
    }
    return s;
  }
  return "reset q[" + std::to_string(std::get<Reset>(instr).qubit) + "];";
}

std::string emitQasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  out << "qubit[" << circuit.numQubits << "] q;\n";
  if (circuit.numRegisters > 0) {
    out << "bit[" << circuit.numRegisters << "] c;\n";
  }
  if (circuit.globalPhase != 0.0) {
    out << "gphase(" << formatAngle(circuit.globalPhase) << ");\n";
  }
  for (const auto& instr : circuit.body) {
    out << emitInstruction(instr) << "\n";
  }
  return out.str();
}

} // namespace dequant
