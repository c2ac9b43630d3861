// Copyright 2026 The qcforensics Authors
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

#include "qcf/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qcf {

namespace {

using json = nlohmann::json;

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws_and_comments();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.type = Tok::End;
      tok_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        bump();
      }
      tok_.type = Tok::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
              src_[pos_] == 'e' || src_[pos_] == 'E' ||
              ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
               (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')))) {
        bump();
      }
      tok_.type = Tok::Number;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      try {
        std::size_t used = 0;
        tok_.value = std::stod(tok_.text, &used);
        if (used != tok_.text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw QasmError(QasmErrorKind::Syntax, tok_.line, tok_.col,
                        "malformed number '" + tok_.text + "'");
      }
      return;
    }
    if (c == '"') {
      bump();
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') bump();
      if (pos_ >= src_.size()) {
        throw QasmError(QasmErrorKind::Syntax, tok_.line, tok_.col,
                        "unterminated string literal");
      }
      tok_.type = Tok::String;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      bump();  // closing quote
      return;
    }
    tok_.type = Tok::Punct;
    tok_.text = std::string(1, c);
    bump();
  }

  void skip_ws_and_comments() {
    for (;;) {
      while (pos_ < src_.size() &&
             std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        bump();
      }
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      return;
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

const std::set<std::string> kReservedUnsupported = {
    "creg", "measure", "barrier", "gate", "opaque", "if", "reset", "include"};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Circuit parse() {
    expect_ident("OPENQASM");
    Token ver = expect(Tok::Number, "version number");
    if (ver.text != "2.0" && ver.text != "2") {
      throw QasmError(QasmErrorKind::Syntax, ver.line, ver.col,
                      "unsupported OPENQASM version '" + ver.text + "'");
    }
    expect_punct(";");

    // Optional standard include; accepted and ignored.
    if (lex_.peek().type == Tok::Ident && lex_.peek().text == "include") {
      Token inc = lex_.next();
      Token file = expect(Tok::String, "include file name");
      if (file.text != "qelib1.inc") {
        throw QasmError(QasmErrorKind::Syntax, inc.line, inc.col,
                        "only the qelib1.inc include is accepted");
      }
      expect_punct(";");
    }

    Token qreg = expect(Tok::Ident, "qreg declaration");
    if (qreg.text != "qreg") {
      throw QasmError(QasmErrorKind::Syntax, qreg.line, qreg.col,
                      "expected qreg declaration, got '" + qreg.text + "'");
    }
    reg_name_ = expect(Tok::Ident, "register name").text;
    expect_punct("[");
    Token size = expect(Tok::Number, "register size");
    const long n = std::lround(size.value);
    if (n <= 0 || size.text.find('.') != std::string::npos) {
      throw QasmError(QasmErrorKind::Syntax, size.line, size.col,
                      "register size must be a positive integer");
    }
    expect_punct("]");
    expect_punct(";");

    Circuit c(static_cast<int>(n));
    while (lex_.peek().type != Tok::End) {
      parse_statement(c);
    }
    return c;
  }

 private:
  void parse_statement(Circuit& c) {
    Token head = expect(Tok::Ident, "gate name");
    if (head.text == "qreg") {
      throw QasmError(QasmErrorKind::Syntax, head.line, head.col,
                      "only a single qreg declaration is supported");
    }
    if (kReservedUnsupported.count(head.text)) {
      throw QasmError(QasmErrorKind::Syntax, head.line, head.col,
                      "unsupported statement '" + head.text + "'");
    }
    auto kind = gate_kind_from_name(head.text);
    if (!kind) {
      throw QasmError(QasmErrorKind::UnknownGate, head.line, head.col,
                      "unknown gate name '" + head.text + "'");
    }

    std::vector<double> params;
    if (lex_.peek().type == Tok::Punct && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().type == Tok::Punct && lex_.peek().text == ")")) {
        params.push_back(parse_expr());
        while (lex_.peek().type == Tok::Punct && lex_.peek().text == ",") {
          lex_.next();
          params.push_back(parse_expr());
        }
      }
      expect_punct(")");
    }
    if (static_cast<int>(params.size()) != gate_param_count(*kind)) {
      throw QasmError(QasmErrorKind::ArityMismatch, head.line, head.col,
                      "gate '" + head.text + "' expects " +
                          std::to_string(gate_param_count(*kind)) +
                          " parameter(s), got " + std::to_string(params.size()));
    }

    std::vector<int> qubits;
    qubits.push_back(parse_qubit(c.num_qubits));
    while (lex_.peek().type == Tok::Punct && lex_.peek().text == ",") {
      lex_.next();
      qubits.push_back(parse_qubit(c.num_qubits));
    }
    expect_punct(";");

    if (static_cast<int>(qubits.size()) != gate_arity(*kind)) {
      throw QasmError(QasmErrorKind::ArityMismatch, head.line, head.col,
                      "gate '" + head.text + "' expects " +
                          std::to_string(gate_arity(*kind)) + " qubit(s), got " +
                          std::to_string(qubits.size()));
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
      throw QasmError(QasmErrorKind::ArityMismatch, head.line, head.col,
                      "duplicate qubit operand");
    }
    c.append(Gate::make(*kind, std::move(qubits), std::move(params)));
  }

  int parse_qubit(int num_qubits) {
    Token name = expect(Tok::Ident, "qubit reference");
    if (name.text != reg_name_) {
      throw QasmError(QasmErrorKind::Syntax, name.line, name.col,
                      "unknown register '" + name.text + "'");
    }
    expect_punct("[");
    Token idx = expect(Tok::Number, "qubit index");
    const long q = std::lround(idx.value);
    if (idx.text.find('.') != std::string::npos || q < 0) {
      throw QasmError(QasmErrorKind::Syntax, idx.line, idx.col,
                      "qubit index must be a non-negative integer");
    }
    expect_punct("]");
    if (q >= num_qubits) {
      throw QasmError(QasmErrorKind::QubitRange, idx.line, idx.col,
                      "qubit index " + std::to_string(q) +
                          " outside register of size " + std::to_string(num_qubits));
    }
    return static_cast<int>(q);
  }

  // expr := term (('+'|'-') term)*
  double parse_expr() {
    double v = parse_term();
    while (lex_.peek().type == Tok::Punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const std::string op = lex_.next().text;
      const double rhs = parse_term();
      v = op == "+" ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := factor (('*'|'/') factor)*
  double parse_term() {
    double v = parse_factor();
    while (lex_.peek().type == Tok::Punct &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const std::string op = lex_.next().text;
      const double rhs = parse_factor();
      v = op == "*" ? v * rhs : v / rhs;
    }
    return v;
  }

  // factor := '-' factor | '(' expr ')' | number | 'pi'
  double parse_factor() {
    const Token& t = lex_.peek();
    if (t.type == Tok::Punct && t.text == "-") {
      lex_.next();
      return -parse_factor();
    }
    if (t.type == Tok::Punct && t.text == "(") {
      lex_.next();
      const double v = parse_expr();
      expect_punct(")");
      return v;
    }
    if (t.type == Tok::Number) {
      return lex_.next().value;
    }
    if (t.type == Tok::Ident && t.text == "pi") {
      lex_.next();
      return M_PI;
    }
    throw QasmError(QasmErrorKind::Syntax, t.line, t.col,
                    "expected angle expression, got '" + t.text + "'");
  }

  Token expect(Tok type, const std::string& what) {
    if (lex_.peek().type != type) {
      const Token& t = lex_.peek();
      throw QasmError(QasmErrorKind::Syntax, t.line, t.col,
                      "expected " + what + ", got '" +
                          (t.type == Tok::End ? "<eof>" : t.text) + "'");
    }
    return lex_.next();
  }

  void expect_ident(const std::string& word) {
    Token t = expect(Tok::Ident, "'" + word + "'");
    if (t.text != word) {
      throw QasmError(QasmErrorKind::Syntax, t.line, t.col,
                      "expected '" + word + "', got '" + t.text + "'");
    }
  }

  void expect_punct(const std::string& p) {
    const Token& t = lex_.peek();
    if (t.type != Tok::Punct || t.text != p) {
      throw QasmError(QasmErrorKind::Syntax, t.line, t.col,
                      "expected '" + p + "', got '" +
                          (t.type == Tok::End ? "<eof>" : t.text) + "'");
    }
    lex_.next();
  }

  Lexer lex_;
  std::string reg_name_;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string emit_impl(const Circuit& c, std::vector<std::size_t>* opaque_out) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits << "];\n";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (is_opaque(g.kind)) {
      if (!opaque_out) {
        throw QasmError(QasmErrorKind::UnsupportedGate, 0, 0,
                        "circuit contains an opaque unitary; sidecar emission disabled");
      }
      opaque_out->push_back(i);
      os << "// opaque unitary gate " << i << " on q[" << g.qubits[0] << "]";
      if (g.qubits.size() == 2) os << ",q[" << g.qubits[1] << "]";
      os << " (see sidecar)\n";
      continue;
    }
    os << gate_name(g.kind);
    if (!g.params.empty()) {
      os << "(";
      for (std::size_t p = 0; p < g.params.size(); ++p) {
        if (p) os << ",";
        os << format_angle(g.params[p]);
      }
      os << ")";
    }
    os << " ";
    for (std::size_t q = 0; q < g.qubits.size(); ++q) {
      if (q) os << ",";
      os << "q[" << g.qubits[q] << "]";
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit& c) { return emit_impl(c, nullptr); }

EmittedQasm emit_qasm_with_sidecar(const Circuit& c) {
  EmittedQasm out;
  std::vector<std::size_t> opaque;
  out.qasm = emit_impl(c, &opaque);
  if (opaque.empty()) return out;

  json side;
  side["version"] = 1;
  side["unitaries"] = json::array();
  for (std::size_t idx : opaque) {
    const Gate& g = c.gates[idx];
    json entry;
    entry["index"] = idx;
    entry["qubits"] = g.qubits;
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.matrix->rows(); ++r) {
      for (Eigen::Index cc = 0; cc < g.matrix->cols(); ++cc) {
        rows.push_back({(*g.matrix)(r, cc).real(), (*g.matrix)(r, cc).imag()});
      }
    }
    entry["matrix"] = std::move(rows);
    side["unitaries"].push_back(std::move(entry));
  }
  out.sidecar_json = side.dump(2) + "\n";
  return out;
}

void write_circuit(const Circuit& c, const std::string& path) {
  EmittedQasm e = emit_qasm_with_sidecar(c);
  {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << e.qasm;
  }
  if (e.sidecar_json) {
    std::ofstream f(path + ".unitaries.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path + ".unitaries.json");
    f << *e.sidecar_json;
  }
}

Circuit read_circuit(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  Circuit c = parse_qasm(buf.str());

  std::ifstream side(path + ".unitaries.json", std::ios::binary);
  if (!side) return c;
  json doc;
  try {
    side >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed sidecar " + path + ".unitaries.json: " + e.what());
  }
  if (!doc.contains("unitaries") || !doc["unitaries"].is_array()) {
    throw std::runtime_error("sidecar missing 'unitaries' array: " + path);
  }

  struct Entry {
    std::size_t index;
    Gate gate;
  };
  std::vector<Entry> entries;
  for (const json& e : doc["unitaries"]) {
    const std::size_t index = e.at("index").get<std::size_t>();
    const std::vector<int> qubits = e.at("qubits").get<std::vector<int>>();
    const json& m = e.at("matrix");
    const int dim = qubits.size() == 1 ? 2 : 4;
    if (static_cast<int>(m.size()) != dim * dim) {
      throw std::runtime_error("sidecar matrix has wrong size: " + path);
    }
    Eigen::MatrixXcd mat(dim, dim);
    int k = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index cc = 0; cc < dim; ++cc, ++k) {
        mat(r, cc) = Complex(m[k][0].get<double>(), m[k][1].get<double>());
      }
    }
    Gate g = qubits.size() == 1
                 ? Gate::opaque1(qubits[0], Eigen::Matrix2cd(mat))
                 : Gate::opaque2(qubits[0], qubits[1], Eigen::Matrix4cd(mat));
    entries.push_back({index, std::move(g)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (Entry& e : entries) {
    const std::size_t at = std::min(e.index, c.gates.size());
    c.gates.insert(c.gates.begin() + at, std::move(e.gate));
  }
  return c;
}

}  // namespace qcf
