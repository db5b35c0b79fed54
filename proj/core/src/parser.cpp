#include "gjp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gjp/error.hpp"
#include "overloaded.hpp"

namespace gjp {

using detail::Overloaded;

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-'; }

bool is_name(std::string_view s) {
  if (s.empty() || !is_name_start(s[0])) {
    return false;
  }
  for (char c : s) {
    if (!is_name_char(c)) {
      return false;
    }
  }
  return true;
}

bool is_word_char(char c) {
  return is_name_char(c) || c == '<' || c == '>' || c == '=' || c == '!' || c == '.' || c == '+';
}

// ---------------------------------------------------------------------------
// Formula s-expressions

struct Token {
  enum class Kind { Open, Close, Word, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class FormulaLexer {
 public:
  FormulaLexer(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else if (c == '(' || c == ')') {
        out.push_back({c == '(' ? Token::Kind::Open : Token::Kind::Close, std::string(1, c), line_, column_});
        advance();
      } else if (is_word_char(c)) {
        Token tok{Token::Kind::Word, {}, line_, column_};
        while (pos_ < text_.size() && is_word_char(text_[pos_])) {
          tok.text += text_[pos_];
          advance();
        }
        out.push_back(std::move(tok));
      } else {
        throw ParseError(ParseErrorKind::Lexical, line_, column_, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Token::Kind::End, "", line_, column_});
    return out;
  }

 private:
  void advance() {
    ++pos_;
    ++column_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

std::optional<Relation> relation_from(std::string_view s) {
  if (s == "=") return Relation::Eq;
  if (s == "!=") return Relation::Ne;
  if (s == "<") return Relation::Lt;
  if (s == "<=") return Relation::Le;
  if (s == ">") return Relation::Gt;
  if (s == ">=") return Relation::Ge;
  return std::nullopt;
}

struct GroupOp {
  Modality modality;
  GroupMode mode;
};

std::optional<GroupOp> group_op_from(std::string_view s) {
  if (s.size() != 2) {
    return std::nullopt;
  }
  GroupOp op{};
  switch (s[0]) {
    case 'E':
      op.mode = GroupMode::Uniform;
      break;
    case 'D':
      op.mode = GroupMode::Distributed;
      break;
    case 'C':
      op.mode = GroupMode::Common;
      break;
    default:
      return std::nullopt;
  }
  switch (s[1]) {
    case 'S':
      op.modality = Modality::Sees;
      break;
    case 'K':
      op.modality = Modality::Knows;
      break;
    case 'B':
      op.modality = Modality::Believes;
      break;
    default:
      return std::nullopt;
  }
  return op;
}

class FormulaParser {
 public:
  FormulaParser(const Signature& sig, std::vector<Token> tokens) : sig_(sig), tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse(false);
    if (peek().kind != Token::Kind::End) {
      fail(ParseErrorKind::Syntax, peek(), "unexpected trailing input '" + peek().text + "'");
    }
    return f;
  }

 private:
  [[noreturn]] static void fail(ParseErrorKind kind, const Token& at, const std::string& reason) {
    throw ParseError(kind, at.line, at.column, reason);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Token::Kind kind, const char* what) {
    const Token& tok = next();
    if (tok.kind != kind) {
      fail(ParseErrorKind::Syntax, tok, std::string("expected ") + what +
                                            (tok.kind == Token::Kind::End ? " before end of input"
                                                                          : ", got '" + tok.text + "'"));
    }
    return tok;
  }

  VarId variable(const Token& tok) const {
    if (tok.kind != Token::Kind::Word) {
      fail(ParseErrorKind::Syntax, tok, "expected a variable name");
    }
    if (auto var = sig_.find_variable(tok.text)) {
      return *var;
    }
    fail(ParseErrorKind::Reference, tok, "undeclared variable '" + tok.text + "'");
  }

  AgentId agent(const Token& tok) const {
    if (tok.kind != Token::Kind::Word) {
      fail(ParseErrorKind::Syntax, tok, "expected an agent name");
    }
    if (auto a = sig_.find_agent(tok.text)) {
      return *a;
    }
    fail(ParseErrorKind::Reference, tok, "undeclared agent '" + tok.text + "'");
  }

  Group group() {
    expect(Token::Kind::Open, "'(' opening an agent group");
    std::vector<AgentId> members;
    while (peek().kind == Token::Kind::Word) {
      members.push_back(agent(next()));
    }
    const Token& close = expect(Token::Kind::Close, "')' closing the agent group");
    if (members.empty()) {
      fail(ParseErrorKind::Grammar, close, "agent group must not be empty");
    }
    return Group(std::move(members));
  }

  Formula atom(Relation rel, const Token& op) {
    const Token& lhs_tok = next();
    const VarId lhs = variable(lhs_tok);
    const Token& rhs_tok = next();
    if (rhs_tok.kind != Token::Kind::Word) {
      fail(ParseErrorKind::Syntax, rhs_tok, "expected a variable or constant");
    }
    expect(Token::Kind::Close, "')' closing the atom");
    const auto& dom = sig_.domain(lhs);
    if (is_ordering(rel) && dom.kind() != ValueKind::Integer) {
      fail(ParseErrorKind::Type, op, "ordering '" + op.text + "' on non-integer variable '" + lhs_tok.text + "'");
    }
    if (auto rhs = sig_.find_variable(rhs_tok.text)) {
      if (sig_.domain(*rhs).kind() != dom.kind()) {
        fail(ParseErrorKind::Type, rhs_tok,
             "cannot compare '" + lhs_tok.text + "' with '" + rhs_tok.text + "' of a different type");
      }
      return Formula::atom(rel, lhs, *rhs);
    }
    if (auto value = sig_.parse_value(lhs, rhs_tok.text)) {
      return Formula::atom(rel, lhs, *value);
    }
    if (dom.kind() == ValueKind::Symbol && is_name(rhs_tok.text) && !sig_.find_symbol(rhs_tok.text)) {
      fail(ParseErrorKind::Reference, rhs_tok, "undeclared name '" + rhs_tok.text + "'");
    }
    fail(ParseErrorKind::Type, rhs_tok, "'" + rhs_tok.text + "' is not a value of '" + lhs_tok.text + "'");
  }

  // `no_belief` is set beneath seeing and knowledge operators.
  Formula parse(bool no_belief) {
    expect(Token::Kind::Open, "'('");
    const Token& op = next();
    if (op.kind != Token::Kind::Word) {
      fail(ParseErrorKind::Syntax, op, "expected an operator");
    }
    if (auto rel = relation_from(op.text)) {
      return atom(*rel, op);
    }
    if (op.text == "not") {
      Formula inner = parse(no_belief);
      expect(Token::Kind::Close, "')' closing 'not'");
      return Formula::negation(std::move(inner));
    }
    if (op.text == "and") {
      Formula acc = parse(no_belief);
      std::size_t count = 1;
      while (peek().kind == Token::Kind::Open) {
        acc = Formula::conjunction(std::move(acc), parse(no_belief));
        ++count;
      }
      const Token& close = expect(Token::Kind::Close, "')' closing 'and'");
      if (count < 2) {
        fail(ParseErrorKind::Syntax, close, "'and' needs at least two operands");
      }
      return acc;
    }
    if (op.text == "S" || op.text == "K" || op.text == "B") {
      const AgentId who = agent(next());
      if (op.text == "B") {
        if (no_belief) {
          fail(ParseErrorKind::Grammar, op, "belief operator beneath a seeing or knowledge operator");
        }
        Formula inner = parse(false);
        expect(Token::Kind::Close, "')' closing 'B'");
        return Formula::modal(Modality::Believes, who, std::move(inner));
      }
      if (op.text == "S" && peek().kind == Token::Kind::Word) {
        const VarId var = variable(next());
        expect(Token::Kind::Close, "')' closing 'S'");
        return Formula::sees(who, var);
      }
      Formula inner = parse(true);
      expect(Token::Kind::Close, "')' closing modal operator");
      return Formula::modal(op.text == "S" ? Modality::Sees : Modality::Knows, who, std::move(inner));
    }
    if (auto gop = group_op_from(op.text)) {
      Group members = group();
      if (gop->modality == Modality::Believes) {
        if (no_belief) {
          fail(ParseErrorKind::Grammar, op, "belief operator beneath a seeing or knowledge operator");
        }
        Formula inner = parse(false);
        expect(Token::Kind::Close, "')' closing group operator");
        return Formula::group_modal(Modality::Believes, gop->mode, std::move(members), std::move(inner));
      }
      if (gop->modality == Modality::Sees && peek().kind == Token::Kind::Word) {
        const VarId var = variable(next());
        expect(Token::Kind::Close, "')' closing group operator");
        return Formula::group_sees(gop->mode, std::move(members), var);
      }
      Formula inner = parse(true);
      expect(Token::Kind::Close, "')' closing group operator");
      return Formula::group_modal(gop->modality, gop->mode, std::move(members), std::move(inner));
    }
    fail(ParseErrorKind::Syntax, op, "unknown operator '" + op.text + "'");
  }

  const Signature& sig_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view mode_prefix(GroupMode mode) {
  switch (mode) {
    case GroupMode::Uniform:
      return "E";
    case GroupMode::Distributed:
      return "D";
    case GroupMode::Common:
      return "C";
  }
  return "?";
}

std::string_view modality_letter(Modality m) {
  switch (m) {
    case Modality::Sees:
      return "S";
    case Modality::Knows:
      return "K";
    case Modality::Believes:
      return "B";
  }
  return "?";
}

void print_group(const Signature& sig, const Group& group, std::string& out) {
  out += '(';
  bool first = true;
  for (auto a : group) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += sig.agent_name(a);
  }
  out += ')';
}

void print(const Signature& sig, const Formula& f, std::string& out) {
  std::visit(Overloaded{
                 [&](const Formula::Atom& a) {
                   out += '(';
                   out += relation_symbol(a.relation);
                   out += ' ';
                   out += sig.variable_name(a.lhs);
                   out += ' ';
                   if (const auto* v = std::get_if<Value>(&a.rhs)) {
                     out += sig.format(*v);
                   } else {
                     out += sig.variable_name(std::get<VarId>(a.rhs));
                   }
                   out += ')';
                 },
                 [&](const Formula::Not& n) {
                   out += "(not ";
                   print(sig, n.operand, out);
                   out += ')';
                 },
                 [&](const Formula::And& a) {
                   out += "(and ";
                   print(sig, a.lhs, out);
                   out += ' ';
                   print(sig, a.rhs, out);
                   out += ')';
                 },
                 [&](const Formula::SeesVar& s) {
                   out += "(S " + sig.agent_name(s.agent) + ' ' + sig.variable_name(s.var) + ')';
                 },
                 [&](const Formula::Modal& m) {
                   out += '(';
                   out += modality_letter(m.modality);
                   out += ' ' + sig.agent_name(m.agent) + ' ';
                   print(sig, m.operand, out);
                   out += ')';
                 },
                 [&](const Formula::GroupSeesVar& s) {
                   out += '(';
                   out += mode_prefix(s.mode);
                   out += "S ";
                   print_group(sig, s.group, out);
                   out += ' ' + sig.variable_name(s.var) + ')';
                 },
                 [&](const Formula::GroupModal& m) {
                   out += '(';
                   out += mode_prefix(m.mode);
                   out += modality_letter(m.modality);
                   out += ' ';
                   print_group(sig, m.group, out);
                   out += ' ';
                   print(sig, m.operand, out);
                   out += ')';
                 },
             },
             static_cast<const FormulaNode::variant&>(f.node()));
}

// ---------------------------------------------------------------------------
// Line-oriented declaration files

struct Word {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<Word> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++number;
    const auto end = text.find('\n', start);
    std::string raw(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i])) != 0) {
        ++i;
        continue;
      }
      Word w{{}, i + 1};
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])) == 0) {
        w.text += raw[i++];
      }
      line.words.push_back(std::move(w));
    }
    if (!line.words.empty()) {
      out.push_back(std::move(line));
    }
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail_at(ParseErrorKind kind, const Line& line, std::size_t word, const std::string& reason) {
  const std::size_t column = word < line.words.size() ? line.words[word].column
                                                       : line.text.size() + 1;
  throw ParseError(kind, line.number, column, reason);
}

const std::string& name_at(const Line& line, std::size_t i, const char* what) {
  if (i >= line.words.size()) {
    fail_at(ParseErrorKind::Syntax, line, i, std::string("missing ") + what);
  }
  if (!is_name(line.words[i].text)) {
    fail_at(ParseErrorKind::Lexical, line, i, std::string("invalid ") + what + " '" + line.words[i].text + "'");
  }
  return line.words[i].text;
}

void expect_count(const Line& line, std::size_t n) {
  if (line.words.size() > n) {
    fail_at(ParseErrorKind::Syntax, line, n, "unexpected '" + line.words[n].text + "'");
  }
  if (line.words.size() < n) {
    fail_at(ParseErrorKind::Syntax, line, line.words.size(), "line is incomplete");
  }
}

std::int64_t integer_at(const Line& line, std::size_t i, std::string_view token) {
  try {
    std::size_t used = 0;
    const std::string s(token);
    const auto v = std::stoll(s, &used);
    if (used == s.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  fail_at(ParseErrorKind::Lexical, line, i, "expected an integer, got '" + std::string(token) + "'");
}

ValueDomain parse_type(Signature& sig, const Line& line, std::size_t first) {
  if (first >= line.words.size()) {
    fail_at(ParseErrorKind::Syntax, line, first, "missing type");
  }
  const std::string& kind = line.words[first].text;
  const std::size_t argc = line.words.size() - first - 1;
  if (kind == "bool") {
    expect_count(line, first + 1);
    return ValueDomain::booleans();
  }
  if (kind == "int") {
    if (argc == 0) {
      fail_at(ParseErrorKind::Syntax, line, first + 1, "int type needs a range or values");
    }
    const std::string& spec = line.words[first + 1].text;
    if (auto dots = spec.find(".."); dots != std::string::npos) {
      expect_count(line, first + 2);
      const auto lo = integer_at(line, first + 1, std::string_view(spec).substr(0, dots));
      const auto hi = integer_at(line, first + 1, std::string_view(spec).substr(dots + 2));
      if (hi < lo) {
        fail_at(ParseErrorKind::Type, line, first + 1, "empty integer range");
      }
      if (hi - lo > 100000) {
        fail_at(ParseErrorKind::Type, line, first + 1, "integer range too large to enumerate");
      }
      return ValueDomain::integer_range(lo, hi);
    }
    std::vector<std::int64_t> values;
    for (std::size_t i = first + 1; i < line.words.size(); ++i) {
      values.push_back(integer_at(line, i, line.words[i].text));
    }
    return ValueDomain::integers(std::move(values));
  }
  if (kind == "enum") {
    if (argc == 0) {
      fail_at(ParseErrorKind::Syntax, line, first + 1, "enum type needs at least one symbol");
    }
    std::vector<Value> values;
    for (std::size_t i = first + 1; i < line.words.size(); ++i) {
      const auto& symbol = name_at(line, i, "enum symbol");
      if (symbol == "true" || symbol == "false") {
        fail_at(ParseErrorKind::Type, line, i, "reserved word '" + symbol + "' used as enum symbol");
      }
      const Value v = Value::symbol(sig.intern(symbol));
      if (std::find(values.begin(), values.end(), v) != values.end()) {
        fail_at(ParseErrorKind::Type, line, i, "duplicate enum symbol '" + symbol + "'");
      }
      values.push_back(v);
    }
    return ValueDomain(ValueKind::Symbol, std::move(values));
  }
  fail_at(ParseErrorKind::Type, line, first, "unknown type '" + kind + "'");
}

// Collects a formula that begins at word `first` of lines[i] and may span
// following lines until its parentheses balance. Advances `i` past it.
Formula formula_from(const Signature& sig, const std::vector<Line>& lines, std::size_t& i, std::size_t first) {
  const Line& start = lines[i];
  if (first >= start.words.size()) {
    fail_at(ParseErrorKind::Syntax, start, first, "missing formula");
  }
  const std::size_t column = start.words[first].column;
  std::string text = start.text.substr(column - 1);
  auto depth = [](const std::string& s) {
    long d = 0;
    for (char c : s) {
      d += c == '(' ? 1 : (c == ')' ? -1 : 0);
    }
    return d;
  };
  // Skipped blank lines become newlines so reported line numbers stay exact.
  std::size_t line_no = start.number;
  while (depth(text) > 0 && i + 1 < lines.size()) {
    ++i;
    text.append(lines[i].number - line_no, '\n');
    text += lines[i].text;
    line_no = lines[i].number;
  }
  ++i;
  return parse_formula(sig, text, start.number, column);
}

}  // namespace

Formula parse_formula(const Signature& signature, std::string_view text, std::size_t line, std::size_t column) {
  FormulaLexer lexer(text, line, column);
  FormulaParser parser(signature, lexer.run());
  return parser.parse_all();
}

std::string print_formula(const Signature& signature, const Formula& formula) {
  std::string out;
  print(signature, formula, out);
  return out;
}

PlanningDomain parse_domain(std::string_view text) {
  const auto lines = split_lines(text);
  auto sig = std::make_shared<Signature>();
  PlanningDomain domain;
  bool have_name = false;
  bool have_model = false;
  struct RawAction {
    std::string name;
    std::vector<std::size_t> body;  // indices into lines
    std::size_t header;
  };
  std::vector<RawAction> raw_actions;

  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string& key = line.words[0].text;
    if (key == "domain") {
      if (have_name) {
        fail_at(ParseErrorKind::Grammar, line, 0, "duplicate domain name");
      }
      domain.name = name_at(line, 1, "domain name");
      expect_count(line, 2);
      have_name = true;
      ++i;
    } else if (key == "agent" || key == "var") {
      const std::string& name = name_at(line, 1, key == "agent" ? "agent name" : "variable name");
      if (line.words.size() < 3 || line.words[2].text != ":") {
        fail_at(ParseErrorKind::Syntax, line, 2, "expected ':' after the name");
      }
      if (sig->find_variable(name)) {
        fail_at(ParseErrorKind::Reference, line, 1, "duplicate declaration of '" + name + "'");
      }
      if (!raw_actions.empty()) {
        fail_at(ParseErrorKind::Grammar, line, 0, "declarations must precede actions");
      }
      ValueDomain type = parse_type(*sig, line, 3);
      if (key == "agent") {
        sig->add_agent(name, std::move(type));
      } else {
        sig->add_variable(name, std::move(type));
      }
      ++i;
    } else if (key == "observation") {
      if (have_model) {
        fail_at(ParseErrorKind::Grammar, line, 0, "duplicate observation model");
      }
      domain.observation = name_at(line, 1, "observation model");
      expect_count(line, 2);
      if (!ModelRegistry::builtin().contains(domain.observation)) {
        fail_at(ParseErrorKind::Reference, line, 1, "unknown observation model '" + domain.observation + "'");
      }
      have_model = true;
      ++i;
    } else if (key == "param") {
      ModelParam p{name_at(line, 1, "parameter key"), {}};
      for (std::size_t w = 2; w < line.words.size(); ++w) {
        p.args.push_back(line.words[w].text);
      }
      domain.model_params.push_back(std::move(p));
      ++i;
    } else if (key == "action") {
      RawAction action{name_at(line, 1, "action name"), {}, i};
      expect_count(line, 2);
      for (const auto& other : raw_actions) {
        if (other.name == action.name) {
          fail_at(ParseErrorKind::Reference, line, 1, "duplicate action '" + action.name + "'");
        }
      }
      ++i;
      bool closed = false;
      while (i < lines.size()) {
        if (lines[i].words[0].text == "end") {
          expect_count(lines[i], 1);
          closed = true;
          ++i;
          break;
        }
        if (lines[i].words[0].text == "action") {
          break;
        }
        action.body.push_back(i);
        ++i;
      }
      if (!closed) {
        fail_at(ParseErrorKind::Syntax, line, 0, "action '" + action.name + "' is missing 'end'");
      }
      raw_actions.push_back(std::move(action));
    } else {
      fail_at(ParseErrorKind::Syntax, line, 0, "unknown keyword '" + key + "'");
    }
  }

  if (!have_name) {
    throw ParseError(ParseErrorKind::Grammar, 1, 1, "missing 'domain' line");
  }
  if (!have_model) {
    throw ParseError(ParseErrorKind::Grammar, 1, 1, "missing 'observation' line");
  }
  if (sig->agent_count() == 0) {
    throw ParseError(ParseErrorKind::Grammar, 1, 1, "domain declares no agents");
  }

  for (const auto& raw : raw_actions) {
    Action action{raw.name, std::nullopt, {}};
    std::size_t k = 0;
    while (k < raw.body.size()) {
      std::size_t li = raw.body[k];
      const Line& line = lines[li];
      const std::string& key = line.words[0].text;
      if (key == "pre") {
        if (action.precondition) {
          fail_at(ParseErrorKind::Grammar, line, 0, "action has more than one precondition");
        }
        const std::size_t before = li;
        action.precondition = formula_from(*sig, lines, li, 1);
        k += li - before;
        continue;
      }
      if (key != "eff") {
        fail_at(ParseErrorKind::Syntax, line, 0, "expected 'pre', 'eff' or 'end'");
      }
      expect_count(line, 4);
      const auto& target_name = name_at(line, 1, "effect variable");
      const auto target = sig->find_variable(target_name);
      if (!target) {
        fail_at(ParseErrorKind::Reference, line, 1, "undeclared variable '" + target_name + "'");
      }
      const std::string& op = line.words[2].text;
      const std::string& arg = line.words[3].text;
      if (op == ":=") {
        if (auto source = sig->find_variable(arg)) {
          if (sig->domain(*source).kind() != sig->domain(*target).kind()) {
            fail_at(ParseErrorKind::Type, line, 3, "cannot copy '" + arg + "' into '" + target_name + "'");
          }
          action.effects.push_back(Effect::copy(*target, *source));
        } else if (auto value = sig->parse_value(*target, arg)) {
          if (!sig->domain(*target).contains(*value)) {
            fail_at(ParseErrorKind::Type, line, 3, "'" + arg + "' is outside the domain of '" + target_name + "'");
          }
          action.effects.push_back(Effect::assign(*target, *value));
        } else {
          fail_at(ParseErrorKind::Type, line, 3, "'" + arg + "' is not a value of '" + target_name + "'");
        }
      } else if (op == "+=" || op == "-=") {
        if (sig->domain(*target).kind() != ValueKind::Integer) {
          fail_at(ParseErrorKind::Type, line, 2, "increment of non-integer variable '" + target_name + "'");
        }
        const auto delta = integer_at(line, 3, arg);
        action.effects.push_back(Effect::increment(*target, op == "+=" ? delta : -delta));
      } else {
        fail_at(ParseErrorKind::Syntax, line, 2, "expected ':=', '+=' or '-='");
      }
      ++k;
    }
    domain.actions.push_back(std::move(action));
  }

  domain.signature = sig;
  try {
    (void)ModelRegistry::builtin().create(domain.observation, *sig, domain.model_params);
  } catch (const ValidationError& e) {
    for (const auto& line : lines) {
      if (line.words[0].text == "observation") {
        fail_at(ParseErrorKind::Reference, line, 1, e.what());
      }
    }
    throw;
  }
  return domain;
}

Problem parse_problem(const PlanningDomain& domain, std::string_view text) {
  const Signature& sig = *domain.signature;
  const auto lines = split_lines(text);
  Problem problem;
  problem.initial = State(sig.variable_count());
  bool have_name = false;
  bool have_domain = false;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string& key = line.words[0].text;
    if (key == "problem") {
      problem.name = name_at(line, 1, "problem name");
      expect_count(line, 2);
      have_name = true;
      ++i;
    } else if (key == "domain") {
      problem.domain_name = name_at(line, 1, "domain name");
      expect_count(line, 2);
      if (problem.domain_name != domain.name) {
        fail_at(ParseErrorKind::Reference, line, 1,
                "problem is for domain '" + problem.domain_name + "', not '" + domain.name + "'");
      }
      have_domain = true;
      ++i;
    } else if (key == "init") {
      expect_count(line, 3);
      const auto& name = name_at(line, 1, "variable name");
      const auto var = sig.find_variable(name);
      if (!var) {
        fail_at(ParseErrorKind::Reference, line, 1, "undeclared variable '" + name + "'");
      }
      if (problem.initial.has(*var)) {
        fail_at(ParseErrorKind::Grammar, line, 1, "'" + name + "' initialised twice");
      }
      const auto value = sig.parse_value(*var, line.words[2].text);
      if (!value || !sig.domain(*var).contains(*value)) {
        fail_at(ParseErrorKind::Type, line, 2, "'" + line.words[2].text + "' is not a value of '" + name + "'");
      }
      problem.initial.set(*var, *value);
      ++i;
    } else if (key == "goal") {
      if (line.words.size() < 2) {
        fail_at(ParseErrorKind::Syntax, line, 1, "missing goal target");
      }
      const std::string& target = line.words[1].text;
      Ternary t{};
      if (target == "true") {
        t = Ternary::True;
      } else if (target == "false") {
        t = Ternary::False;
      } else if (target == "unknown") {
        t = Ternary::Unknown;
      } else {
        fail_at(ParseErrorKind::Syntax, line, 1, "goal target must be true, false or unknown");
      }
      problem.goals.push_back(Goal{formula_from(sig, lines, i, 2), t});
    } else if (key == "max-depth" || key == "node-limit") {
      expect_count(line, 2);
      const auto n = integer_at(line, 1, line.words[1].text);
      if (n < 0) {
        fail_at(ParseErrorKind::Type, line, 1, key + " must be non-negative");
      }
      (key == "max-depth" ? problem.max_depth : problem.node_limit) = static_cast<std::size_t>(n);
      ++i;
    } else {
      fail_at(ParseErrorKind::Syntax, line, 0, "unknown keyword '" + key + "'");
    }
  }
  if (!have_name) {
    throw ParseError(ParseErrorKind::Grammar, 1, 1, "missing 'problem' line");
  }
  if (!have_domain) {
    throw ParseError(ParseErrorKind::Grammar, 1, 1, "missing 'domain' line");
  }
  for (auto var : sig.variables()) {
    if (!problem.initial.has(var)) {
      throw ParseError(ParseErrorKind::Reference, lines.empty() ? 1 : lines.back().number, 1,
                       "variable '" + sig.variable_name(var) + "' has no initial value");
    }
  }
  if (problem.goals.empty()) {
    throw ParseError(ParseErrorKind::Grammar, lines.empty() ? 1 : lines.back().number, 1, "problem has no goal");
  }
  return problem;
}

Trace parse_trace(const PlanningDomain& domain, std::string_view text) {
  const Signature& sig = *domain.signature;
  const auto lines = split_lines(text);
  Trace trace;
  State initial(sig.variable_count());
  bool any_init = false;
  for (const auto& line : lines) {
    const std::string& key = line.words[0].text;
    if (key == "init") {
      expect_count(line, 3);
      const auto& name = name_at(line, 1, "variable name");
      const auto var = sig.find_variable(name);
      if (!var) {
        fail_at(ParseErrorKind::Reference, line, 1, "undeclared variable '" + name + "'");
      }
      const auto value = sig.parse_value(*var, line.words[2].text);
      if (!value || !sig.domain(*var).contains(*value)) {
        fail_at(ParseErrorKind::Type, line, 2, "'" + line.words[2].text + "' is not a value of '" + name + "'");
      }
      initial.set(*var, *value);
      any_init = true;
    } else if (key == "action") {
      expect_count(line, 2);
      const auto& name = name_at(line, 1, "action name");
      if (domain.find_action(name) == nullptr) {
        fail_at(ParseErrorKind::Reference, line, 1, "unknown action '" + name + "'");
      }
      if (!trace.states.empty()) {
        fail_at(ParseErrorKind::Grammar, line, 0, "a trace lists either actions or states, not both");
      }
      trace.actions.push_back(name);
    } else if (key == "state") {
      if (any_init || !trace.actions.empty()) {
        fail_at(ParseErrorKind::Grammar, line, 0, "a trace lists either actions or states, not both");
      }
      State s(sig.variable_count());
      for (std::size_t w = 1; w < line.words.size(); ++w) {
        const std::string& item = line.words[w].text;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
          fail_at(ParseErrorKind::Syntax, line, w, "expected VAR=VALUE");
        }
        const std::string name = item.substr(0, eq);
        const auto var = sig.find_variable(name);
        if (!var) {
          fail_at(ParseErrorKind::Reference, line, w, "undeclared variable '" + name + "'");
        }
        const auto value = sig.parse_value(*var, item.substr(eq + 1));
        if (!value || !sig.domain(*var).contains(*value)) {
          fail_at(ParseErrorKind::Type, line, w, "'" + item.substr(eq + 1) + "' is not a value of '" + name + "'");
        }
        s.set(*var, *value);
      }
      trace.states.push_back(std::move(s));
    } else {
      fail_at(ParseErrorKind::Syntax, line, 0, "unknown keyword '" + key + "'");
    }
  }
  if (trace.states.empty()) {
    if (!any_init) {
      throw ParseError(ParseErrorKind::Grammar, lines.empty() ? 1 : lines.front().number, 1,
                       "trace needs init lines or state lines");
    }
    for (auto var : sig.variables()) {
      if (!initial.has(var)) {
        throw ParseError(ParseErrorKind::Reference, lines.front().number, 1,
                         "variable '" + sig.variable_name(var) + "' has no initial value");
      }
    }
    trace.initial = std::move(initial);
  }
  return trace;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace gjp
