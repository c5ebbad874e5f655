#include "ringlab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ringlab/error.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

bool RingExpr::operator==(const RingExpr& other) const {
  return kind == other.kind && args == other.args && numbers == other.numbers &&
         list == other.list && name == other.name;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Token {
  enum class Type { Ident, Int, LParen, RParen, LBracket, RBracket, Comma, End };
  Type type = Type::End;
  std::string text;
  int value = 0;
  size_t offset = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      current_.type = Token::Type::Int;
      current_.text = std::string(text_.substr(pos_, end - pos_));
      current_.value = std::stoi(current_.text);
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      current_.type = Token::Type::Ident;
      current_.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    switch (c) {
      case '(': current_.type = Token::Type::LParen; break;
      case ')': current_.type = Token::Type::RParen; break;
      case '[': current_.type = Token::Type::LBracket; break;
      case ']': current_.type = Token::Type::RBracket; break;
      case ',': current_.type = Token::Type::Comma; break;
      default:
        raise(ErrorKind::ParseError, "syntax error at offset " + std::to_string(pos_) +
                                         ": unexpected character '" + std::string(1, c) + "'");
    }
    current_.text = std::string(1, c);
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token current_;
};

[[noreturn]] void expected(const Token& got, const std::string& what) {
  raise(ErrorKind::ParseError,
        "syntax error at offset " + std::to_string(got.offset) + ": expected " + what +
            (got.type == Token::Type::End ? " but reached end of input"
                                          : " but found '" + got.text + "'"));
}

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  RingExpr parse() {
    RingExpr e = expr();
    if (lex_.peek().type != Token::Type::End) expected(lex_.peek(), "end of input");
    return e;
  }

private:
  Token expect(Token::Type type, const std::string& what) {
    if (lex_.peek().type != type) expected(lex_.peek(), what);
    return lex_.take();
  }

  int integer() { return expect(Token::Type::Int, "an integer").value; }

  std::string ident(const std::string& what) { return expect(Token::Type::Ident, what).text; }

  std::vector<int> int_list() {
    expect(Token::Type::LBracket, "'['");
    std::vector<int> out;
    out.push_back(integer());
    while (lex_.peek().type == Token::Type::Comma) {
      lex_.take();
      out.push_back(integer());
    }
    expect(Token::Type::RBracket, "']'");
    return out;
  }

  RingExpr expr() {
    const Token head = lex_.peek();
    const std::string ctor = lower(ident("a constructor name"));
    RingExpr e;
    expect(Token::Type::LParen, "'('");
    if (ctor == "z") {
      e.kind = RingExpr::Kind::Zmod;
      e.numbers.push_back(integer());
    } else if (ctor == "f") {
      e.kind = RingExpr::Kind::Field;
      e.numbers.push_back(integer());
    } else if (ctor == "prod") {
      e.kind = RingExpr::Kind::Product;
      e.args.push_back(expr());
      while (lex_.peek().type == Token::Type::Comma) {
        lex_.take();
        e.args.push_back(expr());
      }
    } else if (ctor == "m" || ctor == "t") {
      e.kind = ctor == "m" ? RingExpr::Kind::Matrix : RingExpr::Kind::Triangular;
      e.numbers.push_back(integer());
      expect(Token::Type::Comma, "','");
      e.args.push_back(expr());
    } else if (ctor == "te" || ctor == "te2") {
      e.kind = ctor == "te" ? RingExpr::Kind::TrivialExt : RingExpr::Kind::TrivialExtSquare;
      e.args.push_back(expr());
    } else if (ctor == "gr") {
      e.kind = RingExpr::Kind::GroupRing;
      e.args.push_back(expr());
      expect(Token::Type::Comma, "','");
      const std::string raw = ident("a group name");
      const auto g = group_by_name(raw);
      if (!g)
        raise(ErrorKind::ParseError, "syntax error at offset " +
                                         std::to_string(head.offset) + ": unknown group '" +
                                         raw + "'");
      e.name = g->label;
    } else if (ctor == "quot") {
      e.kind = RingExpr::Kind::Quotient;
      e.args.push_back(expr());
      expect(Token::Type::Comma, "','");
      e.list = int_list();
    } else if (ctor == "corner") {
      e.kind = RingExpr::Kind::Corner;
      e.args.push_back(expr());
      expect(Token::Type::Comma, "','");
      e.numbers.push_back(integer());
    } else if (ctor == "morita") {
      e.kind = RingExpr::Kind::MoritaNamed;
      const std::string raw = ident("a Morita context name");
      std::string canon = lower(raw);
      std::transform(canon.begin(), canon.end(), canon.begin(),
                     [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      const auto& names = morita_example_names();
      if (std::find(names.begin(), names.end(), canon) == names.end()) {
        std::string known;
        for (const std::string& n : names) known += (known.empty() ? "" : ", ") + n;
        raise(ErrorKind::ParseError, "syntax error at offset " + std::to_string(head.offset) +
                                         ": unknown Morita context '" + raw + "' (known: " +
                                         known + ")");
      }
      e.name = canon;
    } else {
      raise(ErrorKind::ParseError,
            "unknown constructor '" + head.text + "' at offset " + std::to_string(head.offset) +
                " (expected one of Z, F, prod, M, T, TE, TE2, GR, quot, corner, morita)");
    }
    expect(Token::Type::RParen, "')'");
    return e;
  }

  Lexer lex_;
};

}  // namespace

RingExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::Zmod:
      return "Z(" + std::to_string(e.numbers.at(0)) + ")";
    case RingExpr::Kind::Field:
      return "F(" + std::to_string(e.numbers.at(0)) + ")";
    case RingExpr::Kind::Product: {
      std::string out = "prod(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print_expr(e.args[i]);
      }
      return out + ")";
    }
    case RingExpr::Kind::Matrix:
      return "M(" + std::to_string(e.numbers.at(0)) + ", " + print_expr(e.args.at(0)) + ")";
    case RingExpr::Kind::Triangular:
      return "T(" + std::to_string(e.numbers.at(0)) + ", " + print_expr(e.args.at(0)) + ")";
    case RingExpr::Kind::TrivialExt:
      return "TE(" + print_expr(e.args.at(0)) + ")";
    case RingExpr::Kind::TrivialExtSquare:
      return "TE2(" + print_expr(e.args.at(0)) + ")";
    case RingExpr::Kind::GroupRing:
      return "GR(" + print_expr(e.args.at(0)) + ", " + e.name + ")";
    case RingExpr::Kind::Quotient: {
      std::string out = "quot(" + print_expr(e.args.at(0)) + ", [";
      for (size_t i = 0; i < e.list.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(e.list[i]);
      }
      return out + "])";
    }
    case RingExpr::Kind::Corner:
      return "corner(" + print_expr(e.args.at(0)) + ", " + std::to_string(e.numbers.at(0)) + ")";
    case RingExpr::Kind::MoritaNamed:
      return "morita(" + e.name + ")";
  }
  raise(ErrorKind::InvalidArgument, "corrupt expression node");
}

EvalResult eval_expr(const RingExpr& e, const Config& cfg) {
  EvalResult result;
  switch (e.kind) {
    case RingExpr::Kind::Zmod: {
      const int n = e.numbers.at(0);
      if (n < 1) raise(ErrorKind::InvalidArgument, "Z(n) requires n >= 1");
      if (n > cfg.max_order)
        raise(ErrorKind::MaxOrderExceeded, "Z(" + std::to_string(n) + ") exceeds max order " +
                                               std::to_string(cfg.max_order));
      result.ring = zmod_ring(n);
      return result;
    }
    case RingExpr::Kind::Field: {
      result.ring = galois_field(e.numbers.at(0));
      if (result.ring.order() > cfg.max_order)
        raise(ErrorKind::MaxOrderExceeded, "field exceeds max order");
      return result;
    }
    case RingExpr::Kind::Product: {
      std::vector<FiniteRing> factors;
      factors.reserve(e.args.size());
      for (const RingExpr& sub : e.args) factors.push_back(eval_expr(sub, cfg).ring);
      auto prod = direct_product(std::move(factors), cfg);
      result.ring = prod.ring;
      result.meta.product = std::move(prod);
      return result;
    }
    case RingExpr::Kind::Matrix: {
      auto m = matrix_ring(eval_expr(e.args.at(0), cfg).ring, e.numbers.at(0), cfg);
      result.ring = m.ring;
      result.meta.matrix = std::move(m);
      return result;
    }
    case RingExpr::Kind::Triangular: {
      auto t = upper_triangular_ring(eval_expr(e.args.at(0), cfg).ring, e.numbers.at(0), cfg);
      result.ring = t.ring;
      result.meta.triangular = std::move(t);
      return result;
    }
    case RingExpr::Kind::TrivialExt: {
      const FiniteRing base = eval_expr(e.args.at(0), cfg).ring;
      auto te = trivial_extension(base, regular_bimodule(base), cfg);
      result.ring = te.ring;
      result.meta.trivial_ext = std::move(te);
      return result;
    }
    case RingExpr::Kind::TrivialExtSquare: {
      const FiniteRing base = eval_expr(e.args.at(0), cfg).ring;
      auto te = trivial_extension(base, square_bimodule(base), cfg);
      result.ring = te.ring;
      result.meta.trivial_ext = std::move(te);
      return result;
    }
    case RingExpr::Kind::GroupRing: {
      const auto g = group_by_name(e.name);
      if (!g) raise(ErrorKind::InvalidArgument, "unknown group '" + e.name + "'");
      auto gr = group_ring(eval_expr(e.args.at(0), cfg).ring, *g, cfg);
      result.ring = gr.ring;
      result.meta.group_ring = std::move(gr);
      return result;
    }
    case RingExpr::Kind::Quotient: {
      const FiniteRing base = eval_expr(e.args.at(0), cfg).ring;
      std::vector<Elem> gens;
      std::string gen_names;
      for (int v : e.list) {
        if (v < 0 || v >= base.order())
          raise(ErrorKind::InvalidArgument,
                "quot: generator index " + std::to_string(v) + " out of range for " + base.label());
        gens.push_back(static_cast<Elem>(v));
        if (!gen_names.empty()) gen_names += ",";
        gen_names += base.element_name(static_cast<Elem>(v));
      }
      const ElemSet ideal = ideal_generated_by(base, gens, Side::TwoSided);
      auto quo = quotient_ring(base, ideal, base.label() + "/(" + gen_names + ")");
      result.ring = quo.ring;
      result.meta.quotient = std::move(quo);
      return result;
    }
    case RingExpr::Kind::Corner: {
      const FiniteRing base = eval_expr(e.args.at(0), cfg).ring;
      const int idx = e.numbers.at(0);
      if (idx < 0 || idx >= base.order())
        raise(ErrorKind::InvalidArgument,
              "corner: element index " + std::to_string(idx) + " out of range for " + base.label());
      auto corner = corner_ring(base, static_cast<Elem>(idx));
      result.ring = corner.ring;
      result.meta.corner = std::move(corner);
      return result;
    }
    case RingExpr::Kind::MoritaNamed: {
      auto mr = morita_ring(morita_example(e.name), cfg);
      result.ring = mr.ring;
      result.meta.morita = std::move(mr);
      return result;
    }
  }
  raise(ErrorKind::InvalidArgument, "corrupt expression node");
}

}  // namespace ringlab
