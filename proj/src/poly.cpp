#include "utimage/poly.hpp"

#include <algorithm>
#include <cctype>

namespace utimage {

Perm identity_perm(std::size_t m) {
  Perm p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = std::uint8_t(i + 1);
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = std::uint8_t(i + 1);
  return inv;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint8_t v : p) {
    if (v < 1 || v > p.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

MultilinearPoly MultilinearPoly::zero(std::size_t degree, const FieldDescriptor& field) {
  if (degree < 1) fail(Errc::DegreeUnsupported, "degree must be at least 1");
  return MultilinearPoly(degree, field);
}

MultilinearPoly MultilinearPoly::from_terms(std::size_t degree, const FieldDescriptor& field,
                                            std::map<Perm, Scalar> terms) {
  MultilinearPoly p = zero(degree, field);
  for (auto& [perm, c] : terms) {
    if (perm.size() != degree || !is_perm(perm)) {
      fail(Errc::NotMultilinear, "monomial key is not a permutation of 1.." + std::to_string(degree));
    }
    if (c.field() != field) fail(Errc::FieldMismatch, "coefficient field differs");
    if (!c.is_zero()) p.terms_.emplace(perm, c);
  }
  return p;
}

MultilinearPoly MultilinearPoly::from_words(std::size_t degree, const WordPoly& words) {
  MultilinearPoly p = zero(degree, words.field());
  for (const auto& [word, c] : words.terms()) {
    if (word.size() != degree) {
      fail(Errc::NotMultilinear, "monomial of length " + std::to_string(word.size()) +
                                     " in a degree-" + std::to_string(degree) + " polynomial");
    }
    std::vector<bool> seen(degree, false);
    for (std::uint8_t v : word) {
      if (v < 1 || v > degree || seen[v - 1]) {
        fail(Errc::NotMultilinear, "variable x" + std::to_string(v) + " repeated or out of range");
      }
      seen[v - 1] = true;
    }
    p.terms_.emplace(word, c);
  }
  return p;
}

Scalar MultilinearPoly::coefficient(const Perm& perm) const {
  auto it = terms_.find(perm);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar MultilinearPoly::coeff_sum() const {
  Scalar sum = Scalar::zero(field_);
  for (const auto& [perm, c] : terms_) sum += c;
  return sum;
}

MultilinearPoly MultilinearPoly::substitute_identity(std::size_t i) const {
  if (i < 1 || i > degree_) fail(Errc::IndexOutOfRange, "variable index " + std::to_string(i));
  if (degree_ < 2) fail(Errc::IndexOutOfRange, "cannot reduce a degree-1 polynomial");
  MultilinearPoly out(degree_ - 1, field_);
  for (const auto& [perm, c] : terms_) {
    Perm reduced;
    reduced.reserve(degree_ - 1);
    for (std::uint8_t v : perm) {
      if (v == i) continue;
      reduced.push_back(v > i ? std::uint8_t(v - 1) : v);
    }
    auto it = out.terms_.find(reduced);
    if (it == out.terms_.end()) {
      out.terms_.emplace(std::move(reduced), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

MultilinearPoly MultilinearPoly::rename_variables(const Perm& pi) const {
  if (pi.size() != degree_ || !is_perm(pi)) {
    fail(Errc::IndexOutOfRange, "renaming is not a permutation of 1.." + std::to_string(degree_));
  }
  Perm inv = inverse_perm(pi);
  MultilinearPoly out(degree_, field_);
  // q(x_{pi(1)},...,x_{pi(m)}) = p(x_1,...,x_m)  <=>  q[inv(pi) o sigma] = p[sigma].
  for (const auto& [sigma, c] : terms_) {
    Perm tau(degree_);
    for (std::size_t k = 0; k < degree_; ++k) tau[k] = inv[sigma[k] - 1];
    out.terms_.emplace(std::move(tau), c);
  }
  return out;
}

UTMatrix MultilinearPoly::evaluate(std::span<const UTMatrix> inputs) const {
  if (inputs.size() != degree_) {
    fail(Errc::DimensionMismatch, "expected " + std::to_string(degree_) + " inputs, got " +
                                      std::to_string(inputs.size()));
  }
  const std::size_t n = inputs[0].dim();
  for (const UTMatrix& m : inputs) {
    if (m.dim() != n) fail(Errc::DimensionMismatch, "inputs of mixed dimension");
    if (m.field() != field_) fail(Errc::FieldMismatch, "input field differs from polynomial field");
  }
  UTMatrix acc(n, field_);
  // Monomials come out of the map in lexicographic order, so consecutive
  // permutations share prefixes; reuse their partial products.
  std::vector<UTMatrix> partial;
  const Perm* prev = nullptr;
  for (const auto& [perm, c] : terms_) {
    std::size_t common = 0;
    if (prev) {
      while (common < partial.size() && (*prev)[common] == perm[common]) ++common;
    }
    partial.resize(common, UTMatrix(n, field_));
    for (std::size_t k = common; k < degree_; ++k) {
      const UTMatrix& x = inputs[perm[k] - 1];
      partial.push_back(k == 0 ? x : partial[k - 1] * x);
    }
    acc = acc + partial.back().scaled(c);
    prev = &perm;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Type { Int, Var, Plus, Minus, Star, Slash, LBrk, RBrk, LPar, RPar, Comma, End };
  Type type;
  std::string digits;   // Int
  std::size_t var = 0;  // Var
  std::size_t pos = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const FieldDescriptor& field) : field_(field) { tokenize(text); }

  WordPoly parse_all() {
    WordPoly out = parse_expr();
    expect(Token::Type::End, "end of input");
    return out;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  void tokenize(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Token t;
      t.pos = i;
      if (c == '+') t.type = Token::Type::Plus;
      else if (c == '-') t.type = Token::Type::Minus;
      else if (c == '*') t.type = Token::Type::Star;
      else if (c == '/') t.type = Token::Type::Slash;
      else if (c == '[') t.type = Token::Type::LBrk;
      else if (c == ']') t.type = Token::Type::RBrk;
      else if (c == '(') t.type = Token::Type::LPar;
      else if (c == ')') t.type = Token::Type::RPar;
      else if (c == ',') t.type = Token::Type::Comma;
      else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.type = Token::Type::Int;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          t.digits += text[i++];
        }
        tokens_.push_back(t);
        continue;
      } else if (c == 'x') {
        std::size_t j = i + 1, v = 0;
        if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
          fail(Errc::ParseError, "expected digits after 'x' at position " + std::to_string(i));
        }
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + std::size_t(text[j] - '0');
          if (v > 200) fail(Errc::ParseError, "variable index too large");
          ++j;
        }
        if (v == 0) fail(Errc::ParseError, "variable indices start at x1");
        t.type = Token::Type::Var;
        t.var = v;
        max_var_ = std::max(max_var_, v);
        tokens_.push_back(t);
        i = j;
        continue;
      } else {
        fail(Errc::ParseError,
             std::string("unexpected character '") + c + "' at position " + std::to_string(i));
      }
      tokens_.push_back(t);
      ++i;
    }
    Token end;
    end.type = Token::Type::End;
    end.pos = text.size();
    tokens_.push_back(end);
  }

  const Token& peek() const { return tokens_[cursor_]; }
  Token consume() { return tokens_[cursor_++]; }

  void expect(Token::Type type, const std::string& what) {
    if (peek().type != type) {
      fail(Errc::ParseError, "expected " + what + " at position " + std::to_string(peek().pos));
    }
    ++cursor_;
  }

  WordPoly parse_expr() {
    bool negate = false;
    if (peek().type == Token::Type::Minus) {
      consume();
      negate = true;
    }
    WordPoly acc = parse_term();
    if (negate) acc = acc.scaled(-Scalar::one(field_));
    while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
      bool minus = consume().type == Token::Type::Minus;
      WordPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  WordPoly parse_term() {
    WordPoly acc(field_);
    if (peek().type == Token::Type::Int) {
      Scalar c = parse_coeff();
      if (peek().type != Token::Type::Star) return WordPoly::constant(c);  // bare coefficient
      consume();
      acc = parse_factor().scaled(c);
    } else {
      acc = parse_factor();
    }
    while (peek().type == Token::Type::Star) {
      consume();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Scalar parse_coeff() {
    std::string text = consume().digits;
    if (peek().type == Token::Type::Slash) {
      consume();
      if (peek().type != Token::Type::Int) {
        fail(Errc::ParseError, "expected denominator at position " + std::to_string(peek().pos));
      }
      text += "/" + consume().digits;
    }
    return Scalar::parse(text, field_);
  }

  WordPoly parse_factor() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Var: {
        std::size_t v = consume().var;
        return WordPoly::letter(field_, std::uint8_t(v));
      }
      case Token::Type::LBrk: {
        consume();
        WordPoly a = parse_expr();
        expect(Token::Type::Comma, "','");
        WordPoly b = parse_expr();
        expect(Token::Type::RBrk, "']'");
        return bracket(a, b);
      }
      case Token::Type::LPar: {
        consume();
        WordPoly e = parse_expr();
        expect(Token::Type::RPar, "')'");
        return e;
      }
      default:
        fail(Errc::ParseError, "expected a variable, '[' or '(' at position " + std::to_string(t.pos));
    }
  }

  FieldDescriptor field_;
  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

MultilinearPoly MultilinearPoly::parse(std::string_view text, const FieldDescriptor& field,
                                       std::size_t declared_degree) {
  Parser parser(text, field);
  WordPoly words = parser.parse_all();
  if (declared_degree > 0 && parser.max_var() > declared_degree) {
    fail(Errc::ParseError, "declared degree " + std::to_string(declared_degree) +
                               " is smaller than the highest variable index");
  }
  std::size_t m = std::max(parser.max_var(), declared_degree);
  if (m == 0) {
    if (words.is_zero()) {
      fail(Errc::ParseError, "zero polynomial needs a declared degree");
    }
    fail(Errc::NotMultilinear, "constant expressions are not multilinear");
  }
  return from_words(m, words);
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [perm, c] : terms_) {
    std::string mono;
    for (std::uint8_t v : perm) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
    }
    std::string cs = c.to_string();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string term = cs == "1" ? mono : cs + "*" + mono;
    if (first) {
      out += neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace utimage
