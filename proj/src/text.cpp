#include "stringy/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

enum class Tok { Number, U, V, Q, Caret, Star, Slash, Plus, Minus, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;  // digits for Number
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) {
    size_t pos = 0;
    const auto fail = [&](const std::string& what) {
      throw DomainError(ErrorCode::MalformedInput, what + " at offset " + std::to_string(pos));
    };
    while (pos < input.size()) {
      const char c = input[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t end = pos;
        while (end < input.size() && std::isdigit(static_cast<unsigned char>(input[end]))) ++end;
        tokens_.push_back({Tok::Number, input.substr(pos, end - pos)});
        pos = end;
        continue;
      }
      switch (c) {
        case 'u': tokens_.push_back({Tok::U, {}}); ++pos; break;
        case 'v': tokens_.push_back({Tok::V, {}}); ++pos; break;
        case 'q': tokens_.push_back({Tok::Q, {}}); ++pos; break;
        case '^': tokens_.push_back({Tok::Caret, {}}); ++pos; break;
        case '*': tokens_.push_back({Tok::Star, {}}); ++pos; break;
        case '/': tokens_.push_back({Tok::Slash, {}}); ++pos; break;
        case '+': tokens_.push_back({Tok::Plus, {}}); ++pos; break;
        case '-': tokens_.push_back({Tok::Minus, {}}); ++pos; break;
        case ')': tokens_.push_back({Tok::RParen, {}}); ++pos; break;
        case '(':
          // "(uv)" is one token; any other "(" opens a group.
          if (input.compare(pos, 4, "(uv)") == 0) {
            tokens_.push_back({Tok::Q, {}});
            pos += 4;
          } else {
            tokens_.push_back({Tok::LParen, {}});
            ++pos;
          }
          break;
        default: fail(std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Tok::End, {}});
  }

  const Token& peek(size_t ahead = 0) const {
    const size_t i = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token next() { return tokens_[std::min(index_++, tokens_.size() - 1)]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }
  void expect(Tok kind, const std::string& what) {
    if (!accept(kind)) {
      throw DomainError(ErrorCode::MalformedInput, "expected " + what);
    }
  }

 private:
  std::vector<Token> tokens_;
  size_t index_ = 0;
};

long parseExponent(Lexer& lex) {
  const bool negative = lex.accept(Tok::Minus);
  if (lex.peek().kind != Tok::Number) {
    throw DomainError(ErrorCode::MalformedInput, "expected exponent");
  }
  const std::string digits = lex.next().text;
  if (digits.size() > 9) {
    throw DomainError(ErrorCode::MalformedInput, "exponent out of range");
  }
  const long value = std::stol(digits);
  return negative ? -value : value;
}

// factor := u|v|(uv) ['^' exp]; accumulates into (i, j).
bool tryParseFactor(Lexer& lex, long& i, long& j) {
  long du = 0;
  long dv = 0;
  switch (lex.peek().kind) {
    case Tok::U: du = 1; break;
    case Tok::V: dv = 1; break;
    case Tok::Q: du = dv = 1; break;
    default: return false;
  }
  lex.next();
  if (lex.accept(Tok::Caret)) {
    const long e = parseExponent(lex);
    du *= e;
    dv *= e;
  }
  i += du;
  j += dv;
  return true;
}

// term := coeff ['*' monomial] | monomial (sign handled by the caller).
void parseTerm(Lexer& lex, BiPoly& accum, const Rat& sign) {
  Rat coeff = 1;
  bool sawCoeff = false;
  if (lex.peek().kind == Tok::Number) {
    const Int num(lex.next().text);
    Int den = 1;
    // A '/' directly followed by a number is a fraction; followed by '(' it
    // belongs to the enclosing StringyRational.
    if (lex.peek().kind == Tok::Slash && lex.peek(1).kind == Tok::Number) {
      lex.next();
      den = Int(lex.next().text);
      if (den == 0) throw DomainError(ErrorCode::MalformedInput, "zero denominator");
    }
    coeff = Rat(num, den);
    sawCoeff = true;
  }
  long i = 0;
  long j = 0;
  bool sawMonomial = false;
  if (sawCoeff) {
    while (lex.peek().kind == Tok::Star) {
      // Lookahead: '* (uv)^s' after a complete numerator belongs to the
      // StringyRational shift, but inside a bare polynomial '*' always
      // continues the monomial.
      lex.next();
      if (!tryParseFactor(lex, i, j)) {
        throw DomainError(ErrorCode::MalformedInput, "expected monomial factor after '*'");
      }
      sawMonomial = true;
    }
  } else {
    if (!tryParseFactor(lex, i, j)) {
      throw DomainError(ErrorCode::MalformedInput, "expected term");
    }
    sawMonomial = true;
    while (lex.accept(Tok::Star)) {
      if (!tryParseFactor(lex, i, j)) {
        throw DomainError(ErrorCode::MalformedInput, "expected monomial factor after '*'");
      }
    }
  }
  if (!sawCoeff && !sawMonomial) {
    throw DomainError(ErrorCode::MalformedInput, "empty term");
  }
  if (i < 0 || j < 0) {
    throw DomainError(ErrorCode::MalformedInput, "negative exponent in polynomial");
  }
  accum.addTerm(int(i), int(j), sign * coeff);
}

BiPoly parseSum(Lexer& lex) {
  BiPoly result;
  Rat sign = lex.accept(Tok::Minus) ? -1 : 1;
  parseTerm(lex, result, sign);
  while (true) {
    if (lex.accept(Tok::Plus)) {
      sign = 1;
    } else if (lex.accept(Tok::Minus)) {
      sign = -1;
    } else {
      break;
    }
    parseTerm(lex, result, sign);
  }
  return result;
}

// denom := '(' '(uv)' '^' int '-' '1' ')'
int parseDenomFactor(Lexer& lex) {
  lex.expect(Tok::LParen, "'('");
  lex.expect(Tok::Q, "'(uv)'");
  lex.expect(Tok::Caret, "'^'");
  const long m = parseExponent(lex);
  lex.expect(Tok::Minus, "'-'");
  if (lex.peek().kind != Tok::Number || lex.next().text != "1") {
    throw DomainError(ErrorCode::MalformedInput, "denominator factor must end in '- 1'");
  }
  lex.expect(Tok::RParen, "')'");
  if (m < 1) {
    throw DomainError(ErrorCode::MalformedInput, "denominator exponent must be >= 1");
  }
  return int(m);
}

}  // namespace

BiPoly parseBiPoly(const std::string& text) {
  Lexer lex(text);
  const BiPoly result = parseSum(lex);
  lex.expect(Tok::End, "end of input");
  return result;
}

StringyRational parseStringyRational(const std::string& text) {
  Lexer lex(text);
  StringyRational result;
  if (lex.peek().kind == Tok::LParen) {
    lex.next();
    result.numerator = parseSum(lex);
    lex.expect(Tok::RParen, "')'");
  } else {
    result.numerator = parseSum(lex);
  }
  if (lex.accept(Tok::Slash)) {
    result.denomExponents.insert(parseDenomFactor(lex));
    while (lex.peek().kind == Tok::Star && lex.peek(1).kind == Tok::LParen) {
      lex.next();
      result.denomExponents.insert(parseDenomFactor(lex));
    }
  }
  if (lex.accept(Tok::Star)) {
    lex.expect(Tok::Q, "'(uv)'");
    lex.expect(Tok::Caret, "'^'");
    const long s = parseExponent(lex);
    result.qShift = int(s);
  }
  lex.expect(Tok::End, "end of input");
  return result;
}

}  // namespace stringy
