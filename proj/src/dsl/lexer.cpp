#include "lexer.hpp"

#include <cctype>

namespace seqpipe::dsl {

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokKind::Int, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({TokKind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '/': k = TokKind::Slash; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      case '[': k = TokKind::LBracket; break;
      case ']': k = TokKind::RBracket; break;
      case ',': k = TokKind::Comma; break;
      default:
        throw ParseError(start, {"number", "identifier", "operator"},
                         std::string("unexpected character '") + text[i] + "'");
    }
    out.push_back({k, std::string(1, text[i]), start});
    ++i;
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

std::string_view describe(TokKind k) {
  switch (k) {
    case TokKind::Int: return "integer";
    case TokKind::Ident: return "identifier";
    case TokKind::Plus: return "'+'";
    case TokKind::Minus: return "'-'";
    case TokKind::Star: return "'*'";
    case TokKind::Slash: return "'/'";
    case TokKind::Caret: return "'^'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::LBracket: return "'['";
    case TokKind::RBracket: return "']'";
    case TokKind::Comma: return "','";
    case TokKind::End: return "end of input";
  }
  return "?";
}

}  // namespace seqpipe::dsl
