#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqpipe/errors.hpp"

namespace seqpipe::dsl {

enum class TokKind {
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
};

/// Throws ParseError on a character outside the language.
std::vector<Token> lex(std::string_view text);
std::string_view describe(TokKind k);

}  // namespace seqpipe::dsl
