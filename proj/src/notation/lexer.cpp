#include "dyadkit/notation.hpp"

#include <array>
#include <cctype>
#include <cstdlib>

namespace dyadkit::notation {

namespace {

struct Symbol {
  std::string_view spelling;
  TokenKind kind;
};

// Longest spellings first where prefixes overlap.
constexpr std::array<Symbol, 17> kSymbols = {{
    {"∇", TokenKind::nabla},   // ∇
    {"⊗", TokenKind::dyad},    // ⊗
    {"(x)", TokenKind::dyad},
    {"·", TokenKind::dot},     // ·
    {"⋅", TokenKind::dot},     // ⋅
    {".", TokenKind::dot},
    {"∧", TokenKind::wedge},   // ∧
    {"^", TokenKind::wedge},
    {"×", TokenKind::cross},   // ×
    {"†", TokenKind::dagger},  // †
    {"'", TokenKind::dagger},
    {"+", TokenKind::plus},
    {"-", TokenKind::minus},
    {"−", TokenKind::minus},   // −
    {"*", TokenKind::star},
    {"(", TokenKind::lparen},
    {")", TokenKind::rparen},
}};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

// Greek block U+0380..U+03FF is encoded with lead byte 0xCE or 0xCF.
std::size_t greek_letter_length(std::string_view s, std::size_t i) {
  if (i + 1 < s.size()) {
    const auto lead = static_cast<unsigned char>(s[i]);
    const auto cont = static_cast<unsigned char>(s[i + 1]);
    if ((lead == 0xCE || lead == 0xCF) && (cont & 0xC0) == 0x80) return 2;
  }
  return 0;
}

std::size_t scan_number(std::string_view s, std::size_t i) {
  const auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  std::size_t j = i;
  while (digit(j)) ++j;
  if (j < s.size() && s[j] == '.' && digit(j + 1)) {
    ++j;
    while (digit(j)) ++j;
  }
  if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
    std::size_t k = j + 1;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
    if (digit(k)) {
      while (digit(k)) ++k;
      j = k;
    }
  }
  return j - i;
}

} // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      const std::size_t len = scan_number(src, i);
      const std::string text(src.substr(i, len));
      out.push_back({TokenKind::number, text, i, std::strtod(text.c_str(), nullptr)});
      i += len;
      continue;
    }
    if (is_ident_start(c) || greek_letter_length(src, i) > 0) {
      std::size_t j = i;
      while (j < src.size()) {
        if (is_ident_char(static_cast<unsigned char>(src[j]))) {
          ++j;
        } else if (const std::size_t g = greek_letter_length(src, j); g > 0) {
          j += g;
        } else {
          break;
        }
      }
      std::string text(src.substr(i, j - i));
      TokenKind kind = TokenKind::ident;
      if (text == "grad") kind = TokenKind::nabla;
      if (text == "cross") kind = TokenKind::cross;
      out.push_back({kind, std::move(text), i, 0.0});
      i = j;
      continue;
    }
    bool matched = false;
    for (const Symbol& sym : kSymbols) {
      if (src.substr(i, sym.spelling.size()) == sym.spelling) {
        out.push_back({sym.kind, std::string(sym.spelling), i, 0.0});
        i += sym.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw LexError(i, "unexpected character '" + std::string(1, src[i]) + "'");
    }
  }
  return out;
}

} // namespace dyadkit::notation
