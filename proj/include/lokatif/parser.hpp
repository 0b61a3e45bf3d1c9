#pragma once

// Tokenizer and recursive-descent parser for a controlled fragment of French
// locative clauses and genitive noun phrases.
//
//   S  -> NP "est" PP | NP
//   PP -> Prep NP
//   NP -> (Det | ProperName) Noun ("de" NP)?
//
// Genitive chains are right-nested and represented as a flat list: chain[0]
// is the outermost head, each following segment a nested complement.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lokatif/errors.hpp"
#include "lokatif/lexicon.hpp"
#include "lokatif/ontology.hpp"

namespace lokatif {

enum class TokenKind { Word, Determiner, Preposition, Copula };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::size_t position = 0;  // byte offset into the original input

  bool operator==(const Token&) const = default;
};

enum class Prep { A, Dans, Sur, Sous, Par, ATravers, AuDessus };

inline const char* to_string(Prep p) {
  switch (p) {
    case Prep::A: return "à";
    case Prep::Dans: return "dans";
    case Prep::Sur: return "sur";
    case Prep::Sous: return "sous";
    case Prep::Par: return "par";
    case Prep::ATravers: return "à travers";
    case Prep::AuDessus: return "au-dessus de";
  }
  return "?";
}

struct NPSegment {
  Definiteness definiteness = Definiteness::Definite;
  std::string head;

  bool operator==(const NPSegment&) const = default;
};

struct NP {
  std::vector<NPSegment> chain;  // non-empty; [0] = head, rest = genitives

  const NPSegment& head() const { return chain.front(); }
  bool has_genitive() const { return chain.size() > 1; }

  bool operator==(const NP&) const = default;
};

struct LocativeClause {
  NP target;
  Prep prep = Prep::A;
  NP site;

  bool operator==(const LocativeClause&) const = default;
};

using AST = std::variant<LocativeClause, NP>;

// ---------------------------------------------------------------------------
// Tokenizer

namespace detail {

inline bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

/// Lowercases ASCII and the Latin-1 block of UTF-8 (French accented capitals)
/// in place, byte length preserved.
inline std::string lowercase_utf8(const std::string& in) {
  std::string out = in;
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned char c = out[i];
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c - 'A' + 'a');
    } else if (c == 0xC3 && i + 1 < out.size()) {
      unsigned char d = out[i + 1];
      if (d >= 0x80 && d <= 0x9E && d != 0x97) out[i + 1] = static_cast<char>(d + 0x20);
      ++i;
    }
  }
  return out;
}

/// Width of an apostrophe at position i (straight 1 byte, curly 3 bytes), or
/// 0 when there is none.
inline std::size_t apostrophe_width(const std::string& s, std::size_t i) {
  if (i < s.size() && s[i] == '\'') return 1;
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      static_cast<unsigned char>(s[i + 2]) == 0x99)
    return 3;
  return 0;
}

inline bool is_word_byte(const std::string& s, std::size_t i) {
  unsigned char c = s[i];
  return is_ascii_letter(static_cast<char>(c)) || c == '-' || c >= 0x80;
}

inline const std::map<std::string, std::string> kElisions = {
    {"l", "le"}, {"d", "de"}};

inline const std::map<std::string, TokenKind>& surface_kinds() {
  static const std::map<std::string, TokenKind> kinds = {
      {"le", TokenKind::Determiner},     {"la", TokenKind::Determiner},
      {"les", TokenKind::Determiner},    {"un", TokenKind::Determiner},
      {"une", TokenKind::Determiner},    {"des", TokenKind::Determiner},
      {"à", TokenKind::Preposition},     {"dans", TokenKind::Preposition},
      {"sur", TokenKind::Preposition},   {"sous", TokenKind::Preposition},
      {"par", TokenKind::Preposition},   {"de", TokenKind::Preposition},
      {"à travers", TokenKind::Preposition},
      {"au-dessus de", TokenKind::Preposition},
      {"est", TokenKind::Copula}};
  return kinds;
}

inline TokenKind kind_of(const std::string& surface) {
  auto it = surface_kinds().find(surface);
  return it == surface_kinds().end() ? TokenKind::Word : it->second;
}

}  // namespace detail

/// Expands au -> à le, aux -> à les, du -> de le. Idempotent.
inline std::vector<Token> expand_contractions(const std::vector<Token>& in) {
  std::vector<Token> out;
  for (const Token& t : in) {
    if (t.surface == "au") {
      out.push_back({"à", TokenKind::Preposition, t.position});
      out.push_back({"le", TokenKind::Determiner, t.position + 1});
    } else if (t.surface == "aux") {
      out.push_back({"à", TokenKind::Preposition, t.position});
      out.push_back({"les", TokenKind::Determiner, t.position + 1});
    } else if (t.surface == "du") {
      out.push_back({"de", TokenKind::Preposition, t.position});
      out.push_back({"le", TokenKind::Determiner, t.position + 1});
    } else {
      out.push_back(t);
    }
  }
  return out;
}

/// Lowercases, splits on non-word bytes, resolves elisions (l' -> le,
/// d' -> de), fuses "à travers" and "au-dessus de", expands contractions,
/// and — when a lexicon is supplied — merges multiword lemmas by longest
/// match. Never throws on arbitrary bytes except for empty input.
inline std::vector<Token> tokenize(const std::string& text,
                                   const Lexicon* lexicon = nullptr) {
  std::string s = detail::lowercase_utf8(text);

  std::vector<Token> raw;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!detail::is_word_byte(s, i) && !detail::apostrophe_width(s, i)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::string word;
    while (i < s.size()) {
      if (std::size_t w = detail::apostrophe_width(s, i)) {
        // Elided determiner/preposition: split here.
        if (!word.empty()) {
          auto el = detail::kElisions.find(word);
          raw.push_back({el != detail::kElisions.end() ? el->second : word,
                         TokenKind::Word, start});
        }
        i += w;
        start = i;
        word.clear();
        continue;
      }
      if (!detail::is_word_byte(s, i)) break;
      word.push_back(s[i]);
      ++i;
    }
    if (!word.empty()) raw.push_back({word, TokenKind::Word, start});
  }
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no tokens in input");

  // Fuse compound prepositions before contraction expansion ("au-dessus"
  // survives as a single hyphenated word and must not be read as "au").
  std::vector<Token> fused;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].surface == "à" && k + 1 < raw.size() &&
        raw[k + 1].surface == "travers") {
      fused.push_back({"à travers", TokenKind::Word, raw[k].position});
      ++k;
    } else if (raw[k].surface == "au-dessus" && k + 1 < raw.size() &&
               raw[k + 1].surface == "de") {
      fused.push_back({"au-dessus de", TokenKind::Word, raw[k].position});
      ++k;
    } else {
      fused.push_back(raw[k]);
    }
  }
  fused = expand_contractions(fused);

  // Longest-match merge of multiword lexicon lemmas.
  std::vector<Token> merged;
  for (std::size_t k = 0; k < fused.size(); ++k) {
    if (lexicon) {
      std::size_t best = 0;
      std::string candidate = fused[k].surface;
      for (std::size_t j = k + 1; j < fused.size(); ++j) {
        candidate += " " + fused[j].surface;
        if (lexicon->contains(candidate)) best = j;
      }
      if (best > k) {
        std::string joined = fused[k].surface;
        for (std::size_t j = k + 1; j <= best; ++j) joined += " " + fused[j].surface;
        merged.push_back({joined, TokenKind::Word, fused[k].position});
        k = best;
        continue;
      }
    }
    merged.push_back(fused[k]);
  }

  for (Token& t : merged) t.kind = detail::kind_of(t.surface);
  return merged;
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class ClauseParser {
 public:
  ClauseParser(const std::vector<Token>& tokens, const Lexicon& lexicon)
      : tokens_(tokens), lexicon_(lexicon) {}

  AST parse() {
    if (tokens_.empty()) throw Error(ErrorCode::EmptyInput, "no tokens");
    NP first = parse_np();
    if (at_end()) return first;
    if (peek().kind == TokenKind::Copula) {
      advance();
      Prep prep = parse_prep();
      NP site = parse_np();
      if (!at_end())
        throw Error(ErrorCode::SyntaxError, "trailing tokens", peek().position);
      return LocativeClause{std::move(first), prep, std::move(site)};
    }
    throw Error(ErrorCode::SyntaxError, "expected \"est\" or end of phrase",
                peek().position);
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token& peek() const { return tokens_[pos_]; }

  const Token& advance() { return tokens_[pos_++]; }

  // Just past the last token's start: always inside the input, even when
  // contraction expansion gave a synthetic token a longer surface.
  std::size_t end_position() const {
    return tokens_.empty() ? 0 : tokens_.back().position + 1;
  }

  Prep parse_prep() {
    if (at_end())
      throw Error(ErrorCode::SyntaxError, "expected preposition", end_position());
    const Token& t = advance();
    static const std::map<std::string, Prep> preps = {
        {"à", Prep::A},           {"dans", Prep::Dans},
        {"sur", Prep::Sur},       {"sous", Prep::Sous},
        {"par", Prep::Par},       {"à travers", Prep::ATravers},
        {"au-dessus de", Prep::AuDessus}};
    auto it = preps.find(t.surface);
    if (it == preps.end())
      throw Error(ErrorCode::SyntaxError, "expected preposition, got \"" +
                  t.surface + "\"", t.position);
    return it->second;
  }

  NPSegment parse_segment() {
    if (at_end())
      throw Error(ErrorCode::SyntaxError, "expected noun phrase", end_position());
    const Token& t = peek();
    if (t.kind == TokenKind::Determiner) {
      Definiteness def =
          (t.surface == "un" || t.surface == "une" || t.surface == "des")
              ? Definiteness::Indefinite
              : Definiteness::Definite;
      advance();
      return {def, parse_noun()};
    }
    if (t.kind == TokenKind::Word) {
      const LexEntry* e = lexicon_.find(t.surface);
      if (!e) throw Error(ErrorCode::UnknownWord, t.surface, t.position);
      if (!e->proper)
        throw Error(ErrorCode::SyntaxError,
                    "common noun \"" + t.surface + "\" needs a determiner",
                    t.position);
      advance();
      return {Definiteness::Proper, t.surface};
    }
    throw Error(ErrorCode::SyntaxError, "expected determiner or proper name",
                t.position);
  }

  std::string parse_noun() {
    if (at_end())
      throw Error(ErrorCode::SyntaxError, "expected noun", end_position());
    const Token& t = advance();
    if (t.kind != TokenKind::Word)
      throw Error(ErrorCode::SyntaxError, "expected noun, got \"" + t.surface + "\"",
                  t.position);
    if (!lexicon_.contains(t.surface))
      throw Error(ErrorCode::UnknownWord, t.surface, t.position);
    return t.surface;
  }

  NP parse_np() {
    NP np;
    np.chain.push_back(parse_segment());
    while (!at_end()) {
      // "des" directly after a noun reads as de + les (genitive); elsewhere
      // it is the indefinite plural determiner.
      if (peek().surface == "de") {
        advance();
        np.chain.push_back(parse_segment());
      } else if (peek().surface == "des") {
        advance();
        np.chain.push_back({Definiteness::Definite, parse_noun()});
      } else {
        break;
      }
    }
    return np;
  }

  const std::vector<Token>& tokens_;
  const Lexicon& lexicon_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AST parse_clause(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  return detail::ClauseParser(tokens, lexicon).parse();
}

inline AST parse_text(const std::string& text, const Lexicon& lexicon) {
  return parse_clause(tokenize(text, &lexicon), lexicon);
}

}  // namespace lokatif
