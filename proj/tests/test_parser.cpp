#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "lokatif/parser.hpp"
#include "test_util.hpp"

using namespace lokatif;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const Token& t : toks) out.push_back(t.surface);
  return out;
}

NPSegment seg(Definiteness d, std::string head) { return {d, std::move(head)}; }

}  // namespace

TEST_CASE("tokenize: contractions, elision, fusion") {
  Lexicon lex = testutil::fixture_lexicon();
  CHECK(surfaces(tokenize("Max est au jardin")) ==
        std::vector<std::string>{"max", "est", "à", "le", "jardin"});
  CHECK(surfaces(tokenize("l'extrémité de la table")) ==
        std::vector<std::string>{"le", "extrémité", "de", "la", "table"});
  CHECK(surfaces(tokenize("Max est aux fêtes")) ==
        std::vector<std::string>{"max", "est", "à", "les", "fêtes"});
  CHECK(surfaces(tokenize("du gâteau")) ==
        std::vector<std::string>{"de", "le", "gâteau"});
  CHECK(surfaces(tokenize("la mouche passe à travers la porte")) ==
        std::vector<std::string>{"la", "mouche", "passe", "à travers", "la",
                                 "porte"});
  CHECK(surfaces(tokenize("au-dessus de la table")) ==
        std::vector<std::string>{"au-dessus de", "la", "table"});
  // curly apostrophe behaves like the straight one
  CHECK(surfaces(tokenize("l’extrémité")) ==
        std::vector<std::string>{"le", "extrémité"});
  // multiword lemma merging needs the lexicon
  CHECK(surfaces(tokenize("au jardin public", &lex)) ==
        std::vector<std::string>{"à", "le", "jardin public"});
  CHECK(surfaces(tokenize("au jardin public")) ==
        std::vector<std::string>{"à", "le", "jardin", "public"});
}

TEST_CASE("tokenize: empty and blank input") {
  CHECK_THROWS_AS(tokenize(""), Error);
  CHECK_THROWS_AS(tokenize("  ,;. !?"), Error);
  try {
    tokenize("");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
}

TEST_CASE("tokenize: token kinds and strictly increasing positions") {
  auto toks = tokenize("Max est au jardin");
  CHECK(toks[0].kind == TokenKind::Word);
  CHECK(toks[1].kind == TokenKind::Copula);
  CHECK(toks[2].kind == TokenKind::Preposition);
  CHECK(toks[3].kind == TokenKind::Determiner);
  CHECK(toks[4].kind == TokenKind::Word);
  for (std::size_t i = 1; i < toks.size(); ++i)
    CHECK(toks[i - 1].position < toks[i].position);
}

TEST_CASE("contraction expansion is idempotent") {
  for (const char* text : {"Max est au jardin", "du gâteau", "aux fêtes",
                           "la poignée de la porte", "au-dessus de la table"}) {
    auto once = expand_contractions(tokenize(text));
    CHECK(expand_contractions(once) == once);
  }
}

TEST_CASE("parse: the locative clause fixtures") {
  Lexicon lex = testutil::fixture_lexicon();

  AST a = parse_text("Max est à Toulouse", lex);
  REQUIRE(std::holds_alternative<LocativeClause>(a));
  const auto& c = std::get<LocativeClause>(a);
  CHECK(c.target == NP{{seg(Definiteness::Proper, "max")}});
  CHECK(c.prep == Prep::A);
  CHECK(c.site == NP{{seg(Definiteness::Proper, "toulouse")}});

  AST b = parse_text("Max est à un jardin public", lex);
  CHECK(std::get<LocativeClause>(b).site ==
        NP{{seg(Definiteness::Indefinite, "jardin public")}});

  AST d = parse_text("Max est à l'extrémité de la table", lex);
  CHECK(std::get<LocativeClause>(d).site ==
        NP{{seg(Definiteness::Definite, "extrémité"),
            seg(Definiteness::Definite, "table")}});
}

TEST_CASE("parse: bare noun phrases with genitives") {
  Lexicon lex = testutil::fixture_lexicon();

  AST a = parse_text("la poignée de la porte", lex);
  REQUIRE(std::holds_alternative<NP>(a));
  CHECK(std::get<NP>(a) == NP{{seg(Definiteness::Definite, "poignée"),
                               seg(Definiteness::Definite, "porte")}});

  // "des" after a noun is de + les; in determiner position it is indefinite
  AST b = parse_text("le couple des gagnants", lex);
  CHECK(std::get<NP>(b) == NP{{seg(Definiteness::Definite, "couple"),
                               seg(Definiteness::Definite, "gagnants")}});
  AST c = parse_text("une brebis du troupeau", lex);
  CHECK(std::get<NP>(c) == NP{{seg(Definiteness::Indefinite, "brebis"),
                               seg(Definiteness::Definite, "troupeau")}});
  AST d = parse_text("des brebis", lex);
  CHECK(std::get<NP>(d) == NP{{seg(Definiteness::Indefinite, "brebis")}});
}

TEST_CASE("parse: error codes and in-range positions") {
  Lexicon lex = testutil::fixture_lexicon();
  auto expect = [&](const std::string& text, ErrorCode code) {
    try {
      parse_text(text, lex);
      CHECK_MESSAGE(false, "expected an error on: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == code);
      if (e.position()) CHECK(*e.position() <= text.size());
    }
  };
  expect("la zorglub", ErrorCode::UnknownWord);
  expect("table", ErrorCode::SyntaxError);          // common noun, no det
  expect("la table la table", ErrorCode::SyntaxError);
  expect("la table est", ErrorCode::SyntaxError);   // missing PP
  expect("la table est la porte", ErrorCode::SyntaxError);
  expect("est la table", ErrorCode::SyntaxError);
  expect("la de", ErrorCode::SyntaxError);
  expect("", ErrorCode::EmptyInput);
}

TEST_CASE("round-trip: generated sentences parse back to their tree") {
  Lexicon lex = testutil::fixture_lexicon();
  testutil::SentenceGenerator gen(lex, 2024);
  for (int i = 0; i < 1500; ++i) {
    auto [expected, text] = gen.gen();
    CAPTURE(text);
    AST got = parse_text(text, lex);
    CHECK(got == expected);
  }
}

TEST_CASE("fuzz: arbitrary bytes never crash, errors stay in range") {
  Lexicon lex = testutil::fixture_lexicon();
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    int n = len(rng);
    for (int k = 0; k < n; ++k) s.push_back(static_cast<char>(byte(rng)));
    try {
      parse_text(s, lex);
    } catch (const Error& e) {
      if (e.position()) CHECK(*e.position() <= s.size());
    }
    // any other exception type escapes and fails the test
  }
}

TEST_CASE("fuzz: shuffled fragment words never crash") {
  Lexicon lex = testutil::fixture_lexicon();
  static const char* words[] = {"le",  "la",   "un",   "des", "de",  "est",
                                "à",   "au",   "du",   "aux", "table", "max",
                                "l'",  "d'",   "jardin", "public", "travers",
                                "au-dessus", "porte", "extrémité"};
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> pick(0, std::size(words) - 1);
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    int n = len(rng);
    for (int k = 0; k < n; ++k) {
      if (k) s += ' ';
      s += words[pick(rng)];
    }
    try {
      parse_text(s, lex);
    } catch (const Error& e) {
      if (e.position()) CHECK(*e.position() <= s.size());
    }
  }
}
