#include <doctest.h>

#include "hnnfree/errors.hpp"
#include "hnnfree/word.hpp"
#include "support/generators.hpp"

using namespace hnnfree;
using namespace hnnfree::testing;

namespace {
Word W(const char* text) { return Word::parse(text); }
}  // namespace

TEST_SUITE("words") {

TEST_CASE("parse and print round trip") {
  for (const char* text : {"a", "a'", "b[-1]", "b[-1]'", "x_1 y2[3]' t t'",
                           "1"}) {
    CHECK(W(text).to_string() == text);
  }
  CHECK(W("  a   b'  ").to_string() == "a b'");
  CHECK(W("1").empty());
  CHECK(Word{}.to_string() == "1");
}

TEST_CASE("parse rejects malformed tokens") {
  for (const char* text : {"", "A", "a''", "a[", "a[x]", "a[1", "1 a", "9a",
                           "a]", "a['1]", "a 1"}) {
    CHECK_THROWS_AS(W(text), ParseError);
  }
}

TEST_CASE("indexed letters are distinct symbols with a shared base") {
  Letter b = Letter::parse("b");
  Letter b1 = Letter::parse("b[-1]");
  CHECK(b != b1);
  CHECK(b1.symbol.base() == b.symbol);
  CHECK(b1.symbol.index() == -1);
  CHECK(!b.symbol.index());
  CHECK(b.symbol.with_index(-1) == b1.symbol);
  CHECK(Letter::parse("b[-1]'") == b1.inverse());
}

TEST_CASE("alphabetical order puts the plain letter before indexed ones") {
  auto s = [](const char* n, std::optional<int> i = std::nullopt) {
    return Symbol::intern(n, i);
  };
  CHECK(alphabetical_less(s("a"), s("a", -3)));
  CHECK(alphabetical_less(s("a", -3), s("a", 2)));
  CHECK(alphabetical_less(s("a", 2), s("b")));
  CHECK(!alphabetical_less(s("b"), s("b")));
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(W("a b b' c")) == W("a c"));
  CHECK(free_reduce(W("a a'")).empty());
  CHECK(free_reduce(W("b t' a t t b t' a")) == W("b t' a t t b t' a"));
  CHECK(free_reduce(W("a b c c' b' a' a")) == W("a"));
  CHECK(free_reduce(W("b[0] b[1]'")) == W("b[0] b[1]'"));
  CHECK(is_freely_reduced(W("a b a")));
  CHECK(!is_freely_reduced(W("a b b' a")));
}

TEST_CASE("cyclic_reduce") {
  auto d = cyclic_reduce(W("a b a'"));
  CHECK(d.conjugator == W("a"));
  CHECK(d.core == W("b"));

  d = cyclic_reduce(W("b t' a t t b t' a"));
  CHECK(d.conjugator.empty());
  CHECK(d.core == W("b t' a t t b t' a"));

  d = cyclic_reduce(W("1"));
  CHECK(d.conjugator.empty());
  CHECK(d.core.empty());

  d = cyclic_reduce(W("a b c a' a d b' a'"));
  CHECK(d.conjugator == W("a b"));
  CHECK(d.core == W("c d"));
  CHECK(!is_cyclically_reduced(W("a b a'")));
  CHECK(is_cyclically_reduced(W("a b a")));
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(W("x y y x' y' z y'"), Symbol::intern("y")) == 0);
  CHECK(exponent_sum(W("1"), Symbol::intern("t")) == 0);
  CHECK(exponent_sum(W("b t' a"), Symbol::intern("t")) == -1);
  CHECK(exponent_sum(W("t[1] t"), Symbol::intern("t")) == 1);
}

TEST_CASE("prefixes are literal") {
  auto p = prefixes(W("b t' a"));
  REQUIRE(p.size() == 4);
  CHECK(p[0].empty());
  CHECK(p[1] == W("b"));
  CHECK(p[2] == W("b t'"));
  CHECK(p[3] == W("b t' a"));
  CHECK(prefixes(W("1")).size() == 1);
  auto q = prefixes(W("a a'"));
  REQUIRE(q.size() == 3);
  CHECK(q[2] == W("a a'"));
}

TEST_CASE("word laws on random words") {
  Rng rng(11);
  auto alphabet = signed_letters(symbols({"a", "b", "c"}));
  alphabet.emplace_back(Symbol::intern("b", -1), 1);
  const Symbol y = Symbol::intern("b");
  for (int n = 0; n < 1000; ++n) {
    Word u = random_word(alphabet, uniform(rng, 0, 12), rng);
    Word v = random_word(alphabet, uniform(rng, 0, 12), rng);
    Word r = free_reduce(u);
    CHECK(free_reduce(r) == r);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(u * u.inverse()).empty());
    CHECK(u.inverse().inverse() == u);
    CHECK(exponent_sum(u * v, y) == exponent_sum(u, y) + exponent_sum(v, y));
    CHECK(prefixes(u).size() == u.size() + 1);
    auto d = cyclic_reduce(u);
    CHECK(is_cyclically_reduced(d.core));
    CHECK(free_reduce(d.conjugator * d.core * d.conjugator.inverse()) == r);
    CHECK(Word::parse(u.to_string()) == u);
  }
}

}  // TEST_SUITE
