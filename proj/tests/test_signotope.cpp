#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fliplab/json_io.hpp"
#include "fliplab/signotope.hpp"
#include "fliplab/wiring.hpp"
#include "test_util.hpp"

using namespace fliplab;

TEST_CASE("triple ranking is the lex order and inverts") {
  for (int n = 3; n <= 9; ++n) {
    auto ts = all_triples(n);
    CHECK(static_cast<long long>(ts.size()) == binom(n, 3));
    for (int r = 0; r < static_cast<int>(ts.size()); ++r) {
      CHECK(triple_rank(n, ts[r]) == r);
      CHECK(triple_at(n, r) == ts[r]);
    }
  }
}

TEST_CASE("validation accepts and rejects by packet monotonicity") {
  CHECK(validate_signotope(all_plus(3)).ok());
  CHECK(validate_signotope(all_plus(5)).ok());

  Signotope bad = signotope_from_string(4, "+-++");
  auto r = validate_signotope(bad);
  CHECK(r.code == SignotopeError::PacketViolation);
  CHECK(r.packet == Quad{1, 2, 3, 4});

  Signotope tiny;
  tiny.n = 2;
  CHECK(validate_signotope(tiny).code == SignotopeError::TooFewElements);

  Signotope short_vec = all_plus(4);
  short_vec.signs.pop_back();
  CHECK(validate_signotope(short_vec).code == SignotopeError::WrongLength);

  Signotope junk = all_plus(4);
  junk.signs[2] = 0;
  CHECK(validate_signotope(junk).code == SignotopeError::BadSignValue);
}

TEST_CASE("validation agrees with an independent brute-force check") {
  for (int n = 4; n <= 5; ++n) {
    int m = triple_count(n);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int8_t> signs(m);
      for (int r = 0; r < m; ++r) signs[r] = (mask >> r) & 1 ? +1 : -1;
      Signotope s{n, signs};
      CHECK(validate_signotope(s).ok() == testutil::brute_valid(n, signs));
    }
  }
}

TEST_CASE("flippable triples of the constant signotopes are the consecutive ones") {
  CHECK(flippable_triples(all_plus(4)) ==
        std::vector<Triple>{Triple{1, 2, 3}, Triple{2, 3, 4}});
  for (int n = 3; n <= 7; ++n) {
    for (const Signotope& s : {all_plus(n), all_minus(n)}) {
      std::vector<Triple> expect;
      for (int i = 1; i + 2 <= n; ++i) expect.push_back(Triple{i, i + 1, i + 2});
      CHECK(flippable_triples(s) == expect);
    }
  }
}

TEST_CASE("flippability matches toggle-and-revalidate on every n=5 signotope") {
  for (const Signotope& s : testutil::enumerate_signotopes(5)) {
    for (int r = 0; r < triple_count(5); ++r) {
      Signotope toggled = s;
      toggled.signs[r] = -toggled.signs[r];
      CHECK(is_flippable(s, r) == validate_signotope(toggled).ok());
    }
  }
}

TEST_CASE("triangle count bounds hold on every small signotope") {
  for (int n = 4; n <= 5; ++n) {
    for (const Signotope& s : testutil::enumerate_signotopes(n)) {
      int deg = static_cast<int>(flippable_ranks(s).size());
      CHECK(deg >= n - 2);
      CHECK(3 * deg <= n * (n - 2));
    }
  }
}

TEST_CASE("flip changes one sign, stays valid, and is an involution") {
  Signotope s = all_plus(5);
  for (int r : flippable_ranks(s)) {
    Signotope f = flip(s, r);
    CHECK(validate_signotope(f).ok());
    int diff = 0;
    for (int x = 0; x < triple_count(5); ++x) diff += f.signs[x] != s.signs[x];
    CHECK(diff == 1);
    Signotope back = flip(f, r);
    CHECK(back.signs == s.signs);
  }

  Signotope g = flip(all_plus(4), Triple{1, 2, 3});
  CHECK(sign_string(g) == "-+++");
}

TEST_CASE("flipping a non-flippable triple reports the broken packet") {
  try {
    flip(all_plus(4), Triple{1, 2, 4});
    FAIL("expected flip_error");
  } catch (const flip_error& e) {
    CHECK(e.packet == Quad{1, 2, 3, 4});
  }
}

TEST_CASE("byte and string encodings round-trip") {
  for (const Signotope& s : testutil::enumerate_signotopes(4)) {
    Signotope d = decode_signs(4, encode_signs(s));
    CHECK(d.signs == s.signs);
    CHECK(signotope_from_string(4, sign_string(s)).signs == s.signs);
  }
}

TEST_CASE("json codecs round-trip and reject malformed input") {
  Signotope s = flip(all_plus(5), Triple{1, 2, 3});
  CHECK(signotope_from_json(signotope_to_json(s)).signs == s.signs);
  CHECK_THROWS_AS(signotope_from_json(json{{"n", 4}}), std::invalid_argument);
  CHECK_THROWS_AS(signotope_from_json(json{{"n", 4}, {"signs", "+-++"}}),
                  std::invalid_argument);

  WiringDiagram w = signotope_to_wiring(all_plus(4));
  WiringDiagram back = wiring_from_json(wiring_to_json(w));
  CHECK(back.word == w.word);
}

TEST_CASE("wiring validation pinpoints malformed words") {
  CHECK_FALSE(validate_wiring(WiringDiagram{3, {1, 2}}).ok);
  CHECK_FALSE(validate_wiring(WiringDiagram{3, {1, 0, 2}}).ok);
  // position 1 twice in a row swaps the same pair back
  auto rep = validate_wiring(WiringDiagram{3, {1, 1, 2}});
  CHECK_FALSE(rep.ok);
  CHECK(rep.step == 1);
  CHECK(validate_wiring(WiringDiagram{3, {2, 1, 2}}).ok);
}

TEST_CASE("wiring signs follow the row-below-the-swap rule") {
  // word [2,1,2]: wires 1,3 cross at position 1 while wire 2 sits in row 3.
  Signotope s = wiring_to_signotope(WiringDiagram{3, {2, 1, 2}});
  CHECK(sign_string(s) == "+");
  Signotope t = wiring_to_signotope(WiringDiagram{3, {1, 2, 1}});
  CHECK(sign_string(t) == "-");
}

TEST_CASE("commuting distant swaps yields the same signotope") {
  WiringDiagram w1{4, {1, 3, 2, 1, 3, 2}};
  WiringDiagram w2{4, {3, 1, 2, 1, 3, 2}};
  REQUIRE(validate_wiring(w1).ok);
  REQUIRE(validate_wiring(w2).ok);
  CHECK(wiring_to_signotope(w1).signs == wiring_to_signotope(w2).signs);
}

TEST_CASE("the all-plus wiring puts the outer crossing above the middle wire") {
  WiringDiagram w = signotope_to_wiring(all_plus(3));
  REQUIRE(validate_wiring(w).ok);
  // find the step where wires 1 and 3 cross and read wire 2's row
  std::vector<int> perm{1, 2, 3};
  bool seen = false;
  for (int p : w.word) {
    int a = perm[p - 1], b = perm[p];
    if (std::min(a, b) == 1 && std::max(a, b) == 3) {
      int row2 = 1 + static_cast<int>(std::find(perm.begin(), perm.end(), 2) - perm.begin());
      CHECK(row2 > p + 1);
      seen = true;
    }
    std::swap(perm[p - 1], perm[p]);
  }
  CHECK(seen);

  WiringDiagram wm = signotope_to_wiring(all_minus(3));
  std::vector<int> pm{1, 2, 3};
  for (int p : wm.word) {
    int a = pm[p - 1], b = pm[p];
    if (std::min(a, b) == 1 && std::max(a, b) == 3) {
      int row2 = 1 + static_cast<int>(std::find(pm.begin(), pm.end(), 2) - pm.begin());
      CHECK(row2 < p);
    }
    std::swap(pm[p - 1], pm[p]);
  }
}

TEST_CASE("wiring round-trip is the identity on all n=5 signotopes") {
  for (const Signotope& s : testutil::enumerate_signotopes(5)) {
    Signotope back = wiring_to_signotope(signotope_to_wiring(s));
    CHECK(back.signs == s.signs);
  }
}

TEST_CASE("wiring round-trip holds on random reachable signotopes, n=6,7") {
  std::mt19937_64 rng(20240814);
  for (int n : {6, 7}) {
    Signotope s = all_plus(n);
    for (int step = 0; step < 60; ++step) {
      auto fr = flippable_ranks(s);
      s = flip(s, fr[rng() % fr.size()]);
      Signotope back = wiring_to_signotope(signotope_to_wiring(s));
      CHECK(back.signs == s.signs);
    }
  }
}
