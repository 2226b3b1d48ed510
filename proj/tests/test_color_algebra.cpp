#include <array>
#include <vector>

#include "dcolor/color_algebra.hpp"
#include "dcolor/exact_scheme.hpp"
#include "doctest.h"

using namespace dcolor;

TEST_CASE("select_prime") {
  CHECK(select_prime(9) == 11);
  CHECK(select_prime(5) == 5);
  CHECK(select_prime(2 * 16 + 1) == 37);
  CHECK(select_prime(2) == 2);
  // Bertrand: result below twice the lower bound
  for (int lower = 2; lower < 4000; ++lower) CHECK(select_prime(lower) < 2 * lower);
}

TEST_CASE("pair encode/decode") {
  ColorPair p = encode_pair(13, 5);
  CHECK(p.a == 2);
  CHECK(p.b == 3);
  CHECK(decode_pair(p) == 13);
  ColorPair z = encode_pair(0, 5);
  CHECK(z.a == 0);
  CHECK(z.b == 0);
  CHECK_THROWS(encode_pair(25, 5));
  for (ColorWord i = 0; i < 49; ++i) CHECK(decode_pair(encode_pair(i, 7)) == i);
}

TEST_CASE("has_conflict compares second coordinates only") {
  ColorPair mine{1, 4, 7};
  std::vector<ColorPair> nb1{{3, 4, 7}};
  std::vector<ColorPair> nb2{{1, 2, 7}};
  std::vector<ColorPair> nb3{{2, 4, 7}};
  CHECK(has_conflict(mine, nb1));
  CHECK_FALSE(has_conflict(mine, nb2));
  CHECK(has_conflict(ColorPair{0, 4, 7}, nb3));  // final vs working still conflicts
  std::vector<ColorPair> mixed{{1, 4, 5}};
  CHECK_THROWS(has_conflict(mine, mixed));
}

TEST_CASE("ag_update") {
  CHECK(ag_update({2, 3, 5}, true) == ColorPair{2, 0, 5});
  CHECK(ag_update({2, 3, 5}, false) == ColorPair{0, 3, 5});
  CHECK(ag_update({0, 3, 5}, true) == ColorPair{0, 3, 5});   // final is a fixed point
  CHECK(ag_update({0, 3, 5}, false) == ColorPair{0, 3, 5});
}

TEST_CASE("three_ag_update") {
  CHECK(three_ag_update({2, 3, 1, 7}, true, false, false) == ColorTriple{2, 5, 1, 7});
  CHECK(three_ag_update({2, 3, 1, 7}, false, false, false) == ColorTriple{0, 3, 1, 7});
  CHECK(three_ag_update({0, 3, 1, 7}, false, true, false) == ColorTriple{0, 3, 4, 7});
  CHECK(three_ag_update({0, 3, 1, 7}, false, false, false) == ColorTriple{0, 0, 1, 7});
  // hold circles instead of finalizing
  CHECK(three_ag_update({2, 3, 1, 7}, false, false, true) == ColorTriple{2, 5, 1, 7});
  CHECK(three_ag_update({2, 0, 1, 7}, false, false, true) == ColorTriple{2, 2, 1, 7});
  CHECK(three_ag_update({0, 3, 1, 7}, false, false, true) == ColorTriple{0, 3, 4, 7});
  // fully final is a fixed point under any flags
  CHECK(three_ag_update({0, 0, 4, 7}, true, true, true) == ColorTriple{0, 0, 4, 7});
}

TEST_CASE("agn_update") {
  CHECK(agn_update({1, 4, 5}, true, false, 5) == ColorPair{1, 0, 5});  // wraparound
  CHECK(agn_update({1, 3, 5}, false, false, 5) == ColorPair{0, 3, 5});
  CHECK(agn_update({0, 3, 5}, true, true, 5) == ColorPair{0, 3, 5});  // finalized
  CHECK(agn_update({1, 2, 5}, false, true, 5) == ColorPair{1, 3, 5});  // held
}

TEST_CASE("arb_update threshold is inclusive") {
  CHECK(arb_update({3, 2, 7}, 0, 2) == ColorPair{0, 2, 7});
  CHECK(arb_update({3, 2, 7}, 3, 2) == ColorPair{3, 5, 7});
  CHECK(arb_update({3, 2, 7}, 2, 2) == ColorPair{0, 2, 7});
}

TEST_CASE("triple encode/decode round trip") {
  for (ColorWord i = 0; i < 343; ++i) CHECK(decode_triple(encode_triple(i, 7)) == i);
  CHECK_THROWS(encode_triple(343, 7));
}

// Exhaustive check on all graphs with n <= 5: one synchronous ag_update round
// maps any proper pair coloring (q >= 2*delta+1) to a proper coloring.
TEST_CASE("ag_update preserves properness (exhaustive n<=5)") {
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      // adjacency from mask
      std::array<std::array<bool, 5>, 5> adj{};
      int bit = 0, delta = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          adj[u][v] = adj[v][u] = (mask >> bit) & 1;
      for (int u = 0; u < n; ++u) {
        int d = 0;
        for (int v = 0; v < n; ++v) d += adj[u][v];
        delta = std::max(delta, d);
      }
      const int q = select_prime(2 * delta + 1);
      // a handful of deterministic proper colorings over [0, q^2)
      for (int variant = 0; variant < 3; ++variant) {
        std::array<ColorPair, 5> col{};
        for (int v = 0; v < n; ++v)
          col[v] = encode_pair(static_cast<ColorWord>((v * (variant + 2) + variant) %
                                                      (q * q)),
                               q);
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
          for (int v = u + 1; v < n && proper; ++v)
            if (adj[u][v] && decode_pair(col[u]) == decode_pair(col[v])) proper = false;
        if (!proper) continue;
        std::array<ColorPair, 5> next{};
        for (int v = 0; v < n; ++v) {
          std::vector<ColorPair> nbs;
          for (int u = 0; u < n; ++u)
            if (adj[v][u]) nbs.push_back(col[u]);
          next[v] = ag_update(col[v], has_conflict(col[v], nbs));
        }
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) CHECK(decode_pair(next[u]) != decode_pair(next[v]));
      }
    }
  }
}

// Direct orbit simulation: two working neighbors conflict at most once during
// q consecutive rounds, and a working vertex against a fixed final color
// likewise, for q in {5, 7, 11}.
TEST_CASE("conflict counting lemmas (orbit simulation)") {
  for (int q : {5, 7, 11}) {
    for (int a = 1; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 1; c < q; ++c)
          for (int d = 0; d < q; ++d) {
            if (a == c && b == d) continue;  // same color: not a proper input
            if (a == c) continue;            // working pair lemma needs a != c
            int conflicts = 0;
            ColorPair x{a, b, q}, y{c, d, q};
            for (int t = 0; t < q; ++t) {
              if (x.b == y.b) ++conflicts;
              x = ag_update(x, true);
              y = ag_update(y, true);
            }
            CHECK(conflicts <= 1);
          }
    for (int a = 1; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int fb = 0; fb < q; ++fb) {
          int conflicts = 0;
          ColorPair x{a, b, q};
          for (int t = 0; t < q; ++t) {
            if (x.b == fb) ++conflicts;
            x = ag_update(x, true);
          }
          CHECK(conflicts <= 1);
        }
  }
}

// Exhaustive: one synchronous three_ag_update round preserves properness of
// triple colorings on all graphs with n <= 4, p = 7, including held vertices.
TEST_CASE("three_ag_update preserves properness (exhaustive n<=4)") {
  const int p = 7;
  auto flags_for = [&](const ColorTriple& mine, const std::vector<ColorTriple>& nbs,
                       bool held) {
    bool b_conf = false, a_conf = false;
    for (const ColorTriple& u : nbs) {
      if (triple_b_conflicts(mine, u)) b_conf = true;
      if (u.a == mine.a) a_conf = true;
    }
    return std::array<bool, 3>{b_conf, a_conf, held};
  };
  for (int n = 2; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::array<std::array<bool, 4>, 4> adj{};
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          adj[u][v] = adj[v][u] = (mask >> bit) & 1;
      for (int variant = 0; variant < 4; ++variant) {
        std::array<ColorTriple, 4> col{};
        for (int v = 0; v < n; ++v)
          col[v] = encode_triple(
              static_cast<ColorWord>((v * 61 + 17 * variant + variant) % 343), p);
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
          for (int v = u + 1; v < n && proper; ++v)
            if (adj[u][v] && decode_triple(col[u]) == decode_triple(col[v]))
              proper = false;
        if (!proper) continue;
        for (int holdmask = 0; holdmask < (1 << n); ++holdmask) {
          std::array<ColorTriple, 4> next{};
          for (int v = 0; v < n; ++v) {
            std::vector<ColorTriple> nbs;
            for (int u = 0; u < n; ++u)
              if (adj[v][u]) nbs.push_back(col[u]);
            auto f = flags_for(col[v], nbs, (holdmask >> v) & 1);
            next[v] = three_ag_update(col[v], f[0], f[1], f[2]);
          }
          for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
              if (adj[u][v])
                CHECK(decode_triple(next[u]) != decode_triple(next[v]));
        }
      }
    }
  }
}

TEST_CASE("exact scheme words stay disjoint and proper on a single edge") {
  ExactScheme s = make_exact_scheme(4, 25);
  CHECK(s.n_mod == 5);
  CHECK(s.low_limit == 6);
  CHECK(s.p == 7);
  // a high word never equals a mod-N or final word while unfinalized
  CHECK(s.stage(3) == ExactScheme::Stage::kFinal);
  CHECK(s.stage(7) == ExactScheme::Stage::kModN);
  CHECK(s.stage(s.high_base() + 12) == ExactScheme::Stage::kTriple);
  int cnt = 0;
  auto succ = s.successors(s.high_base() + 12, cnt);  // triple <0,1,5>
  CHECK(cnt == 2);
  CHECK(succ[0] == 5);                       // finalize to a = 5
  CHECK(succ[1] == s.high_base() + 12 + 1);  // <0,1,6>: a walks by b
}
