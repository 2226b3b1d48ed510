#include "dcolor/color_algebra.hpp"

#include <stdexcept>
#include <string>

namespace dcolor {

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

int select_prime(int lower) {
  if (lower < 2) throw std::invalid_argument("select_prime: lower must be >= 2");
  int q = lower;
  while (!is_prime(q)) ++q;
  return q;
}

ColorPair encode_pair(ColorWord i, int q) {
  if (q < 2) throw std::invalid_argument("encode_pair: modulus too small");
  const ColorWord qq = static_cast<ColorWord>(q) * static_cast<ColorWord>(q);
  if (i >= qq)
    throw std::invalid_argument("encode_pair: color " + std::to_string(i) +
                                " >= q^2 = " + std::to_string(qq));
  return ColorPair{static_cast<int>(i / static_cast<ColorWord>(q)),
                   static_cast<int>(i % static_cast<ColorWord>(q)), q};
}

ColorWord decode_pair(const ColorPair& p) {
  return static_cast<ColorWord>(p.a) * static_cast<ColorWord>(p.q) +
         static_cast<ColorWord>(p.b);
}

bool has_conflict(const ColorPair& mine, std::span<const ColorPair> neighbors) {
  for (const ColorPair& nb : neighbors) {
    if (nb.q != mine.q)
      throw std::invalid_argument("has_conflict: mixed moduli");
    if (nb.b == mine.b) return true;
  }
  return false;
}

ColorPair ag_update(const ColorPair& mine, bool conflicted) {
  if (conflicted) return ColorPair{mine.a, (mine.b + mine.a) % mine.q, mine.q};
  return ColorPair{0, mine.b, mine.q};
}

ColorPair agn_update(const ColorPair& mine, bool conflicted, bool hold, int n_mod) {
  if (mine.q != n_mod || mine.a < 0 || mine.a > 1)
    throw std::invalid_argument("agn_update: not a mod-N pair");
  if (mine.a == 0) return mine;  // final
  if (conflicted || hold) return ColorPair{1, (mine.b + 1) % n_mod, n_mod};
  return ColorPair{0, mine.b, n_mod};
}

ColorPair arb_update(const ColorPair& mine, int cross_color_conflicts, int p) {
  if (cross_color_conflicts <= p) return ColorPair{0, mine.b, mine.q};
  return ColorPair{mine.a, (mine.a + mine.b) % mine.q, mine.q};
}

ColorTriple encode_triple(ColorWord i, int p) {
  if (p < 2) throw std::invalid_argument("encode_triple: modulus too small");
  const ColorWord pw = static_cast<ColorWord>(p);
  if (i >= pw * pw * pw)
    throw std::invalid_argument("encode_triple: color >= p^3");
  return ColorTriple{static_cast<int>(i / (pw * pw)),
                     static_cast<int>((i / pw) % pw),
                     static_cast<int>(i % pw), p};
}

ColorWord decode_triple(const ColorTriple& t) {
  const ColorWord pw = static_cast<ColorWord>(t.p);
  return static_cast<ColorWord>(t.c) * pw * pw +
         static_cast<ColorWord>(t.b) * pw + static_cast<ColorWord>(t.a);
}

ColorTriple three_ag_update(const ColorTriple& mine, bool b_conflicted,
                            bool a_conflicted, bool hold) {
  const int p = mine.p;
  if (mine.c != 0) {
    if (!b_conflicted && !hold) return ColorTriple{0, mine.b, mine.a, p};
    if (!b_conflicted && hold) {
      if (mine.b != 0) return ColorTriple{mine.c, (mine.b + mine.c) % p, mine.a, p};
      return ColorTriple{mine.c, mine.c, mine.a, p};  // circle through <c,c,a>
    }
    return ColorTriple{mine.c, (mine.b + mine.c) % p, mine.a, p};
  }
  if (!a_conflicted && !hold) return ColorTriple{0, 0, mine.a, p};
  return ColorTriple{0, mine.b, (mine.a + mine.b) % p, p};
}

}  // namespace dcolor
