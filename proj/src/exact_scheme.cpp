#include "dcolor/exact_scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace dcolor {

ExactScheme::Stage ExactScheme::stage(ColorWord w) const {
  const ColorWord n = static_cast<ColorWord>(n_mod);
  if (w < n) return Stage::kFinal;
  if (w < 2 * n) return Stage::kModN;
  if (w < palette()) return Stage::kTriple;
  throw std::invalid_argument("exact scheme: word out of range");
}

ExactScheme::Flags ExactScheme::merge(const Flags& x, const Flags& y) {
  return Flags{x.b_conflict || y.b_conflict, x.a_conflict || y.a_conflict,
               x.agn_conflict || y.agn_conflict, x.hold || y.hold};
}

ExactScheme::Flags ExactScheme::flags(ColorWord mine,
                                      std::span<const ColorWord> neighbors) const {
  Flags f;
  const ColorWord n = static_cast<ColorWord>(n_mod);
  const Stage st = stage(mine);
  if (st == Stage::kFinal) return f;
  if (st == Stage::kModN) {
    const ColorWord my_value = mine - n;
    for (ColorWord w : neighbors) {
      if (w >= 2 * n) continue;  // mod-N vertices ignore triple neighbors
      const ColorWord value = w < n ? w : w - n;
      if (value == my_value) f.agn_conflict = true;
    }
    return f;
  }
  const ColorTriple t = encode_triple(mine - high_base(), p);
  for (ColorWord w : neighbors) {
    switch (stage(w)) {
      case Stage::kFinal:
        if (w == static_cast<ColorWord>(t.a)) f.a_conflict = true;
        break;
      case Stage::kModN:
        f.hold = true;
        break;
      case Stage::kTriple: {
        const ColorTriple u = encode_triple(w - high_base(), p);
        if (triple_b_conflicts(t, u)) f.b_conflict = true;
        if (u.a == t.a) f.a_conflict = true;
        break;
      }
    }
  }
  return f;
}

ColorWord ExactScheme::step(ColorWord mine, const Flags& f) const {
  const ColorWord n = static_cast<ColorWord>(n_mod);
  switch (stage(mine)) {
    case Stage::kFinal:
      return mine;
    case Stage::kModN: {
      const ColorPair pr{1, static_cast<int>(mine - n), n_mod};
      return decode_pair(agn_update(pr, f.agn_conflict, false, n_mod));
    }
    case Stage::kTriple: {
      const ColorTriple t = encode_triple(mine - high_base(), p);
      const ColorTriple next = three_ag_update(t, f.b_conflict, f.a_conflict, f.hold);
      if (next.fully_final()) return static_cast<ColorWord>(next.a);
      return high_base() + decode_triple(next);
    }
  }
  throw std::logic_error("exact scheme: unreachable");
}

std::array<ColorWord, 2> ExactScheme::successors(ColorWord w, int& count) const {
  std::array<ColorWord, 2> out{};
  switch (stage(w)) {
    case Stage::kFinal:
      out[0] = w;
      count = 1;
      return out;
    case Stage::kModN: {
      const ColorWord n = static_cast<ColorWord>(n_mod);
      out[0] = w - n;  // finalize
      out[1] = n + (w - n + 1) % n;
      count = 2;
      return out;
    }
    case Stage::kTriple: {
      const ColorTriple t = encode_triple(w - high_base(), p);
      if (t.c != 0) {
        if (t.b != 0) {
          out[0] = high_base() + decode_triple(ColorTriple{0, t.b, t.a, p});
          out[1] = high_base() +
                   decode_triple(ColorTriple{t.c, (t.b + t.c) % p, t.a, p});
        } else {
          out[0] = static_cast<ColorWord>(t.a);  // <0,0,a>
          out[1] = high_base() + decode_triple(ColorTriple{t.c, t.c, t.a, p});
        }
      } else {
        out[0] = static_cast<ColorWord>(t.a);
        out[1] = high_base() +
                 decode_triple(ColorTriple{0, t.b, (t.a + t.b) % p, p});
      }
      count = 2;
      return out;
    }
  }
  throw std::logic_error("exact scheme: unreachable");
}

ColorWord ExactScheme::encode_initial(ColorWord value) const {
  if (value < low_limit) return value;  // final or mod-N working, verbatim
  const ColorWord pw = static_cast<ColorWord>(p);
  if (value >= pw * pw * pw)
    throw std::invalid_argument("exact scheme: initial color exceeds p^3");
  return high_base() + value;
}

ExactScheme make_exact_scheme(int delta, ColorWord source_palette) {
  ExactScheme s;
  s.n_mod = delta + 1;
  s.low_limit = static_cast<ColorWord>((3 * delta + 1) / 2);  // ceil(1.5 delta)
  if (s.low_limit < static_cast<ColorWord>(s.n_mod))
    s.low_limit = static_cast<ColorWord>(s.n_mod);
  int p = select_prime((3 * delta + 1) / 2 + 1 < 2 ? 2 : (3 * delta + 1) / 2 + 1);
  while (static_cast<ColorWord>(p) * p * p < source_palette) p = select_prime(p + 1);
  s.p = p;
  return s;
}

}  // namespace dcolor
