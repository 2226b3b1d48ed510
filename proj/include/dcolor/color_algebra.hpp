#pragma once

#include <cstdint>
#include <span>

#include "dcolor/types.hpp"

namespace dcolor {

/// Smallest prime >= lower (lower >= 2). Deterministic trial division; the
/// moduli in play never exceed a few million.
int select_prime(int lower);
bool is_prime(int x);

/// Two-coordinate color <a, b> over modulus q. The first coordinate is the
/// working flag: a == 0 means the color is final. Numeric value a*q + b.
/// In the mod-N variant q = N may be composite and a is restricted to {0,1}.
struct ColorPair {
  int a = 0;
  int b = 0;
  int q = 2;

  bool final_stage() const { return a == 0; }
  bool operator==(const ColorPair&) const = default;
};

ColorPair encode_pair(ColorWord i, int q);  // requires i < q*q
ColorWord decode_pair(const ColorPair& p);

/// True iff some neighbor shares the second coordinate (final or working
/// alike). Mixed moduli are a caller bug and throw.
bool has_conflict(const ColorPair& mine, std::span<const ColorPair> neighbors);

/// One additive-group round: conflicted -> <a, (b+a) mod q>, otherwise the
/// color finalizes to <0, b>. Final colors are fixed points of both branches.
ColorPair ag_update(const ColorPair& mine, bool conflicted);

/// Mod-N update on pairs <flag, value>, flag in {0,1}, arithmetic mod N.
/// flag == 0 is final; a working color steps its value by 1 while conflicted
/// or held, and finalizes otherwise.
ColorPair agn_update(const ColorPair& mine, bool conflicted, bool hold, int n_mod);

/// Additive-group round that tolerates up to `p` conflicts with neighbors of
/// a different original color; at most p -> finalize, else <a, (a+b) mod q>.
ColorPair arb_update(const ColorPair& mine, int cross_color_conflicts, int p);

/// Three-coordinate color <c, b, a> over prime p. Fully final when c and b
/// are both zero. Numeric value c*p^2 + b*p + a.
struct ColorTriple {
  int c = 0;
  int b = 0;
  int a = 0;
  int p = 2;

  bool fully_final() const { return c == 0 && b == 0; }
  bool operator==(const ColorTriple&) const = default;
};

ColorTriple encode_triple(ColorWord i, int p);  // requires i < p^3
ColorWord decode_triple(const ColorTriple& t);

/// One three-coordinate round. While c != 0 the b coordinate is worked on
/// (finalizing zeroes c); once c == 0 the a coordinate is worked on
/// (finalizing zeroes b). `hold` blocks any step that could reach <0,0,a>
/// and circles the color instead.
ColorTriple three_ag_update(const ColorTriple& mine, bool b_conflicted,
                            bool a_conflicted, bool hold);

/// Conflict predicate for the c-phase of the triple scheme: a neighbor with
/// the same b blocks finalization only when its c differs; a neighbor with an
/// identical <c, b> prefix necessarily differs in a, so both sides may
/// finalize simultaneously without colliding.
inline bool triple_b_conflicts(const ColorTriple& mine, const ColorTriple& other) {
  return other.b == mine.b && other.c != mine.c;
}

}  // namespace dcolor
