#pragma once

#include <array>
#include <span>

#include "dcolor/color_algebra.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

/// Mixed mod-N / triple machinery that drives a proper coloring down to
/// exactly `n_mod` colors without a standard-reduction tail. Word layout:
///   [0, N)         final colors
///   [N, 2N)        mod-N working pairs <1, word - N>
///   [2N, 2N + p^3) working triples <c, b, a> stored as 2N + c*p^2 + b*p + a
/// The three ranges are disjoint, so the coloring stays proper as plain
/// numbers at every round. A triple may only collapse to a bare value
/// (which can land in [0, 2N)) when no neighbor holds a mod-N working word;
/// the hold flag enforces that.
struct ExactScheme {
  int n_mod = 2;         // N: the target palette size
  int p = 2;             // prime modulus of the triple stage
  ColorWord low_limit = 0;  // initial colors below this start as mod-N pairs

  ColorWord high_base() const { return 2ull * static_cast<ColorWord>(n_mod); }
  ColorWord palette() const {
    const ColorWord pw = static_cast<ColorWord>(p);
    return high_base() + pw * pw * pw;
  }

  enum class Stage { kFinal, kModN, kTriple };
  Stage stage(ColorWord w) const;
  bool is_final(ColorWord w) const { return w < static_cast<ColorWord>(n_mod); }

  struct Flags {
    bool b_conflict = false;  // triple c-phase test
    bool a_conflict = false;  // triple a-phase test (vs triples and finals)
    bool agn_conflict = false;  // mod-N value test (vs words below 2N)
    bool hold = false;          // some neighbor holds a mod-N working word
  };

  /// Conflict tests of `mine` against one set of neighbor words. For edge
  /// colorings the tests run at both endpoints and the flags are OR-ed.
  Flags flags(ColorWord mine, std::span<const ColorWord> neighbors) const;
  static Flags merge(const Flags& x, const Flags& y);

  ColorWord step(ColorWord mine, const Flags& f) const;

  /// The at-most-two words `w` can turn into next round, for exclusion sets.
  std::array<ColorWord, 2> successors(ColorWord w, int& count) const;

  /// Re-encodes an initial proper coloring value into the scheme's word
  /// space: values below low_limit become mod-N words (identity), the rest
  /// become working triples.
  ColorWord encode_initial(ColorWord value) const;
};

/// Sizes the scheme for a given degree bound and source palette:
/// N = delta + 1, low_limit = ceil(1.5 * delta), and p the smallest prime
/// with p >= ceil(1.5 * delta) + 1 and p^3 >= source_palette.
ExactScheme make_exact_scheme(int delta, ColorWord source_palette);

}  // namespace dcolor
