#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcolor/exact_scheme.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

/// Parameters of one polynomial color-reduction step from a palette of size
/// `source` into `field^2` colors. Colors map to polynomials of degree at
/// most `degree` over GF(field) via base-`field` digits; the field satisfies
///   field^(degree+1) >= source          (enough distinct polynomials)
///   field >= degree*delta + 2*forbidden_cap + 1   (a safe point exists)
struct LinialParams {
  int field = 2;
  int degree = 1;
  ColorWord source = 2;
  int delta = 0;
  int forbidden_cap = 0;
  bool identity = false;  // target palette >= source: the step cannot shrink

  ColorWord target() const {
    return static_cast<ColorWord>(field) * static_cast<ColorWord>(field);
  }
};

/// Smallest prime field (then minimal degree) satisfying the invariants.
LinialParams linial_params(ColorWord source, int delta, int forbidden_cap);
/// Same, scanning only fields strictly above `min_field_exclusive`.
LinialParams linial_params_floored(ColorWord source, int delta, int forbidden_cap,
                                   int min_field_exclusive);

/// One reduction step. Picks the smallest x in GF(field) such that my
/// polynomial differs from every neighbor's polynomial at x and the pair
/// <x, g(x)> (encoded x*field + g(x)) avoids the forbidden set. Throws if the
/// input is not a proper coloring or no point survives (a parameter bug).
ColorWord linial_step(ColorWord my_color, std::span<const ColorWord> neighbor_colors,
                      std::span<const ColorWord> forbidden, const LinialParams& params);

/// Chain of non-identity F=0 steps starting from `source`, stopping once the
/// palette is at most `stop_at` or the step no longer shrinks.
std::vector<LinialParams> linial_chain(ColorWord source, int delta, ColorWord stop_at);

/// ROM-computable interval layout for the self-stabilizing pipelines.
/// I_0 holds the additive-group (or exact-scheme) colors, I_1..I_{r-1} the
/// intermediate reduction palettes, I_r the id-based initial colors.
struct IntervalTable {
  enum class Mode { kPair, kExact };
  Mode mode = Mode::kPair;
  ColorWord n_bound = 1;
  int delta = 0;
  int r = 1;
  std::vector<ColorWord> sizes;   // sizes[j] = |I_j|, j = 0..r
  std::vector<ColorWord> starts;  // starts[j], starts[0] == 0
  std::vector<LinialParams> step_params;  // [j] drives I_j -> I_{j-1}; [0] unused
  int ag_field = 2;    // pair modulus of I_0 (pair mode); final-step field (both)
  ExactScheme exact;   // valid in exact mode

  int interval_of(ColorWord w) const;  // -1 when out of range
  ColorWord initial_word(VertexId id) const {
    return starts[static_cast<std::size_t>(r)] + static_cast<ColorWord>(id);
  }
  ColorWord total_words() const {
    return starts[static_cast<std::size_t>(r)] + n_bound;
  }
};

IntervalTable interval_table(ColorWord n_bound, int delta);
IntervalTable interval_table_exact(ColorWord n_bound, int delta);

/// Interval-aware reduction step: `my_color` in I_j (j >= 1) re-colors into
/// I_{j-1}, avoiding same-interval neighbors `q_colors` and (for j == 1) the
/// absolute forbidden words `s_forbidden`.
ColorWord mod_linial(ColorWord my_color, std::span<const ColorWord> q_colors,
                     std::span<const ColorWord> s_forbidden, const IntervalTable& table);

/// Deterministic 3-coloring of disjoint paths/cycles given per-item successor
/// links (index into the arrays, -1 for none). Bit-index folding down to six
/// colors, then one recoloring round per class 5, 4, 3.
std::vector<int> cole_vishkin_3color(std::span<const std::uint64_t> ids,
                                     std::span<const int> succ);

/// Palette bound after each fold round starting from `initial_palette`, until
/// the palette reaches six. Used for message-size schedules.
std::vector<ColorWord> cv_fold_palettes(ColorWord initial_palette);

}  // namespace dcolor
