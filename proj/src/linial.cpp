#include "dcolor/linial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "dcolor/color_algebra.hpp"

namespace dcolor {
namespace {

// q^e with saturation, enough to compare against 64-bit palettes.
ColorWord sat_pow(ColorWord q, int e) {
  ColorWord r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<ColorWord>::max() / q)
      return std::numeric_limits<ColorWord>::max();
    r *= q;
  }
  return r;
}

int min_degree_for(int field, ColorWord source) {
  for (int d = 1; d <= 64; ++d)
    if (sat_pow(static_cast<ColorWord>(field), d + 1) >= source) return d;
  throw std::logic_error("linial: degree search overflow");
}

// Digits of `color` in base `field`, low first; these are the coefficients.
void poly_of(ColorWord color, int field, int degree, int* coeff) {
  for (int k = 0; k <= degree; ++k) {
    coeff[k] = static_cast<int>(color % static_cast<ColorWord>(field));
    color /= static_cast<ColorWord>(field);
  }
}

int poly_eval(const int* coeff, int degree, int x, int field) {
  long long acc = 0;
  for (int k = degree; k >= 0; --k) acc = (acc * x + coeff[k]) % field;
  return static_cast<int>(acc);
}

}  // namespace

LinialParams linial_params_floored(ColorWord source, int delta, int forbidden_cap,
                                   int min_field_exclusive) {
  if (source < 1) throw std::invalid_argument("linial_params: empty palette");
  int q = select_prime(std::max(2, min_field_exclusive + 1));
  for (;; q = select_prime(q + 1)) {
    const int d = min_degree_for(q, source);
    if (q >= d * delta + 2 * forbidden_cap + 1) {
      LinialParams p;
      p.field = q;
      p.degree = d;
      p.source = source;
      p.delta = delta;
      p.forbidden_cap = forbidden_cap;
      p.identity = p.target() >= source;
      return p;
    }
  }
}

LinialParams linial_params(ColorWord source, int delta, int forbidden_cap) {
  return linial_params_floored(source, delta, forbidden_cap, 1);
}

ColorWord linial_step(ColorWord my_color, std::span<const ColorWord> neighbor_colors,
                      std::span<const ColorWord> forbidden, const LinialParams& params) {
  if (my_color >= params.source)
    throw std::invalid_argument("linial_step: color outside source palette");
  if (static_cast<int>(neighbor_colors.size()) > params.delta)
    throw std::invalid_argument("linial_step: more neighbors than delta");
  if (static_cast<int>(forbidden.size()) > params.forbidden_cap)
    throw std::invalid_argument("linial_step: forbidden set larger than sized for");
  for (ColorWord nb : neighbor_colors) {
    if (nb >= params.source)
      throw std::invalid_argument("linial_step: neighbor color outside palette");
    if (nb == my_color)
      throw std::invalid_argument("linial_step: input coloring not proper");
  }

  std::vector<ColorWord> banned(forbidden.begin(), forbidden.end());
  std::sort(banned.begin(), banned.end());

  const int d = params.degree;
  std::vector<int> mine(static_cast<std::size_t>(d) + 1);
  poly_of(my_color, params.field, d, mine.data());
  std::vector<int> theirs(neighbor_colors.size() * (static_cast<std::size_t>(d) + 1));
  for (std::size_t i = 0; i < neighbor_colors.size(); ++i)
    poly_of(neighbor_colors[i], params.field, d, theirs.data() + i * (d + 1));

  for (int x = 0; x < params.field; ++x) {
    const int y = poly_eval(mine.data(), d, x, params.field);
    bool clash = false;
    for (std::size_t i = 0; i < neighbor_colors.size() && !clash; ++i)
      clash = poly_eval(theirs.data() + i * (d + 1), d, x, params.field) == y;
    if (clash) continue;
    const ColorWord word =
        static_cast<ColorWord>(x) * static_cast<ColorWord>(params.field) +
        static_cast<ColorWord>(y);
    if (std::binary_search(banned.begin(), banned.end(), word)) continue;
    return word;
  }
  throw std::logic_error("linial_step: no valid point; parameters undersized");
}

std::vector<LinialParams> linial_chain(ColorWord source, int delta, ColorWord stop_at) {
  std::vector<LinialParams> chain;
  ColorWord m = source;
  while (m > stop_at) {
    LinialParams p = linial_params(m, delta, 0);
    if (p.identity || p.target() >= m) break;
    chain.push_back(p);
    m = p.target();
  }
  return chain;
}

namespace {

IntervalTable build_table(ColorWord n_bound, int delta, IntervalTable::Mode mode) {
  if (n_bound < static_cast<ColorWord>(delta) + 1 || delta + 1 < 2)
    throw std::invalid_argument("interval_table: need n_bound >= delta+1 >= 2");
  IntervalTable t;
  t.mode = mode;
  t.n_bound = n_bound;
  t.delta = delta;
  t.ag_field = select_prime(6 * delta + 1);

  ColorWord t1;
  int floor_field = t.ag_field;
  if (mode == IntervalTable::Mode::kExact) {
    const ColorWord pair_palette =
        static_cast<ColorWord>(t.ag_field) * static_cast<ColorWord>(t.ag_field);
    t.exact = make_exact_scheme(delta, pair_palette);
    t1 = t.exact.palette();
    // chain palettes must stay strictly above |I_0|
    while (static_cast<ColorWord>(floor_field) * static_cast<ColorWord>(floor_field) <= t1)
      ++floor_field;
  } else {
    t1 = static_cast<ColorWord>(t.ag_field) * static_cast<ColorWord>(t.ag_field);
  }

  const ColorWord final_capacity = sat_pow(static_cast<ColorWord>(t.ag_field), 3);
  std::vector<LinialParams> chain;  // application order, from the id palette down
  ColorWord m = n_bound;
  while (m > final_capacity) {
    LinialParams p = linial_params_floored(m, delta, 0, floor_field);
    if (p.target() >= m)
      throw std::logic_error("interval_table: reduction chain stalled");
    chain.push_back(p);
    m = p.target();
  }

  t.r = static_cast<int>(chain.size()) + 1;
  t.sizes.assign(static_cast<std::size_t>(t.r) + 1, 0);
  t.step_params.assign(static_cast<std::size_t>(t.r) + 1, LinialParams{});
  t.sizes[0] = t1;
  t.sizes[static_cast<std::size_t>(t.r)] = n_bound;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    // chain step k maps I_{r-k} into I_{r-k-1}
    t.step_params[static_cast<std::size_t>(t.r) - k] = chain[k];
    t.sizes[static_cast<std::size_t>(t.r) - k - 1] = chain[k].target();
  }
  LinialParams last;
  last.field = t.ag_field;
  last.degree = 2;
  last.source = m;
  last.delta = delta;
  last.forbidden_cap = 2 * delta;
  last.identity = false;
  t.step_params[1] = last;

  t.starts.assign(static_cast<std::size_t>(t.r) + 1, 0);
  for (int j = 1; j <= t.r; ++j)
    t.starts[static_cast<std::size_t>(j)] =
        t.starts[static_cast<std::size_t>(j) - 1] + t.sizes[static_cast<std::size_t>(j) - 1];
  return t;
}

}  // namespace

IntervalTable interval_table(ColorWord n_bound, int delta) {
  return build_table(n_bound, delta, IntervalTable::Mode::kPair);
}

IntervalTable interval_table_exact(ColorWord n_bound, int delta) {
  return build_table(n_bound, delta, IntervalTable::Mode::kExact);
}

int IntervalTable::interval_of(ColorWord w) const {
  if (w >= total_words()) return -1;
  for (int j = r; j >= 0; --j)
    if (w >= starts[static_cast<std::size_t>(j)]) return j;
  return -1;
}

ColorWord mod_linial(ColorWord my_color, std::span<const ColorWord> q_colors,
                     std::span<const ColorWord> s_forbidden, const IntervalTable& table) {
  const int j = table.interval_of(my_color);
  if (j < 1)
    throw std::invalid_argument("mod_linial: color not in a reducible interval");
  const LinialParams& params = table.step_params[static_cast<std::size_t>(j)];
  const ColorWord base = table.starts[static_cast<std::size_t>(j)];

  std::vector<ColorWord> q_local;
  q_local.reserve(q_colors.size());
  for (ColorWord w : q_colors) {
    if (table.interval_of(w) != j)
      throw std::invalid_argument("mod_linial: Q color outside my interval");
    q_local.push_back(w - base);
  }

  std::vector<ColorWord> banned;
  if (j == 1) {
    const ColorWord off = table.mode == IntervalTable::Mode::kExact
                              ? table.exact.high_base()
                              : 0;
    for (ColorWord w : s_forbidden)
      if (w >= off && w - off < params.target()) banned.push_back(w - off);
  }

  const ColorWord out = linial_step(my_color - base, q_local, banned, params);
  if (j >= 2) return table.starts[static_cast<std::size_t>(j) - 1] + out;
  return table.mode == IntervalTable::Mode::kExact ? table.exact.high_base() + out : out;
}

std::vector<ColorWord> cv_fold_palettes(ColorWord initial_palette) {
  std::vector<ColorWord> out;
  ColorWord p = initial_palette;
  while (p > 6) {
    const ColorWord next = 2ull * std::bit_width(p - 1);
    if (next >= p) break;
    out.push_back(next);
    p = next;
  }
  return out;
}

std::vector<int> cole_vishkin_3color(std::span<const std::uint64_t> ids,
                                     std::span<const int> succ) {
  const std::size_t n = ids.size();
  if (succ.size() != n)
    throw std::invalid_argument("cole_vishkin: ids/succ size mismatch");
  std::vector<int> pred(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = succ[i];
    if (s == -1) continue;
    if (s < 0 || static_cast<std::size_t>(s) >= n || static_cast<std::size_t>(s) == i)
      throw std::invalid_argument("cole_vishkin: bad successor link");
    if (pred[static_cast<std::size_t>(s)] != -1)
      throw std::runtime_error("cole_vishkin: item with more than two incident items");
    pred[static_cast<std::size_t>(s)] = static_cast<int>(i);
  }
  {
    std::vector<std::uint64_t> sorted(ids.begin(), ids.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cole_vishkin: identifiers not unique");
  }

  std::vector<std::uint64_t> color(ids.begin(), ids.end());
  auto fold = [](std::uint64_t c, std::uint64_t other) {
    if (c == other) throw std::logic_error("cole_vishkin: equal adjacent colors");
    const int i = std::countr_zero(c ^ other);
    return 2ull * static_cast<std::uint64_t>(i) + ((c >> i) & 1ull);
  };
  auto max_color = [&] { return *std::max_element(color.begin(), color.end()); };

  while (n > 0 && max_color() > 5) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t other =
          succ[i] == -1 ? (color[i] ^ 1ull) : color[static_cast<std::size_t>(succ[i])];
      next[i] = fold(color[i], other);
    }
    color.swap(next);
  }

  for (int target = 5; target >= 3; --target) {
    std::vector<std::uint64_t> next = color;
    for (std::size_t i = 0; i < n; ++i) {
      if (color[i] != static_cast<std::uint64_t>(target)) continue;
      bool used[3] = {false, false, false};
      if (succ[i] != -1 && color[static_cast<std::size_t>(succ[i])] < 3)
        used[color[static_cast<std::size_t>(succ[i])]] = true;
      if (pred[i] != -1 && color[static_cast<std::size_t>(pred[i])] < 3)
        used[color[static_cast<std::size_t>(pred[i])]] = true;
      for (std::uint64_t c = 0; c < 3; ++c)
        if (!used[c]) {
          next[i] = c;
          break;
        }
    }
    color.swap(next);
  }

  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (color[i] > 2) throw std::logic_error("cole_vishkin: reduction left a color above 2");
    out[i] = static_cast<int>(color[i]);
  }
  return out;
}

}  // namespace dcolor
