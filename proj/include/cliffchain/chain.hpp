#pragma once

// The staircase transformation U_chain = prod_n U_{n..n+k-1} as a symbolic
// conjugation engine. The product is ordered so that the factor on the
// left-most sites acts first; conjugating a bulk operator therefore sweeps
// left to right, and the rightmost k-1 sites of the partial image (the
// "frontier") evolve under a finite deterministic map. A frontier that dies
// gives a local image; a frontier that cycles gives a periodic string.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffchain/pauli.hpp"
#include "cliffchain/tableau.hpp"

namespace cliffchain {

/// Site-dependent sign (-1)^{x(n)}, stored as samples over n mod period.
/// All oscillations arising from k <= 3 staircases have period dividing 12.
struct SignRule {
  int period = 1;
  std::array<int, 12> samples = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

  int eval(int n) const {
    int r = n % period;
    if (r < 0) r += period;
    return samples[static_cast<size_t>(r)];
  }

  bool constant() const { return period == 1; }

  bool operator==(const SignRule& o) const {
    if (period != o.period) return false;
    for (int r = 0; r < period; ++r)
      if (samples[static_cast<size_t>(r)] != o.samples[static_cast<size_t>(r)]) return false;
    return true;
  }

  std::string str() const {
    std::string s = "period=" + std::to_string(period) + " ";
    for (int r = 0; r < period; ++r) s += samples[static_cast<size_t>(r)] > 0 ? '+' : '-';
    return s;
  }

  /// Build from 24 consecutive sign samples starting at n0; finds the
  /// minimal period dividing 12.
  static SignRule fit(int n0, const std::array<int, 24>& signs) {
    for (int p : {1, 2, 3, 4, 6, 12}) {
      bool ok = true;
      for (int i = 0; i + p < 24 && ok; ++i) ok = signs[static_cast<size_t>(i)] == signs[static_cast<size_t>(i + p)];
      if (!ok) continue;
      SignRule rule;
      rule.period = p;
      for (int i = 0; i < p; ++i) {
        int r = (n0 + i) % p;
        if (r < 0) r += p;
        rule.samples[static_cast<size_t>(r)] = signs[static_cast<size_t>(i)];
      }
      return rule;
    }
    throw std::logic_error("SignRule::fit: sign sequence has no period dividing 12");
  }
};

/// Image of a local operator under U_chain, in coordinates relative to the
/// seed. NonLocal images carry the exact frozen prefix, the repeating tail
/// pattern, and the frontier cycle; the boundary operator is resolved only
/// once a concrete chain length is supplied.
struct ChainImage {
  bool local = true;

  // Local case: the exact image (sign folded into op's phase).
  PauliString op;

  // NonLocal case.
  PauliString prefix;        // letters strictly left of tail_start; phase at cycle entry
  int tail_start = 0;        // first site of the repeating pattern
  std::vector<Pauli> tail;   // letters laid per period, starting at tail_start
  int period = 0;
  int cycle_sign = 1;        // phase factor per full period
  std::vector<Pauli> frontier;  // frontier letters at cycle entry (k-1 sites)
  SignRule sign_rule;        // canonical-phase oscillation vs seed site (see extract)

  int tail_weight() const {
    int w = 0;
    for (Pauli p : tail)
      if (p != Pauli::I) ++w;
    return w;
  }

  std::string str() const {
    if (local) return "local " + op.str();
    std::string t;
    for (Pauli p : tail) t += pauli_char(p);
    std::string f;
    for (Pauli p : frontier) f += pauli_char(p);
    return "nonlocal prefix=" + prefix.str() + " tail=" + t + "@" + std::to_string(tail_start) +
           " cycleSign=" + (cycle_sign > 0 ? std::string("+") : std::string("-")) + " frontier=" + f;
  }
};

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Conjugate the part of p inside window [m, m+k-1] by the tableau.
inline PauliString sweep_step(const CliffordTableau& u, const PauliString& p, int m) {
  const int k = u.k();
  std::vector<Pauli> window(static_cast<size_t>(k), Pauli::I);
  bool trivial = true;
  for (int i = 0; i < k; ++i) {
    window[static_cast<size_t>(i)] = p.at(m + i);
    if (window[static_cast<size_t>(i)] != Pauli::I) trivial = false;
  }
  if (trivial) return p;
  // p factors as phase * rest * w with disjoint supports (no reordering phase).
  std::vector<Pauli> rest_letters;
  int rest_lo = p.lo();
  if (!p.is_scalar()) {
    rest_letters.assign(p.letters().begin(), p.letters().end());
    for (int i = 0; i < k; ++i) {
      int s = m + i;
      if (s >= p.lo() && s <= p.hi()) rest_letters[static_cast<size_t>(s - p.lo())] = Pauli::I;
    }
  }
  PauliString rest(rest_lo, std::move(rest_letters), p.phase());
  PauliString image = u.conjugate(PauliString(1, window)).translated(m - 1);
  return rest * image;
}

}  // namespace detail

/// Exact conjugation by the full finite staircase on sites 1..L
/// (factors m = 1 .. L-k+1, left-most first). Support must lie in [1, L].
inline PauliString conjugate_finite(const CliffordTableau& u, const PauliString& p, int L) {
  if (!p.is_scalar() && (p.lo() < 1 || p.hi() > L)) {
    throw std::invalid_argument("conjugate_finite: support outside chain 1.." + std::to_string(L));
  }
  PauliString cur = p;
  for (int m = 1; m + u.k() - 1 <= L; ++m) {
    if (!cur.is_scalar() && cur.hi() < m) break;
    cur = detail::sweep_step(u, cur, m);
  }
  return cur;
}

/// Bulk image of a local operator under U_chain on an infinite chain.
/// Terminates with a Local image when the frontier dies, or detects the
/// frontier cycle and returns the NonLocal description.
inline ChainImage bulk_image(const CliffordTableau& u, const PauliString& seed, int horizon = 64) {
  if (seed.is_scalar()) {
    ChainImage img;
    img.local = true;
    img.op = seed;
    return img;
  }
  const int k = u.k();
  const int m0 = seed.lo() - k + 1;
  const int autonomous_from = seed.hi() + 1;
  PauliString cur = seed;
  std::map<int, std::pair<int, Phase>> seen;  // frontier key -> (m, phase)
  for (int m = m0; m <= m0 + horizon; ++m) {
    if (cur.is_scalar() || cur.hi() < m) {
      ChainImage img;
      img.local = true;
      img.op = cur;
      return img;
    }
    if (k > 1 && m >= autonomous_from) {
      int key = 0;
      for (int i = 0; i < k - 1; ++i) key = key * 4 + static_cast<int>(cur.at(m + i));
      auto it = seen.find(key);
      if (it != seen.end()) {
        const int m1 = it->second.first;
        ChainImage img;
        img.local = false;
        img.period = m - m1;
        img.tail_start = m1;
        for (int s = m1; s < m; ++s) img.tail.push_back(cur.at(s));
        std::vector<Pauli> prefix_letters;
        for (int s = cur.lo(); s < m1; ++s) prefix_letters.push_back(cur.at(s));
        img.prefix = PauliString(cur.lo(), std::move(prefix_letters), it->second.second);
        for (int i = 0; i < k - 1; ++i) img.frontier.push_back(cur.at(m + i));
        Phase ratio = cur.phase() * it->second.second.conjugated();
        if (ratio.sign() == 0) throw std::logic_error("bulk_image: non-real cycle phase");
        img.cycle_sign = ratio.sign();
        return img;
      }
      seen.emplace(key, std::make_pair(m, cur.phase()));
    }
    cur = detail::sweep_step(u, cur, m);
  }
  throw std::logic_error("bulk_image: horizon exhausted without termination or cycle");
}

inline ChainImage image_of_site_pauli(const CliffordTableau& u, Pauli letter, int horizon = 64) {
  if (letter == Pauli::I) {
    ChainImage img;
    img.op = PauliString::identity();
    return img;
  }
  return bulk_image(u, PauliString::single(0, letter), horizon);
}

/// Canonical phase of the finite-chain image of translate(seed, n) as a
/// function of n at fixed L, computed from the cycle data (exact; the last
/// factor is m = L-k+1). Only valid for NonLocal images.
inline SignRule extract_sign_rule(const CliffordTableau& u, const PauliString& seed,
                                  const ChainImage& img, int L_ref = 48) {
  if (img.local) {
    return SignRule{};
  }
  // Phase deltas across one cycle, starting at the cycle entry.
  const int k = u.k();
  PauliString cur = seed;
  for (int m = seed.lo() - k + 1; m < img.tail_start; ++m) cur = detail::sweep_step(u, cur, m);
  std::vector<int> delta;
  for (int r = 0; r < img.period; ++r) {
    Phase before = cur.phase();
    cur = detail::sweep_step(u, cur, img.tail_start + r);
    Phase ratio = cur.phase() * before.conjugated();
    if (ratio.sign() == 0) throw std::logic_error("extract_sign_rule: non-real step phase");
    delta.push_back(ratio.sign());
  }
  std::array<int, 24> signs{};
  const int n0 = 4;
  for (int i = 0; i < 24; ++i) {
    int n = n0 + i;
    // Seed translated to n: cycle entry at n + tail_start, sweep ends after
    // factor m = L-k+1.
    int steps = (L_ref - k + 1) - (n + img.tail_start) + 1;
    if (steps < img.period) throw std::invalid_argument("extract_sign_rule: L_ref too small");
    int sign = img.prefix.phase().sign();
    int full = steps / img.period;
    if (img.cycle_sign < 0 && (full & 1)) sign = -sign;
    for (int r = 0; r < steps % img.period; ++r) sign *= delta[static_cast<size_t>(r)];
    signs[static_cast<size_t>(i)] = sign;
  }
  return SignRule::fit(n0, signs);
}

// ---------------------------------------------------------------------------
// Chain transforms: ordered sequences of staircases (k = 1 staircases are
// on-site changes of basis). Step 0 conjugates first.
// ---------------------------------------------------------------------------

struct ChainTransform {
  std::vector<CliffordTableau> steps;
  std::string name;

  static ChainTransform staircase(CliffordTableau u, std::string name = "") {
    return ChainTransform{{std::move(u)}, std::move(name)};
  }

  /// Composition "apply inner first, then outer".
  static ChainTransform composed(const ChainTransform& outer, const ChainTransform& inner) {
    ChainTransform t;
    t.steps = inner.steps;
    t.steps.insert(t.steps.end(), outer.steps.begin(), outer.steps.end());
    t.name = outer.name.empty() || inner.name.empty() ? "" : outer.name + "*" + inner.name;
    return t;
  }

  int max_k() const {
    int k = 1;
    for (const auto& s : steps) k = std::max(k, s.k());
    return k;
  }
};

/// Image of a local string under the transform. Every intermediate image
/// must be local; only the final step may produce a NonLocal image.
inline ChainImage image_of_string(const ChainTransform& t, const PauliString& p, int horizon = 64) {
  PauliString cur = p;
  for (size_t i = 0; i < t.steps.size(); ++i) {
    ChainImage img = bulk_image(t.steps[i], cur, horizon);
    if (!img.local) {
      if (i + 1 != t.steps.size()) {
        throw CompositionError("image_of_string: non-local intermediate image of " + p.str());
      }
      img.sign_rule = extract_sign_rule(t.steps[i], cur, img);
      return img;
    }
    cur = img.op;
  }
  ChainImage img;
  img.local = true;
  img.op = cur;
  return img;
}

/// compose_images per the composition contract: image of p under outer after
/// inner. Errors (CompositionError) if the inner image is non-local.
inline ChainImage compose_images(const ChainTransform& outer, const ChainTransform& inner,
                                 const PauliString& p) {
  return image_of_string(ChainTransform::composed(outer, inner), p);
}

/// Exact finite-chain conjugation through every step.
inline PauliString conjugate_finite(const ChainTransform& t, const PauliString& p, int L) {
  PauliString cur = p;
  for (const auto& step : t.steps) cur = conjugate_finite(step, cur, L);
  return cur;
}

/// Local image family across translations: base image of p and the sign as a
/// function of the translation j. Letters must be translation covariant.
/// Throws CompositionError / returns nullopt-like via the bool for non-local.
struct LocalFamily {
  bool local = true;
  PauliString base;      // image of p itself (j = 0), sign included for j = 0
  SignRule sign_rule;    // sign(j) relative to |base|'s letters; sign_rule.eval(0) matches base
  std::string nonlocal_reason;
};

inline LocalFamily local_image_family(const ChainTransform& t, const PauliString& p) {
  LocalFamily fam;
  std::array<int, 24> signs{};
  PauliString base;
  for (int j = 0; j < 24; ++j) {
    ChainImage img = image_of_string(t, p.translated(j));
    if (!img.local) {
      fam.local = false;
      fam.nonlocal_reason = img.str();
      return fam;
    }
    PauliString normalized = img.op.translated(-j);
    if (j == 0) {
      base = normalized;
    } else if (!normalized.same_letters(base)) {
      throw std::logic_error("local_image_family: letters not translation covariant for " + p.str());
    }
    Phase ratio = normalized.phase() * base.phase().conjugated();
    if (ratio.sign() == 0) throw std::logic_error("local_image_family: non-real sign ratio");
    signs[static_cast<size_t>(j)] = ratio.sign();
  }
  fam.base = base;
  fam.sign_rule = SignRule::fit(0, signs);
  return fam;
}

}  // namespace cliffchain
