#pragma once

// Basic Clifford transformations on k sites, specified as tableaux: the
// images of the generators X_1..X_k, Z_1..Z_k under conjugation. A tableau
// determines the group element up to global phase, which is quotiented away.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffchain/pauli.hpp"

namespace cliffchain {

struct TableauViolation {
  int i = 0;             // 1-based generator indices of the failing pair
  int j = 0;
  char label_i = 'X';
  char label_j = 'Z';
  std::string reason;

  std::string str() const {
    return reason + " (" + label_i + std::to_string(i) + ", " + label_j + std::to_string(j) + ")";
  }
};

class CliffordTableau {
 public:
  CliffordTableau() = default;

  CliffordTableau(int k, std::vector<PauliString> img_x, std::vector<PauliString> img_z)
      : k_(k), img_x_(std::move(img_x)), img_z_(std::move(img_z)) {}

  static CliffordTableau identity(int k) {
    std::vector<PauliString> xs, zs;
    for (int i = 1; i <= k; ++i) {
      xs.push_back(PauliString::single(i, Pauli::X));
      zs.push_back(PauliString::single(i, Pauli::Z));
    }
    return CliffordTableau(k, std::move(xs), std::move(zs));
  }

  /// Build from text-format images, window 1..k.
  static CliffordTableau from_text(int k, const std::vector<std::string>& xs,
                                   const std::vector<std::string>& zs) {
    std::vector<PauliString> ix, iz;
    for (const auto& s : xs) ix.push_back(PauliString::parse(s));
    for (const auto& s : zs) iz.push_back(PauliString::parse(s));
    return CliffordTableau(k, std::move(ix), std::move(iz));
  }

  int k() const { return k_; }
  const PauliString& img_x(int i) const { return img_x_[static_cast<size_t>(i - 1)]; }
  const PauliString& img_z(int i) const { return img_z_[static_cast<size_t>(i - 1)]; }
  const std::vector<PauliString>& imgs_x() const { return img_x_; }
  const std::vector<PauliString>& imgs_z() const { return img_z_; }

  /// Symplectic validity: images Hermitian and non-trivial, supported on
  /// 1..k, with the generator (anti)commutation pattern preserved.
  std::optional<TableauViolation> validate() const {
    if (static_cast<int>(img_x_.size()) != k_ || static_cast<int>(img_z_.size()) != k_) {
      return TableauViolation{0, 0, 'X', 'Z', "image count does not match k"};
    }
    auto check_support = [&](const PauliString& p, int i, char label) -> std::optional<TableauViolation> {
      if (p.is_scalar()) return TableauViolation{i, i, label, label, "image is a scalar"};
      if (p.lo() < 1 || p.hi() > k_) return TableauViolation{i, i, label, label, "image out of window"};
      if (!p.hermitian() || p.phase().sign() == 0)
        return TableauViolation{i, i, label, label, "image not Hermitian"};
      return std::nullopt;
    };
    for (int i = 1; i <= k_; ++i) {
      if (auto v = check_support(img_x(i), i, 'X')) return v;
      if (auto v = check_support(img_z(i), i, 'Z')) return v;
    }
    auto gen = [&](int idx) -> const PauliString& {
      return idx < k_ ? img_x(idx + 1) : img_z(idx - k_ + 1);
    };
    auto label = [&](int idx) { return idx < k_ ? 'X' : 'Z'; };
    auto index = [&](int idx) { return idx < k_ ? idx + 1 : idx - k_ + 1; };
    for (int a = 0; a < 2 * k_; ++a) {
      for (int b = a + 1; b < 2 * k_; ++b) {
        bool want_anti = (b == a + k_);  // X_i with Z_i
        bool commute = gen(a).commutes_with(gen(b));
        if (commute == want_anti) {
          return TableauViolation{index(a), index(b), label(a), label(b),
                                  want_anti ? "images must anticommute" : "images must commute"};
        }
      }
    }
    return std::nullopt;
  }

  bool valid() const { return !validate().has_value(); }

  /// Conjugate p (supported on 1..k) by this tableau's Clifford element.
  PauliString conjugate(const PauliString& p) const {
    if (!p.is_scalar() && (p.lo() < 1 || p.hi() > k_)) {
      throw std::invalid_argument("conjugate: support of " + p.str() + " not within 1.." +
                                  std::to_string(k_));
    }
    // p = phase * i^{#Y} * prod_s X_s^{x_s} Z_s^{z_s}, sites in ascending order.
    PauliString out = PauliString::identity(p.phase());
    int y_count = 0;
    for (int s = p.lo(); s <= p.hi(); ++s) {
      Pauli letter = p.at(s);
      if (letter == Pauli::Y) ++y_count;
      if (pauli_x(letter)) out = out * img_x(s);
      if (pauli_z(letter)) out = out * img_z(s);
    }
    return out.scaled(Phase(y_count));
  }

  /// Composition: the result conjugates as "apply b, then a".
  friend CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.k() != b.k()) throw std::invalid_argument("compose: mismatched k");
    std::vector<PauliString> xs, zs;
    for (int i = 1; i <= a.k(); ++i) {
      xs.push_back(a.conjugate(b.img_x(i)));
      zs.push_back(a.conjugate(b.img_z(i)));
    }
    return CliffordTableau(a.k(), std::move(xs), std::move(zs));
  }

  /// Group inverse: compose(t, inverse(t)) is the identity tableau.
  CliffordTableau inverse() const {
    // Invert the letter map as a GF(2) symplectic matrix, then fix signs.
    const int n = 2 * k_;
    auto to_bits = [&](const PauliString& p) {
      std::vector<int> v(static_cast<size_t>(n), 0);
      for (int s = 1; s <= k_; ++s) {
        Pauli l = p.at(s);
        v[static_cast<size_t>(s - 1)] = pauli_x(l) ? 1 : 0;
        v[static_cast<size_t>(k_ + s - 1)] = pauli_z(l) ? 1 : 0;
      }
      return v;
    };
    // Columns of M are the images of the generators X_1..X_k, Z_1..Z_k.
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int c = 0; c < n; ++c) {
      auto col = to_bits(c < k_ ? img_x(c + 1) : img_z(c - k_ + 1));
      for (int r = 0; r < n; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = col[static_cast<size_t>(r)];
    }
    // Gauss-Jordan over GF(2), augmenting with the identity.
    std::vector<std::vector<int>> inv(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(col)]) { pivot = r; break; }
      if (pivot < 0) throw std::logic_error("inverse: singular tableau (invalid input)");
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
      std::swap(inv[static_cast<size_t>(pivot)], inv[static_cast<size_t>(col)]);
      for (int r = 0; r < n; ++r) {
        if (r != col && m[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
          for (int c = 0; c < n; ++c) {
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] ^= m[static_cast<size_t>(col)][static_cast<size_t>(c)];
            inv[static_cast<size_t>(r)][static_cast<size_t>(c)] ^= inv[static_cast<size_t>(col)][static_cast<size_t>(c)];
          }
        }
      }
    }
    // Column c of inv gives the preimage letters of generator c; fix signs so
    // that conjugating the candidate reproduces the generator exactly.
    auto build = [&](int c) {
      std::vector<Pauli> letters(static_cast<size_t>(k_), Pauli::I);
      for (int s = 1; s <= k_; ++s) {
        bool x = inv[static_cast<size_t>(s - 1)][static_cast<size_t>(c)];
        bool z = inv[static_cast<size_t>(k_ + s - 1)][static_cast<size_t>(c)];
        letters[static_cast<size_t>(s - 1)] = pauli_from_bits(x, z);
      }
      PauliString candidate(1, letters);
      PauliString target = c < k_ ? PauliString::single(c % k_ + 1, Pauli::X)
                                  : PauliString::single(c - k_ + 1, Pauli::Z);
      PauliString image = conjugate(candidate);
      if (!image.same_letters(target)) throw std::logic_error("inverse: letter map mismatch");
      if (!(image.phase() == target.phase())) candidate = candidate.scaled(phase_minus());
      return candidate;
    };
    std::vector<PauliString> xs, zs;
    for (int c = 0; c < n; ++c) (c < k_ ? xs : zs).push_back(build(c));
    return CliffordTableau(k_, std::move(xs), std::move(zs));
  }

  bool operator==(const CliffordTableau& o) const {
    return k_ == o.k_ && img_x_ == o.img_x_ && img_z_ == o.img_z_;
  }

  std::string str() const {
    std::string out = "k=" + std::to_string(k_);
    for (int i = 1; i <= k_; ++i)
      out += " X" + std::to_string(i) + "->" + img_x(i).str();
    for (int i = 1; i <= k_; ++i)
      out += " Z" + std::to_string(i) + "->" + img_z(i).str();
    return out;
  }

 private:
  int k_ = 0;
  std::vector<PauliString> img_x_, img_z_;
};

/// |C_k| = 2^(k^2 + 2k) * prod_{j=1..k} (4^j - 1).
inline uint64_t clifford_group_order(int k) {
  uint64_t order = uint64_t(1) << (k * k + 2 * k);
  uint64_t pow4 = 1;
  for (int j = 1; j <= k; ++j) {
    pow4 *= 4;
    order *= (pow4 - 1);
  }
  return order;
}

namespace detail {

/// All signed non-trivial Hermitian Pauli strings on 1..k, sorted by their
/// text serialization. This fixes the enumeration order.
inline std::vector<PauliString> signed_pauli_candidates(int k) {
  std::vector<PauliString> out;
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 4;
  for (int code = 1; code < total; ++code) {
    std::vector<Pauli> letters(static_cast<size_t>(k));
    int c = code;
    for (int i = 0; i < k; ++i) {
      letters[static_cast<size_t>(i)] = static_cast<Pauli>(c & 3);
      c >>= 2;
    }
    out.emplace_back(1, letters, phase_one());
    out.emplace_back(1, letters, phase_minus());
  }
  std::sort(out.begin(), out.end(),
            [](const PauliString& a, const PauliString& b) { return a.str() < b.str(); });
  return out;
}

}  // namespace detail

/// Enumerate C_1 or C_2, emitting each tableau exactly once in lexicographic
/// order of (imgX1, imgZ1[, imgX2, imgZ2]) over the text-format ordering.
inline void enumerate_cliffords(int k, const std::function<void(const CliffordTableau&)>& visit) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("enumerate_cliffords: only k in {1,2} is supported");
  }
  const auto candidates = detail::signed_pauli_candidates(k);
  if (k == 1) {
    for (const auto& x1 : candidates) {
      for (const auto& z1 : candidates) {
        if (x1.commutes_with(z1)) continue;
        visit(CliffordTableau(1, {x1}, {z1}));
      }
    }
    return;
  }
  for (const auto& x1 : candidates) {
    for (const auto& z1 : candidates) {
      if (x1.commutes_with(z1)) continue;
      for (const auto& x2 : candidates) {
        if (!x2.commutes_with(x1) || !x2.commutes_with(z1)) continue;
        for (const auto& z2 : candidates) {
          if (z2.commutes_with(x2)) continue;
          if (!z2.commutes_with(x1) || !z2.commutes_with(z1)) continue;
          visit(CliffordTableau(2, {x1, x2}, {z1, z2}));
        }
      }
    }
  }
}

inline std::vector<CliffordTableau> enumerate_cliffords(int k) {
  std::vector<CliffordTableau> out;
  enumerate_cliffords(k, [&](const CliffordTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace cliffchain
