#pragma once

// Exact arithmetic for phased Pauli strings on an integer lattice.
//
// A PauliString is a finite product of single-site Pauli letters together
// with a global fourth-root-of-unity phase. Site indices are signed so that
// bulk-centered chains (first site near -L/2) need no re-indexing.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffchain {

// Letters are encoded as an (x,z) bit pair: I=00, X=01, Z=10, Y=11.
// Products of letters then reduce to XOR plus a phase lookup.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>((x ? 1 : 0) | (z ? 2 : 0));
}
inline constexpr bool pauli_x(Pauli p) { return static_cast<uint8_t>(p) & 1; }
inline constexpr bool pauli_z(Pauli p) { return static_cast<uint8_t>(p) & 2; }

inline constexpr char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Z': return Pauli::Z;
    case 'Y': return Pauli::Y;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

// Exponent s of i^s picked up when multiplying letters: a*b = i^s (a xor b).
// Derived from ZX = iY and cyclic relatives; identities and squares give 0.
inline constexpr int letter_phase_exponent(Pauli a, Pauli b) {
  constexpr std::array<std::array<int, 4>, 4> table = {{
      // b:  I  X  Z  Y          a:
      {{0, 0, 0, 0}},         // I
      {{0, 0, 3, 1}},         // X   (XZ = -iY, XY = iZ)
      {{0, 1, 0, 3}},         // Z   (ZX = iY,  ZY = -iX)
      {{0, 3, 1, 0}},         // Y   (YX = -iZ, YZ = iX)
  }};
  return table[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

inline constexpr bool letters_commute(Pauli a, Pauli b) {
  return a == Pauli::I || b == Pauli::I || a == b;
}

/// Phase in {+1, +i, -1, -i}, stored as the exponent s of i^s.
struct Phase {
  uint8_t s = 0;  // mod 4

  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : s(static_cast<uint8_t>(((exponent % 4) + 4) % 4)) {}

  constexpr Phase operator*(Phase o) const { return Phase(s + o.s); }
  Phase& operator*=(Phase o) { s = (s + o.s) & 3; return *this; }
  constexpr Phase conjugated() const { return Phase(-static_cast<int>(s)); }
  constexpr bool is_real() const { return (s & 1) == 0; }
  constexpr int sign() const { return s == 0 ? 1 : (s == 2 ? -1 : 0); }  // 0 for imaginary
  constexpr bool operator==(const Phase&) const = default;

  std::string str() const {
    static const char* names[4] = {"+", "+i", "-", "-i"};
    return names[s & 3];
  }
};

inline constexpr Phase phase_one() { return Phase(0); }
inline constexpr Phase phase_i() { return Phase(1); }
inline constexpr Phase phase_minus() { return Phase(2); }

/// Phased Pauli string on a closed window [lo, lo + letters.size() - 1].
/// Canonical form: boundary letters are non-identity; the scalar has an
/// empty window with lo = 0. Equality is structural on the canonical form.
class PauliString {
 public:
  PauliString() = default;  // scalar +1

  PauliString(int lo, std::vector<Pauli> letters, Phase phase = Phase())
      : lo_(lo), letters_(std::move(letters)), phase_(phase) {
    canonicalize();
  }

  static PauliString identity(Phase phase = Phase()) { return PauliString(0, {}, phase); }

  static PauliString single(int site, Pauli p, Phase phase = Phase()) {
    return PauliString(site, {p}, phase);
  }

  /// Parse the text format: optional "+", "-", "+i", "-i", letters, "@lo".
  static PauliString parse(const std::string& text) {
    size_t pos = 0;
    int exponent = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      bool neg = text[pos] == '-';
      ++pos;
      if (pos < text.size() && text[pos] == 'i') {
        exponent = neg ? 3 : 1;
        ++pos;
      } else {
        exponent = neg ? 2 : 0;
      }
    }
    std::vector<Pauli> letters;
    while (pos < text.size() && text[pos] != '@') {
      letters.push_back(pauli_from_char(text[pos]));
      ++pos;
    }
    if (pos >= text.size() || text[pos] != '@') {
      throw std::invalid_argument("pauli text missing '@lo' suffix: " + text);
    }
    ++pos;
    size_t used = 0;
    int lo = std::stoi(text.substr(pos), &used);
    if (pos + used != text.size()) {
      throw std::invalid_argument("trailing characters in pauli text: " + text);
    }
    return PauliString(lo, std::move(letters), Phase(exponent));
  }

  std::string str() const {
    std::string out = phase_.str();
    if (letters_.empty()) {
      out += "I@0";
      return out;
    }
    for (Pauli p : letters_) out += pauli_char(p);
    out += "@" + std::to_string(lo_);
    return out;
  }

  bool is_scalar() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty() && phase_ == Phase(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(letters_.size()) - 1; }
  int width() const { return static_cast<int>(letters_.size()); }
  Phase phase() const { return phase_; }
  const std::vector<Pauli>& letters() const { return letters_; }

  Pauli at(int site) const {
    if (letters_.empty() || site < lo_ || site > hi()) return Pauli::I;
    return letters_[static_cast<size_t>(site - lo_)];
  }

  int weight() const {
    int w = 0;
    for (Pauli p : letters_)
      if (p != Pauli::I) ++w;
    return w;
  }

  bool hermitian() const { return phase_.is_real(); }

  PauliString with_phase(Phase p) const {
    PauliString out = *this;
    out.phase_ = p;
    return out;
  }

  PauliString scaled(Phase p) const {
    PauliString out = *this;
    out.phase_ *= p;
    return out;
  }

  PauliString adjoint() const { return with_phase(phase_.conjugated()); }

  PauliString translated(int j) const {
    PauliString out = *this;
    if (!out.letters_.empty()) out.lo_ += j;
    return out;
  }

  PauliString operator*(const PauliString& o) const {
    if (letters_.empty()) return o.scaled(phase_);
    if (o.letters_.empty()) return scaled(o.phase_);
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(hi(), o.hi());
    std::vector<Pauli> letters(static_cast<size_t>(nhi - nlo + 1), Pauli::I);
    int exponent = 0;
    for (int s = nlo; s <= nhi; ++s) {
      Pauli a = at(s);
      Pauli b = o.at(s);
      exponent += letter_phase_exponent(a, b);
      letters[static_cast<size_t>(s - nlo)] =
          static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
    }
    return PauliString(nlo, std::move(letters), phase_ * o.phase_ * Phase(exponent));
  }

  bool commutes_with(const PauliString& o) const {
    int anti = 0;
    int a = std::max(lo_, o.lo_);
    int b = std::min(hi(), o.hi());
    for (int s = a; s <= b; ++s)
      if (!letters_commute(at(s), o.at(s))) ++anti;
    return (anti % 2) == 0;
  }

  bool operator==(const PauliString& o) const {
    return lo_ == o.lo_ && phase_ == o.phase_ && letters_ == o.letters_;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

  /// Same letters at the same sites, ignoring the phase.
  bool same_letters(const PauliString& o) const {
    return lo_ == o.lo_ && letters_ == o.letters_;
  }

  bool operator<(const PauliString& o) const { return str() < o.str(); }

 private:
  void canonicalize() {
    size_t begin = 0, end = letters_.size();
    while (begin < end && letters_[begin] == Pauli::I) ++begin;
    while (end > begin && letters_[end - 1] == Pauli::I) --end;
    if (begin == end) {
      letters_.clear();
      lo_ = 0;
      return;
    }
    if (begin > 0 || end < letters_.size()) {
      letters_ = std::vector<Pauli>(letters_.begin() + static_cast<long>(begin),
                                    letters_.begin() + static_cast<long>(end));
      lo_ += static_cast<int>(begin);
    }
  }

  int lo_ = 0;
  std::vector<Pauli> letters_;
  Phase phase_;
};

inline PauliString translate(const PauliString& p, int j) { return p.translated(j); }

inline bool commutes(const PauliString& a, const PauliString& b) { return a.commutes_with(b); }

}  // namespace cliffchain
