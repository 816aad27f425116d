#pragma once

// Translation invariant Hamiltonians as coupling lists H = sum_n sum_a
// J_a P^a(n), their transformation under chain transforms, frustration
// graphs, Jordan-Wigner recognition and symmetry checks.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffchain/chain.hpp"
#include "cliffchain/pauli.hpp"

namespace cliffchain {

/// Real coupling, kept exact as a linear form in the symbolic parameters:
/// J = num + delta * Delta + field * h.
struct Coupling {
  double num = 0.0;
  double delta = 0.0;
  double field = 0.0;

  static Coupling number(double v) { return {v, 0.0, 0.0}; }
  static Coupling Delta(double scale = 1.0) { return {0.0, scale, 0.0}; }
  static Coupling h(double scale = 1.0) { return {0.0, 0.0, scale}; }

  Coupling operator+(const Coupling& o) const { return {num + o.num, delta + o.delta, field + o.field}; }
  Coupling operator*(double s) const { return {num * s, delta * s, field * s}; }
  bool is_zero() const { return num == 0.0 && delta == 0.0 && field == 0.0; }
  bool operator==(const Coupling& o) const {
    return num == o.num && delta == o.delta && field == o.field;
  }
  double eval(double delta_value, double h_value) const {
    return num + delta * delta_value + field * h_value;
  }

  std::string str() const {
    std::ostringstream out;
    bool first = true;
    auto piece = [&](double v, const char* sym) {
      if (v == 0.0) return;
      if (!first && v > 0) out << "+";
      if (sym[0] == '\0') {
        out << v;
      } else if (v == 1.0) {
        out << sym;
      } else if (v == -1.0) {
        out << "-" << sym;
      } else {
        out << v << "*" << sym;
      }
      first = false;
    };
    piece(num, "");
    piece(delta, "Delta");
    piece(field, "h");
    if (first) out << "0";
    return out.str();
  }
};

/// One translation invariant term: J * sum_{n == residue (mod period)} P(n).
/// P is stored with phase +1 (signs live in J); period 1 is the fully
/// translation invariant case.
struct Term {
  Coupling coupling;
  PauliString op;
  int period = 1;
  int residue = 0;

  Term() = default;
  Term(Coupling j, PauliString p, int per = 1, int res = 0)
      : coupling(j), op(std::move(p)), period(per), residue(res) {
    if (!op.hermitian()) throw std::invalid_argument("Term: operator must be Hermitian: " + op.str());
    if (op.phase().sign() < 0) {
      coupling = coupling * -1.0;
      op = op.with_phase(phase_one());
    }
  }

  std::string str() const {
    std::string s = "(" + coupling.str() + ") " + op.str();
    if (period != 1) s += " [n=" + std::to_string(residue) + " mod " + std::to_string(period) + "]";
    return s;
  }
};

struct NonLocalTermError : std::runtime_error {
  explicit NonLocalTermError(const std::string& term, const std::string& detail)
      : std::runtime_error("term " + term + " has a non-local image: " + detail), term_text(term) {}
  std::string term_text;
};

class TIHamiltonian {
 public:
  TIHamiltonian() = default;
  TIHamiltonian(std::string name, std::vector<Term> terms)
      : name_(std::move(name)), terms_(std::move(terms)) {
    merge();
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<Term>& terms() const { return terms_; }

  void add(Term t) {
    terms_.push_back(std::move(t));
    merge();
  }

  int max_width() const {
    int w = 0;
    for (const auto& t : terms_) w = std::max(w, t.op.width());
    return w;
  }

  /// Translation-normalized term list: ops anchored at 0, residues shifted
  /// accordingly, sorted, couplings merged exactly. Two TIHamiltonians are
  /// the same iff their canonical term lists agree.
  std::vector<Term> canonical_terms() const {
    std::map<std::string, Term> merged;
    for (const auto& t : terms_) {
      if (t.coupling.is_zero() || t.op.is_scalar()) continue;
      int shift = -t.op.lo();
      Term c(t.coupling, t.op.translated(shift), t.period,
             t.period == 1 ? 0 : (((t.residue - shift) % t.period) + t.period) % t.period);
      std::string key = c.op.str() + "|" + std::to_string(c.period) + "|" + std::to_string(c.residue);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, c);
      } else {
        it->second.coupling = it->second.coupling + c.coupling;
      }
    }
    // Collapse residue splits whose couplings agree across a full period.
    std::map<std::string, std::vector<Term>> by_op;
    for (auto& [key, t] : merged) {
      if (t.coupling.is_zero()) continue;
      by_op[t.op.str()].push_back(t);
    }
    std::vector<Term> out;
    for (auto& [op, group] : by_op) {
      bool collapsed = false;
      if (group.size() > 1) {
        int p = group.front().period;
        bool same = group.size() == static_cast<size_t>(p) && p > 1;
        for (const auto& t : group) {
          if (t.period != p || !(t.coupling == group.front().coupling)) same = false;
        }
        if (same) {
          out.emplace_back(group.front().coupling, group.front().op, 1, 0);
          collapsed = true;
        }
      }
      if (!collapsed) {
        for (auto& t : group) out.push_back(t);
      }
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
      return a.str() < b.str();
    });
    return out;
  }

  bool same_model(const TIHamiltonian& o) const {
    auto a = canonical_terms();
    auto b = o.canonical_terms();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      if (!(a[i].op == b[i].op) || !(a[i].coupling == b[i].coupling) ||
          a[i].period != b[i].period || a[i].residue != b[i].residue) {
        return false;
      }
    }
    return true;
  }

  std::string str() const {
    std::string out = name_.empty() ? "H" : name_;
    out += " = sum_n [";
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) out += " + ";
      out += t.str();
      first = false;
    }
    out += "]";
    return out;
  }

 private:
  void merge() {
    // keep insertion order; exact duplicates merged lazily via canonical_terms
  }

  std::string name_;
  std::vector<Term> terms_;
};

/// Conjugate every term by the chain transform. Oscillatory image signs
/// split a term into its residue classes; a non-local image throws
/// NonLocalTermError naming the offending term.
inline TIHamiltonian transform(const TIHamiltonian& H, const ChainTransform& T) {
  std::vector<Term> out;
  for (const auto& term : H.terms()) {
    LocalFamily fam = local_image_family(T, term.op);
    if (!fam.local) throw NonLocalTermError(term.op.str(), fam.nonlocal_reason);
    double base_sign = fam.base.phase().sign();
    PauliString bare = fam.base.with_phase(phase_one());
    const SignRule& rule = fam.sign_rule;
    int p_out = std::lcm(term.period, rule.period);
    if (p_out == 1) {
      out.emplace_back(term.coupling * (base_sign * rule.eval(0)), bare, 1, 0);
    } else {
      int r_in = ((term.residue % term.period) + term.period) % term.period;
      for (int r = 0; r < p_out; ++r) {
        if (r % term.period != r_in) continue;
        out.emplace_back(term.coupling * (base_sign * rule.eval(r)), bare, p_out, r);
      }
    }
  }
  std::string name = H.name();
  if (!T.name.empty()) name = T.name + "(" + name + ")";
  return TIHamiltonian(name, std::move(out));
}

// ---------------------------------------------------------------------------
// Frustration graph
// ---------------------------------------------------------------------------

/// Anticommutation graph of the term instances P^a(n) for n in [n_lo, n_hi].
struct FrustrationGraph {
  struct Vertex {
    int term_index;
    int n;
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<bool>> adjacency;

  int degree(size_t v) const {
    int d = 0;
    for (bool b : adjacency[v])
      if (b) ++d;
    return d;
  }

  bool edge(size_t a, size_t b) const { return adjacency[a][b]; }

  /// Same adjacency under the vertex correspondence (term_index, n).
  bool isomorphic_by_correspondence(const FrustrationGraph& o) const {
    if (vertices.size() != o.vertices.size()) return false;
    for (size_t a = 0; a < vertices.size(); ++a) {
      if (vertices[a].term_index != o.vertices[a].term_index || vertices[a].n != o.vertices[a].n) return false;
      for (size_t b = 0; b < vertices.size(); ++b) {
        if (adjacency[a][b] != o.adjacency[a][b]) return false;
      }
    }
    return true;
  }
};

inline FrustrationGraph frustration_graph(const TIHamiltonian& H, int n_lo, int n_hi) {
  if (n_hi - n_lo + 1 < 2 * H.max_width()) {
    throw std::invalid_argument("frustration_graph: window must cover twice the widest term");
  }
  FrustrationGraph g;
  std::vector<PauliString> ops;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (size_t a = 0; a < H.terms().size(); ++a) {
      const Term& t = H.terms()[static_cast<size_t>(a)];
      if (t.period != 1 && (((n - t.residue) % t.period) + t.period) % t.period != 0) continue;
      g.vertices.push_back({static_cast<int>(a), n});
      ops.push_back(t.op.translated(n));
    }
  }
  g.adjacency.assign(g.vertices.size(), std::vector<bool>(g.vertices.size(), false));
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t j = i + 1; j < ops.size(); ++j) {
      if (!ops[i].commutes_with(ops[j])) {
        g.adjacency[i][j] = g.adjacency[j][i] = true;
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Jordan-Wigner recognition
// ---------------------------------------------------------------------------

/// Quadratic couplings i/2 sum t_alpha gamma~_n gamma_{n+alpha}: recognized
/// term shapes are Z_n (alpha = 0), X Z..Z X over alpha+1 sites (alpha > 0)
/// and Y Z..Z Y (alpha < 0); anything else makes the model not free.
struct JordanWignerReport {
  bool free = true;
  std::map<int, Coupling> t;
  std::string first_bad;  // offending term when not free
};

inline JordanWignerReport jordan_wigner_recognize(const TIHamiltonian& H) {
  JordanWignerReport report;
  for (const auto& term : H.canonical_terms()) {
    if (term.period != 1) {
      report.free = false;
      report.first_bad = term.str();
      return report;
    }
    const PauliString& p = term.op;
    int w = p.width();
    if (w == 1 && p.at(0) == Pauli::Z) {
      report.t[0] = (report.t.count(0) ? report.t[0] : Coupling{}) + term.coupling * 2.0;
      continue;
    }
    bool ends_x = w >= 2 && p.at(p.lo()) == Pauli::X && p.at(p.hi()) == Pauli::X;
    bool ends_y = w >= 2 && p.at(p.lo()) == Pauli::Y && p.at(p.hi()) == Pauli::Y;
    bool interior_z = true;
    for (int s = p.lo() + 1; s < p.hi(); ++s) interior_z = interior_z && p.at(s) == Pauli::Z;
    if ((ends_x || ends_y) && interior_z) {
      int alpha = ends_x ? (w - 1) : -(w - 1);
      report.t[alpha] = (report.t.count(alpha) ? report.t[alpha] : Coupling{}) + term.coupling * -2.0;
      continue;
    }
    report.free = false;
    report.first_bad = term.str();
    return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Symmetry strings and order parameters
// ---------------------------------------------------------------------------

/// Product symmetry string: the letter placed on every site n == residue
/// (mod period) of the chain 1..L.
struct SymmetryString {
  Pauli letter = Pauli::X;
  int period = 1;
  int residue = 0;

  PauliString build(int L) const {
    std::vector<Pauli> letters(static_cast<size_t>(L), Pauli::I);
    for (int n = 1; n <= L; ++n) {
      int r = ((n - residue) % period + period) % period;
      if (r == 0) letters[static_cast<size_t>(n - 1)] = letter;
    }
    return PauliString(1, letters);
  }
};

/// True iff every fully supported term instance commutes with the symmetry
/// string on the chain 1..L (exact, symbolic).
inline bool symmetry_commutes(const TIHamiltonian& H, const SymmetryString& sym, int L) {
  if (L < 2 * H.max_width()) {
    throw std::invalid_argument("symmetry_commutes: L must cover twice the widest term");
  }
  PauliString s = sym.build(L);
  for (const auto& term : H.terms()) {
    for (int n = 1 - term.op.lo(); n + term.op.hi() <= L; ++n) {
      if (term.period != 1 && (((n - term.residue) % term.period) + term.period) % term.period != 0) continue;
      if (!term.op.translated(n).commutes_with(s)) return false;
    }
  }
  return true;
}

/// Image of a local seed operator under a locality-preserving transform;
/// used for the order-parameter operator identities.
inline PauliString order_parameter_image(const ChainTransform& T, const PauliString& seed) {
  ChainImage img = image_of_string(T, seed);
  if (!img.local) throw NonLocalTermError(seed.str(), img.str());
  return img.op;
}

// ---------------------------------------------------------------------------
// Built-in models
// ---------------------------------------------------------------------------

namespace models {

inline PauliString P(const char* text) { return PauliString::parse(text); }

/// H_XXZ = -sum(XX + YY + Delta ZZ) [- h sum Z when with_field].
inline TIHamiltonian xxz(bool with_field = false) {
  std::vector<Term> t{{Coupling::number(-1), P("+XX@0")},
                      {Coupling::number(-1), P("+YY@0")},
                      {Coupling::Delta(-1), P("+ZZ@0")}};
  if (with_field) t.emplace_back(Coupling::h(-1), P("+Z@0"));
  return TIHamiltonian("xxz", std::move(t));
}

/// H_XYZ with J1 = J2 = 1, J3 = Delta (J1 couples YY, J2 couples XX).
inline TIHamiltonian xyz() {
  return TIHamiltonian("xyz", {{Coupling::number(-1), P("+YY@0")},
                               {Coupling::number(-1), P("+XX@0")},
                               {Coupling::Delta(-1), P("+ZZ@0")}});
}

/// H_Ising = 1/2 sum(h Z - XX).
inline TIHamiltonian ising() {
  return TIHamiltonian("ising", {{Coupling::h(0.5), P("+Z@0")},
                                 {Coupling::number(-0.5), P("+XX@0")}});
}

/// H0: the eight-, six- and four-site chain (couplings 1, 1, Delta).
inline TIHamiltonian h0() {
  return TIHamiltonian("h0", {{Coupling::number(-1), P("+ZYXYYXYZ@-3")},
                              {Coupling::number(-1), P("+ZYYIIYYZ@-3")},
                              {Coupling::Delta(-1), P("+ZYYZ@-1")}});
}

inline TIHamiltonian h1() {
  return TIHamiltonian("h1", {{Coupling::number(-1), P("+ZXXZ@-1")},
                              {Coupling::number(-1), P("+ZYYZ@-1")},
                              {Coupling::Delta(-1), P("+ZZ@0")}});
}

inline TIHamiltonian h2() {
  return TIHamiltonian("h2", {{Coupling::number(-1), P("+ZIXXIZ@-2")},
                              {Coupling::number(-1), P("+ZIYYIZ@-2")},
                              {Coupling::Delta(-1), P("+ZZ@0")}});
}

inline TIHamiltonian h3() {
  return TIHamiltonian("h3", {{Coupling::number(-1), P("+ZZXXZZ@-2")},
                              {Coupling::number(-1), P("+ZZYYZZ@-2")},
                              {Coupling::Delta(-1), P("+ZZ@0")}});
}

inline TIHamiltonian h4() {
  return TIHamiltonian("h4", {{Coupling::number(-1), P("+ZXIIXZ@-2")},
                              {Coupling::number(-1), P("+ZYYYYZ@-2")},
                              {Coupling::Delta(-1), P("+ZYYZ@-1")}});
}

/// H' (= H1 with J3 = Delta written as the generalised cluster family).
inline TIHamiltonian hp() { auto m = h1(); m.set_name("hp"); return m; }

/// H'' = -sum(Z + Delta X.X - XZX + h XX).
inline TIHamiltonian hpp(bool with_field = true) {
  std::vector<Term> t{{Coupling::number(-1), P("+Z@0")},
                      {Coupling::Delta(-1), P("+XIX@0")},
                      {Coupling::number(1), P("+XZX@-1")}};
  if (with_field) t.emplace_back(Coupling::h(-1), P("+XX@0"));
  return TIHamiltonian("hpp", std::move(t));
}

/// H''' = -sum(Z - X.X + Delta XZX).
inline TIHamiltonian hppp() {
  return TIHamiltonian("hppp", {{Coupling::number(-1), P("+Z@0")},
                                {Coupling::number(1), P("+XIX@0")},
                                {Coupling::Delta(-1), P("+XZX@-1")}});
}

/// H~' = -sum(Delta ZXXZ + ZYYZ + ZZ + h ZYZ).
inline TIHamiltonian htp(bool with_field = true) {
  std::vector<Term> t{{Coupling::Delta(-1), P("+ZXXZ@-1")},
                      {Coupling::number(-1), P("+ZYYZ@-1")},
                      {Coupling::number(-1), P("+ZZ@0")}};
  if (with_field) t.emplace_back(Coupling::h(-1), P("+ZYZ@-1"));
  return TIHamiltonian("htp", std::move(t));
}

/// Generalised cluster model H_free = 1/2 sum(t0 Z - t1 XX - t2 XZX
/// - t3 XZZX - t-1 YY - t-2 YZY - t-3 YZZY).
inline TIHamiltonian hfree(double t0 = 1.0, double t1 = 0.8, double t2 = 0.35, double t3 = 0.0,
                           double tm1 = 0.6, double tm2 = 0.0, double tm3 = 0.2) {
  std::vector<Term> t;
  auto add = [&](double v, const char* op) {
    if (v != 0.0) t.emplace_back(Coupling::number(v * 0.5), P(op));
  };
  add(t0, "+Z@0");
  add(-t1, "+XX@0");
  add(-t2, "+XZX@0");
  add(-t3, "+XZZX@0");
  add(-tm1, "+YY@0");
  add(-tm2, "+YZY@0");
  add(-tm3, "+YZZY@0");
  return TIHamiltonian("hfree", std::move(t));
}

/// H_Cluster-Ising = -sum(ZZ + ZXZ).
inline TIHamiltonian cluster_ising() {
  return TIHamiltonian("clusterising", {{Coupling::number(-1), P("+ZZ@0")},
                                        {Coupling::number(-1), P("+ZXZ@-1")}});
}

}  // namespace models

}  // namespace cliffchain
