#include <cassert>
#include <iostream>

#include "cliffchain/classifier.hpp"
#include "cliffchain/hamiltonian.hpp"

using namespace cliffchain;

static void expect_same(const TIHamiltonian& got, const TIHamiltonian& want, const char* what) {
  if (!got.same_model(want)) {
    std::cout << "MISMATCH " << what << "\n  got:  " << got.str() << "\n  want: " << want.str() << "\n";
    std::cout << "  got canonical:\n";
    for (auto& t : got.canonical_terms()) std::cout << "    " << t.str() << "\n";
    std::cout << "  want canonical:\n";
    for (auto& t : want.canonical_terms()) std::cout << "    " << t.str() << "\n";
    std::exit(1);
  }
  std::cout << "OK " << what << "\n";
}

int main() {
  auto u1 = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"+XZ@1", "+ZY@1"}, {"+Z@1", "+Z@2"}), "U1");
  auto u2 = ChainTransform::staircase(
      CliffordTableau::from_text(3, {"+YZZ@1", "+ZY@1", "+ZIY@1"}, {"+Z@1", "+Z@2", "+Z@3"}), "U2");
  auto u3 = ChainTransform::staircase(
      CliffordTableau::from_text(3, {"+XZZ@1", "+ZXZ@1", "+ZZX@1"}, {"+Z@1", "+Z@2", "+Z@3"}), "U3");
  auto u4 = ChainTransform::staircase(
      CliffordTableau::from_text(3, {"+XXX@1", "+ZYX@1", "+ZXY@1"}, {"+Z@1", "+X@2", "+IIX@1"}), "U4");
  auto kw = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"+X@1", "+Z@2"}, {"+ZZ@1", "+XX@1"}), "KW");
  auto nl2 = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"-ZX@1", "+XZ@1"}, {"+ZY@1", "+YZ@1"}), "NL2");
  auto nl3 = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"+XZ@1", "+ZX@1"}, {"+XY@1", "+YX@1"}), "NL3");
  auto eq12 = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"+XZ@1", "+IZ@1"}, {"+Z@1", "+ZY@1"}), "UF");
  // on-site X->X, Y->Z, Z->-Y (rotation about X).
  auto sx = ChainTransform::staircase(CliffordTableau::from_text(1, {"+X@1"}, {"-Y@1"}), "SX");

  expect_same(transform(models::xxz(), u1), models::h1(), "U1(xxz) = H1");
  expect_same(transform(models::xxz(), u2), models::h2(), "U2(xxz) = H2");
  expect_same(transform(models::xxz(), u3), models::h3(), "U3(xxz) = H3");
  expect_same(transform(models::xxz(), u4), models::h4(), "U4(xxz) = H4");
  expect_same(transform(models::xxz(true), kw), models::hpp(), "KW(xxz - h Z) = H''");
  expect_same(transform(models::xxz(true), eq12), models::htp(), "UF(xxz - h Z) = H~'");
  auto u42 = ChainTransform::composed(u4, u2);
  expect_same(transform(models::xxz(), u42), models::h0(), "U4*U2(xxz) = H0");
  auto nl2sx = ChainTransform::composed(nl2, sx);
  expect_same(transform(models::hpp(false), nl2sx), models::hppp(), "NL2*SX(H''|h=0) = H'''");

  // NL2 / NL3 on XXZ must raise NonLocalTerm.
  for (const auto* t : {&nl2, &nl3}) {
    try {
      transform(models::xxz(), *t);
      std::cout << "expected NonLocalTermError\n";
      return 1;
    } catch (const NonLocalTermError& e) {
      std::cout << "OK NonLocalTermError: " << e.what() << "\n";
    }
  }

  // Free-fermion term maps under U4.
  auto img = [&](const char* p) { return order_parameter_image(u4, PauliString::parse(p)); };
  std::cout << "XZZX -> " << img("+XZZX@0").str() << "\n";
  assert(img("+XZZX@0") == PauliString::parse("+ZYXZZXYZ@-2"));
  std::cout << "XZX  -> " << img("+XZX@0").str() << "\n";
  assert(img("+XZX@0") == PauliString::parse("+ZYYXYYZ@-2"));
  std::cout << "YZY  -> " << img("+YZY@0").str() << "\n";
  assert(img("+YZY@0") == PauliString::parse("-ZXZXZXZ@-2"));
  std::cout << "YZZY -> " << img("+YZZY@0").str() << "\n";
  assert(img("+YZZY@0") == PauliString::parse("+ZXIIIIXZ@-2"));

  // Jordan-Wigner recognition.
  auto rep = jordan_wigner_recognize(models::hfree(1.0, 0.8, 0.35, 0.0, 0.6, 0.0, 0.2));
  assert(rep.free);
  assert(rep.t.at(0).num == 1.0 && rep.t.at(1).num == 0.8 && rep.t.at(2).num == 0.35);
  assert(rep.t.at(-1).num == 0.6 && rep.t.at(-3).num == 0.2);
  auto rep2 = jordan_wigner_recognize(models::xxz());
  assert(!rep2.free);
  std::cout << "xxz not free at term: " << rep2.first_bad << "\n";
  auto rep3 = jordan_wigner_recognize(TIHamiltonian("empty", {}));
  assert(rep3.free && rep3.t.empty());

  // Frustration graph of the Ising model: Z_n adjacent to the two XX bonds.
  auto g = frustration_graph(models::ising(), 0, 7);
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].term_index == 0 && g.vertices[v].n == 3) {
      assert(g.degree(v) == 2);
      for (size_t w = 0; w < g.vertices.size(); ++w) {
        if (g.edge(v, w)) {
          assert(g.vertices[w].term_index == 1 &&
                 (g.vertices[w].n == 2 || g.vertices[w].n == 3));
        }
      }
    }
  }
  std::cout << "OK ising frustration graph\n";

  // Graph invariance xxz vs h1 under the term correspondence.
  auto gx = frustration_graph(models::xxz(), 0, 9);
  auto g1 = frustration_graph(transform(models::xxz(), u1), 0, 9);
  assert(gx.isomorphic_by_correspondence(g1));
  std::cout << "OK graph invariance xxz ~ h1\n";

  // Symmetries of H0: commutes with prod X and prod Y.
  assert(symmetry_commutes(models::h0(), SymmetryString{Pauli::X}, 24));
  assert(symmetry_commutes(models::h0(), SymmetryString{Pauli::Y}, 24));
  std::cout << "OK H0 symmetries\n";

  // Order parameters of Appendix A: images of Y_0 and X_0 under U4*U2.
  auto oy = order_parameter_image(u42, PauliString::parse("+Y@0"));
  std::cout << "U0(Y) = " << oy.str() << "\n";
  assert(oy.same_letters(PauliString::parse("+ZXIYIXZ@-3")));
  auto ox = order_parameter_image(u42, PauliString::parse("+X@0"));
  std::cout << "U0(X) = " << ox.str() << "\n";
  assert(ox.same_letters(PauliString::parse("+ZXZZZXZ@-3")));

  // String order: the image of prod_{n=a..b} Y_n telescopes to a bulk Y
  // string with endpoint clusters confined near a and b.
  {
    int a = 5, b = 14;
    std::vector<Pauli> ys(static_cast<size_t>(b - a + 1), Pauli::Y);
    PauliString ystring(a, ys);
    auto imgs = order_parameter_image(u42, ystring);
    std::cout << "U0(Y-string) = " << imgs.str() << "\n";
    for (int s = a + 3; s <= b - 3; ++s) assert(imgs.at(s) == Pauli::Y);
    assert(imgs.lo() >= a - 3 && imgs.hi() <= b + 3);
    // endpoint clusters: non-Y letters only within 3 sites of each end
    for (int s = imgs.lo(); s <= imgs.hi(); ++s) {
      if (imgs.at(s) != Pauli::Y && imgs.at(s) != Pauli::I) {
        assert(s <= a + 2 || s >= b - 2);
      }
    }
  }

  // Transform round-trip via the inverse.
  auto h1back = transform(transform(models::xxz(), u1), inverse_transform(u1));
  expect_same(h1back, models::xxz(), "inv(U1)(U1(xxz)) = xxz");
  auto h0back = transform(transform(models::xxz(), u42), inverse_transform(u42));
  expect_same(h0back, models::xxz(), "inv(U4*U2)(U4*U2(xxz)) = xxz");

  // X.X under the (+,+) NL2 variant: tails cancel; the two oscillatory
  // factors (-1)^{floor(n/2)} combine to the constant sign -1.
  auto nl2pp = ChainTransform::staircase(
      CliffordTableau::from_text(2, {"+ZX@1", "+XZ@1"}, {"+ZY@1", "+YZ@1"}), "NL2PP");
  {
    auto fam = local_image_family(nl2pp, PauliString::parse("+XIX@0"));
    assert(fam.local && fam.sign_rule.constant());
    assert(fam.base == PauliString::parse("-XZX@-1"));
    auto rx = extract_sign_rule(nl2pp.steps[0], PauliString::single(0, Pauli::X),
                                bulk_image(nl2pp.steps[0], PauliString::single(0, Pauli::X)));
    std::cout << "NL2(+,+) single-X sign rule: " << rx.str() << "\n";
    assert(rx.period == 4);  // (-1)^{floor(n/2)} has period 4
  }

  // Sublattice input terms pass through the residue bookkeeping.
  {
    TIHamiltonian sub("sub", {{Coupling::number(1.0), PauliString::parse("+X@0"), 2, 0},
                              {Coupling::number(-1.0), PauliString::parse("+X@0"), 2, 1}});
    auto out = transform(sub, u1);
    auto ct = out.canonical_terms();
    assert(ct.size() == 2);
    for (auto& t : ct) assert(t.period == 2);
    std::cout << "OK sublattice bookkeeping\n";
  }

  std::cout << "hamiltonian smoke OK\n";
  return 0;
}
