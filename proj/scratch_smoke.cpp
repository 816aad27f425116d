#include <cassert>
#include <iostream>

#include "cliffchain/chain.hpp"
#include "cliffchain/pauli.hpp"
#include "cliffchain/tableau.hpp"

using namespace cliffchain;

int main() {
  // Z*X = iY on one site.
  auto zx = PauliString::parse("+Z@0") * PauliString::parse("+X@0");
  std::cout << "Z*X = " << zx.str() << "\n";
  assert(zx.str() == "+iY@0");

  // (X1X2)(Z1Z2) = -Y1Y2.
  auto q = PauliString::parse("+XX@1") * PauliString::parse("+ZZ@1");
  std::cout << "XX*ZZ = " << q.str() << "\n";
  assert(q.str() == "-YY@1");

  // Section 2.1 worked example: X1->X1X2, X2->Z1Z2, Z1->Z1, Z2->X2.
  auto u21 = CliffordTableau::from_text(2, {"+XX@1", "+ZZ@1"}, {"+Z@1", "+X@2"});
  assert(u21.valid());
  auto img = u21.conjugate(PauliString::parse("+XX@1"));
  std::cout << "U Q U+ = " << img.str() << "\n";
  assert(img.str() == "-YY@1");

  // Table I row U1: X1->X1Z2, X2->Z1Y2, Z1->Z1, Z2->Z2.
  auto u1 = CliffordTableau::from_text(2, {"+XZ@1", "+ZY@1"}, {"+Z@1", "+Z@2"});
  assert(u1.valid());
  auto ix = image_of_site_pauli(u1, Pauli::X);
  std::cout << "U1chain(X) = " << ix.str() << "\n";
  assert(ix.local && ix.op.str() == "+ZYZ@-1");
  auto iz = image_of_site_pauli(u1, Pauli::Z);
  assert(iz.local && iz.op.str() == "+Z@0");

  // Table I row U2 (k=3): X -> -Z_{n-2}Z_{n-1}Y_nZ_{n+1}Z_{n+2}.
  auto u2 = CliffordTableau::from_text(3, {"+YZZ@1", "+ZY@1", "+ZIY@1"},
                                       {"+Z@1", "+Z@2", "+Z@3"});
  assert(u2.valid());
  auto ix2 = image_of_site_pauli(u2, Pauli::X);
  std::cout << "U2chain(X) = " << ix2.str() << "\n";
  assert(ix2.local && ix2.op.str() == "-ZZYZZ@-2");

  // Table I row U4 (k=3).
  auto u4 = CliffordTableau::from_text(3, {"+XXX@1", "+ZYX@1", "+ZXY@1"},
                                       {"+Z@1", "+X@2", "+IIX@1"});
  assert(u4.valid());
  auto ix4 = image_of_site_pauli(u4, Pauli::X);
  auto iz4 = image_of_site_pauli(u4, Pauli::Z);
  std::cout << "U4chain(X) = " << ix4.str() << "\nU4chain(Z) = " << iz4.str() << "\n";
  assert(ix4.local && ix4.op.str() == "-ZYYYZ@-2");
  assert(iz4.local && iz4.op.str() == "-ZXZ@-1");

  // Kramers-Wannier: X1->X1, X2->Z2, Z1->Z1Z2, Z2->X1X2: X_n nonlocal tail Z.
  auto kw = CliffordTableau::from_text(2, {"+X@1", "+Z@2"}, {"+ZZ@1", "+XX@1"});
  assert(kw.valid());
  auto kx = image_of_site_pauli(kw, Pauli::X);
  std::cout << "KWchain(X) = " << kx.str() << "\n";
  assert(!kx.local && kx.period == 1 && kx.tail[0] == Pauli::Z);
  auto kz = image_of_site_pauli(kw, Pauli::Z);
  std::cout << "KWchain(Z) = " << kz.str() << "\n";
  assert(kz.local && kz.op.str() == "+XX@-1");

  // KW string cancellation: X0X1 -> Z0.
  auto kxx = image_of_string(ChainTransform::staircase(kw), PauliString::parse("+XX@0"));
  std::cout << "KWchain(X0X1) = " << kxx.str() << "\n";
  assert(kxx.local && kxx.op.str() == "+Z@0");
  auto kyy = image_of_string(ChainTransform::staircase(kw), PauliString::parse("+YY@0"));
  std::cout << "KWchain(Y0Y1) = " << kyy.str() << "\n";
  assert(kyy.local && kyy.op.str() == "-XZX@-1");
  auto kzz = image_of_string(ChainTransform::staircase(kw), PauliString::parse("+ZZ@0"));
  std::cout << "KWchain(Z0Z1) = " << kzz.str() << "\n";
  assert(kzz.local && kzz.op.str() == "+XIX@-1");

  // eq18 NL2 example: X1->-Z1X2, X2->X1Z2, Z1->Z1Y2, Z2->Y1Z2.
  auto nl2 = CliffordTableau::from_text(2, {"-ZX@1", "+XZ@1"}, {"+ZY@1", "+YZ@1"});
  assert(nl2.valid());
  auto nx = image_of_site_pauli(nl2, Pauli::X);
  std::cout << "NL2chain(X) = " << nx.str() << "\n";
  assert(!nx.local && nx.period == 2);
  auto ny = image_of_site_pauli(nl2, Pauli::Y);
  std::cout << "NL2chain(Y) = " << ny.str() << "\n";
  assert(ny.local && ny.op.str() == "-Z@-1");

  // Sign rule of eq18 images: constant (x(n) = z(n) = 0).
  auto rule = extract_sign_rule(nl2, PauliString::single(0, Pauli::X), nx);
  std::cout << "NL2 sign rule: " << rule.str() << "\n";
  assert(rule.constant() && rule.eval(0) == 1);

  // Finite-chain check at L=8 vs bulk rule for U1.
  auto fx = conjugate_finite(u1, PauliString::single(4, Pauli::X), 8);
  std::cout << "U1 finite X4 @L8 = " << fx.str() << "\n";
  assert(fx.str() == "+ZYZ@3");

  // Inverse round-trip on the section 2.1 tableau.
  auto inv = u21.inverse();
  assert(compose(u21, inv) == CliffordTableau::identity(2));
  assert(compose(inv, u21) == CliffordTableau::identity(2));

  // Enumeration counts.
  assert(clifford_group_order(1) == 24);
  assert(clifford_group_order(2) == 11520);
  int c1 = 0;
  enumerate_cliffords(1, [&](const CliffordTableau&) { ++c1; });
  std::cout << "|C_1| = " << c1 << "\n";
  assert(c1 == 24);
  int c2 = 0;
  enumerate_cliffords(2, [&](const CliffordTableau&) { ++c2; });
  std::cout << "|C_2| = " << c2 << "\n";
  assert(c2 == 11520);

  std::cout << "smoke OK\n";
  return 0;
}
