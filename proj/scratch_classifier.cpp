#include <cassert>
#include <iostream>

#include "cliffchain/classifier.hpp"

using namespace cliffchain;

int main() {
  // Representatives land in their stated classes.
  auto cls = [](const CliffordTableau& u) { return classify_staircase(u).tag; };
  auto cluster = CliffordTableau::from_text(2, {"+XZ@1", "+ZX@1"}, {"+Z@1", "+Z@2"});
  auto kw = CliffordTableau::from_text(2, {"+X@1", "+Z@2"}, {"+ZZ@1", "+XX@1"});
  auto nl2 = CliffordTableau::from_text(2, {"-ZX@1", "+XZ@1"}, {"+ZY@1", "+YZ@1"});
  auto nl3 = CliffordTableau::from_text(2, {"+XZ@1", "+ZX@1"}, {"+XY@1", "+YX@1"});
  auto nl4 = CliffordTableau::from_text(2, {"-YX@1", "+XY@1"}, {"+YZ@1", "+ZY@1"});
  auto swap2 = CliffordTableau::from_text(2, {"+IX@1", "+X@1"}, {"+IZ@1", "+Z@1"});
  assert(cls(CliffordTableau::identity(2)) == TIClassTag::L1);
  assert(cls(swap2) == TIClassTag::L2);
  assert(cls(cluster) == TIClassTag::L3);
  assert(cls(kw) == TIClassTag::NL1);
  assert(cls(nl2) == TIClassTag::NL2);
  assert(cls(nl3) == TIClassTag::NL3);
  assert(cls(nl4) == TIClassTag::NL4);
  auto c4 = classify_staircase(nl4);
  std::cout << "NL4 params: T=" << c4.params.at("T") << " Xosc=" << c4.params.at("Xosc") << "\n";
  assert(c4.params.at("T") == "Y");

  // Census.
  auto census = census_c2();
  std::cout << "census total " << census.total << "\n";
  for (auto& [name, count] : census.counts) std::cout << "  " << name << ": " << count << "\n";
  assert(census.total == 11520);
  long sum = 0;
  for (auto& [name, count] : census.counts) sum += count;
  assert(sum == 11520);
  assert(census.counts.size() == 7);

  // Enumeration.
  auto pairs = enumerate_5site();
  std::cout << "5-site survivors: " << pairs.size() << "\n";
  std::map<std::string, int> fam_counts;
  for (const auto& p : pairs) {
    auto fams = matching_families(p);
    if (fams.size() != 1) {
      std::cout << "BAD pair " << p.str() << " matches " << fams.size() << " families\n";
      return 1;
    }
    ++fam_counts[tag_name(fams[0].tag)];
  }
  for (auto& [name, count] : fam_counts) std::cout << "  " << name << ": " << count << "\n";

  // Realization round-trip on every survivor.
  int done = 0;
  for (const auto& p : pairs) {
    auto real = realize_staircase(p);
    ++done;
  }
  std::cout << "realized all " << done << " pairs\n";

  // Witnesses.
  auto u1 = CliffordTableau::from_text(2, {"+XZ@1", "+ZY@1"}, {"+Z@1", "+Z@2"});
  auto w1 = circuit_depth_witness(u1);
  std::cout << "U1 witness depth " << w1.depth() << "\n";
  assert(w1.depth() <= 4);
  assert(conjugate_bulk(w1, PauliString::single(0, Pauli::X)) == PauliString::parse("+ZYZ@-1"));
  assert(conjugate_bulk(w1, PauliString::single(0, Pauli::Z)) == PauliString::parse("+Z@0"));

  auto u2 = CliffordTableau::from_text(3, {"+YZZ@1", "+ZY@1", "+ZIY@1"}, {"+Z@1", "+Z@2", "+Z@3"});
  auto w2 = circuit_depth_witness(u2);
  std::cout << "U2 witness depth " << w2.depth() << "\n";
  assert(w2.depth() == 3);
  assert(conjugate_bulk(w2, PauliString::single(0, Pauli::X)) == PauliString::parse("-ZZYZZ@-2"));

  auto u3 = CliffordTableau::from_text(3, {"+XZZ@1", "+ZXZ@1", "+ZZX@1"}, {"+Z@1", "+Z@2", "+Z@3"});
  auto w3 = circuit_depth_witness(u3);
  std::cout << "U3 witness depth " << w3.depth() << "\n";
  assert(w3.depth() == 3);

  auto u4 = CliffordTableau::from_text(3, {"+XXX@1", "+ZYX@1", "+ZXY@1"}, {"+Z@1", "+X@2", "+IIX@1"});
  auto w4 = circuit_depth_witness(u4);
  std::cout << "U4 witness depth " << w4.depth() << "\n";
  assert(w4.depth() <= 8);
  assert(conjugate_bulk(w4, PauliString::single(0, Pauli::X)) == PauliString::parse("-ZYYYZ@-2"));
  assert(conjugate_bulk(w4, PauliString::single(0, Pauli::Z)) == PauliString::parse("-ZXZ@-1"));

  // U* commutation and witness.
  auto ustar = CliffordTableau::from_text(2, {"+XY@1", "+YX@1"}, {"+ZY@1", "+YZ@1"});
  assert(ustar.valid());
  std::cout << "U* factors commute: " << staircase_factors_commute(ustar) << "\n";
  assert(staircase_factors_commute(ustar));

  // Inverse round-trip for U1 and U4*U2 composition.
  auto t1 = ChainTransform::staircase(u1, "U1");
  auto inv1 = inverse_transform(t1);
  for (Pauli seed : {Pauli::X, Pauli::Y, Pauli::Z}) {
    auto img = image_of_string(ChainTransform::composed(inv1, t1), PauliString::single(0, seed));
    assert(img.local && img.op == PauliString::single(0, seed));
  }
  auto t42 = ChainTransform::composed(ChainTransform::staircase(u4, "U4"),
                                      ChainTransform::staircase(u2, "U2"));
  auto inv42 = inverse_transform(t42);
  for (Pauli seed : {Pauli::X, Pauli::Y, Pauli::Z}) {
    auto img = image_of_string(ChainTransform::composed(inv42, t42), PauliString::single(0, seed));
    assert(img.local && img.op == PauliString::single(0, seed));
  }
  std::cout << "inverse round-trips OK\n";

  std::cout << "classifier smoke OK\n";
  return 0;
}
