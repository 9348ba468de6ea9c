// A short tour: build a root system, enumerate the abelian ideals of its
// Borel subalgebra, inspect the encodings of one ideal, and compare the
// symmetry groups of the ideal poset with those of the Dynkin diagram.
#include <iostream>

#include "abid/abid.hpp"

int main() {
  using namespace abid;

  // D4 from its family and rank; build_root_system also accepts any
  // CartanDatum with a valid finite Cartan matrix
  const RootSystem rs = build_root_system(Family::D, 4);
  std::cout << "type " << type_name(rs.datum.family, rs.n()) << ", "
            << rs.count() << " positive roots, dual Coxeter number "
            << rs.h_dual << "\n";

  const AbelianIdeals ideals(rs);
  std::cout << ideals.size() << " abelian ideals\n\n";

  // every ideal carries its root set, canonical word, antichain of
  // minimal roots, weight, and eta-vector
  const IdealSet& sample = ideals.ideal(ideals.size() - 1);
  std::cout << "largest ideal: grade " << sample.grade << ", word "
            << word_str(sample.word) << "\n";
  std::cout << "  antichain:";
  for (int r : sample.antichain)
    std::cout << " " << coeff_str(rs.positive_roots[r].coeffs);
  std::cout << "\n  weight " << coeff_str(sample.weight_fw) << ", eta "
            << coeff_str(sample.eta) << "\n\n";

  // the inclusion order restricted to covers, with generator labels
  const LabeledHasse h = build_hasse(ideals);
  std::cout << "hasse diagram: " << h.edges.size() << " covers, labels";
  for (int l : h.pi_prime) std::cout << " " << l;
  std::cout << "\n";

  // grade-preserving poset symmetries realize the diagram symmetries
  // (S3 for D4), and the graph symmetries realize the extended ones (S4)
  std::cout << "poset symmetries " << poset_automorphisms(h).size()
            << ", diagram symmetries " << aut_pi(rs).size() << "\n";
  std::cout << "graph symmetries " << graph_automorphisms(h).size()
            << ", extended diagram symmetries " << aut_pihat(rs).size() << "\n\n";

  // the A-series ideals in their shape model, with the order-n symmetry
  const CaseData a4(Family::A, 3);
  std::cout << "A3 shapes under sigma:\n";
  for (const Partition& lam : staircase_partitions(4))
    std::cout << "  " << partition_str(lam) << " -> " << partition_str(sigma(lam, 4))
              << "\n";
  return 0;
}
