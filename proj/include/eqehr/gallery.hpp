#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqehr/equivariant.hpp"

namespace eqehr {

using Partition = std::vector<unsigned>;  // weakly decreasing, positive parts

struct GalleryInstance {
  std::string name;
  RationalPolytope polytope;
  GroupPtr group;
  std::optional<CharacterTable> table;  // partition-labelled for symmetric groups
  std::optional<IntPolynomial> expected_hstar;
};

GalleryInstance hexagon_Z6();
// Unit square with B_2 generated by a quarter turn and x -> 1 - x.
GalleryInstance square_B2();
// Unit square with the fixed-point-free reflection x -> 1 - x.
GalleryInstance bad_square_Z2();
GalleryInstance bad_reflexive_Z2();

enum class CubeGroup { Symmetric, Hyperoctahedral };
GalleryInstance hypercube_instance(unsigned d, CubeGroup group);
// conv{e_1, ..., e_n} in the affine chart Z^(n-1) (last coordinate dropped), with Sym_n.
GalleryInstance standard_simplex_sym(unsigned n);
// Sym_(2n) on Z^(2n) / Z(1, ..., 1), basis the images of e_1 .. e_(2n-1).
GalleryInstance standard_reflexive_simplex(unsigned n);
// V(2k, d) with the central symmetry.
GalleryInstance cross_family(unsigned k, unsigned d);
// Pyramid over the instance's polytope with the lifted linear action.
GalleryInstance pyramid_instance(const GalleryInstance& base);

// Fixed polytope of (1 2 ... n) on the standard reflexive simplex of Sym_(2n).
RationalPolytope pip_family(unsigned n);
BigInt pip_count(unsigned n, long m);  // C(m + n, n) + C(m, n)

// A(r; t) prod (1 + t + ... + t^(mu_i - 1)), r the number of parts.
IntPolynomial hypercube_char_formula(const Partition& cycle_type);
// sum_i C(2i, i) t^i (1 + t)^(d - 2i), i = 0 .. k
IntPolynomial cross_family_hstar(unsigned k, unsigned d);

struct PascalPartialSums {
  BigInt recurrence;
  BigInt closed_form;
  BigInt from_definition;  // coefficient in sum_j C(d+1, j) 2^j t^j (1 - t)^(d - j)
};
// 0 <= i <= d / 2
PascalPartialSums pascal_partial_sums(unsigned d, unsigned i);

std::vector<Partition> partitions_of(unsigned n);
std::string partition_label(const Partition& p);
// Number of standard Young tableaux, by the hook length formula.
BigInt hook_length_dimension(const Partition& p);
// Murnaghan-Nakayama rule.
BigInt symmetric_character(const Partition& shape, const Partition& cycle_type);
// Cycle type of a permutation representation from its characteristic polynomial;
// `reduced` when one trivial summand has been removed (quotient or affine chart).
Partition cycle_type_of(const IntMatrix& linear, bool reduced);
// Dixon table of a symmetric group action, relabelled by partitions via Murnaghan-Nakayama.
CharacterTable symmetric_group_table(const GroupPtr& group, unsigned n, bool reduced);

struct MarkedTableau {
  Partition shape;
  std::vector<std::vector<unsigned>> entries;  // rows
  std::map<unsigned, unsigned> marking;        // j -> f(j)
  unsigned index() const;
};
std::vector<MarkedTableau> marked_tableaux(const Partition& shape);
IntPolynomial marked_tableaux_polynomial(const Partition& shape);

std::vector<std::string> gallery_names();
// Name with optional integer parameters, e.g. "hypercube" {3}; throws std::invalid_argument.
GalleryInstance gallery_instance(const std::string& name, const std::vector<unsigned>& params);

}  // namespace eqehr
