#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hexarep/fault.hpp"
#include "hexarep/report.hpp"

namespace hexarep::espgroup {

// Element of an extra-special 2-group in normal form: lambda^e * prod_i g_i^{v_i}
// with the generators taken in increasing index order. Bit i of v is the
// exponent of generator i.
struct GroupElement {
  std::uint32_t v = 0;
  std::uint8_t e = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Presentation of a 2-group of order 2^{n+1} with central involution lambda:
//   g_i^2 = lambda^{s_i},   [g_i, g_j] = lambda^{gram[i][j]}.
// The gram table is symmetric with zero diagonal; when it is non-degenerate
// the group is extra-special of type 2^{1+n}_{+/-}.
class GroupDescriptor {
 public:
  GroupDescriptor(int n, std::uint32_t square_bits,
                  std::vector<std::uint32_t> gram_rows);

  int n() const { return n_; }
  std::uint64_t order() const { return std::uint64_t{2} << n_; }
  std::uint32_t square_bits() const { return square_bits_; }
  const std::vector<std::uint32_t>& gram() const { return gram_; }
  std::uint32_t gram_row(int i) const { return gram_[static_cast<size_t>(i)]; }

  GroupElement identity() const { return {0, 0}; }
  GroupElement lambda() const { return {0, 1}; }
  GroupElement generator(int i) const;

  // f(u,v): the symplectic pairing on G/Z read off the gram table.
  std::uint8_t sym(std::uint32_t u, std::uint32_t v) const;
  // q(v): the center bit of (0,v)^2; quadratic refinement of f.
  std::uint8_t quad(std::uint32_t v) const;
  // Normal-form cocycle: sign picked up when merging two reduced words.
  std::uint8_t cocycle(std::uint32_t u, std::uint32_t v) const;

  void require_element(const GroupElement& g) const;

 private:
  int n_;
  std::uint32_t square_bits_;
  std::vector<std::uint32_t> gram_;
};

GroupElement mul(const GroupDescriptor& d, const GroupElement& a,
                 const GroupElement& b);
GroupElement inverse(const GroupDescriptor& d, const GroupElement& g);
GroupElement square(const GroupDescriptor& d, const GroupElement& g);
GroupElement commutator(const GroupDescriptor& d, const GroupElement& a,
                        const GroupElement& b);
int element_order(const GroupDescriptor& d, const GroupElement& g);
bool is_involution(const GroupDescriptor& d, const GroupElement& g);

GroupDescriptor d8();
GroupDescriptor q8();
// Central product with amalgamated centers: block-diagonal gram, concatenated
// square bits. Generators of b are re-indexed after those of a.
GroupDescriptor central_product(const GroupDescriptor& a,
                                const GroupDescriptor& b);

// '+' when the quadratic form q has Arf invariant 0 (central product of
// dihedral factors), '-' otherwise. Faults if the gram table is degenerate.
char group_sign(const GroupDescriptor& d);

struct GeneratedOrder {
  std::uint64_t order = 0;
  bool contains_lambda = false;
  // true when both the closure and the rank methods ran (and agreed)
  bool cross_checked = false;
};

// Order of the subgroup generated by `gens`, and whether it contains lambda.
// Uses rank + dependency signs always, and a brute-force closure as an
// independent route whenever the subgroup fits in 2^20 elements.
GeneratedOrder generated_order(const GroupDescriptor& d,
                               std::span<const GroupElement> gens);

// Axioms of the presentation: associativity (exhaustive for n <= 6, sampled
// otherwise), center = {1, lambda}, commutators and squares central, exponent 4.
VerificationReport verify_descriptor(const GroupDescriptor& d,
                                     std::uint64_t seed = 1,
                                     int sampled_triples = 10000);

}  // namespace hexarep::espgroup
