#pragma once

#include <string>
#include <vector>

#include "bqmass/arith.hpp"
#include "bqmass/forms.hpp"

namespace bqm {

// Partial local genus symbol shapes at 2 for binary forms.
enum class Shape2 {
  None,        // odd p
  TypeII,      // (2-bar): even unimodular, nu = 0
  I2,          // (2): odd unimodular, nu = 2
  OneOne,      // (1,1): scales 0,1, nu = 3
  OneSemiOne,  // (1;1): scales 0,2, nu = 4
  OneFarOne,   // (1::1): scales 0,k with k >= 3, nu >= 5
};

std::string shape_name(Shape2 s);
Shape2 shape_for_nu(int nu);

struct JordanBlock {
  int scale = 0;
  int dim = 1;
  int unit = 1;  // +1 / -1 Legendre class of the block determinant unit
  bool operator==(const JordanBlock& o) const = default;
};

struct LocalGenusSymbol {
  Int p = 2;
  int nu = 0;        // ord_p(det_H)
  int det_unit = 1;  // odd p: +-1; p = 2: residue mod 8
  std::vector<JordanBlock> blocks;  // odd p
  Shape2 shape = Shape2::None;      // p = 2
  unsigned odd_residues = 0;        // p = 2: bit r set iff f takes an odd value = r mod 8
  int hasse = 1;

  bool operator==(const LocalGenusSymbol& o) const;
  std::string to_string() const;
};

LocalGenusSymbol jordan_split_odd(const QuadForm& f, Int p);
LocalGenusSymbol genus_symbol_2(const QuadForm& f);
LocalGenusSymbol local_symbol(const QuadForm& f, Int p);

bool same_genus(const QuadForm& f, const QuadForm& g);

struct LocalGenus {
  LocalGenusSymbol symbol;
  QuadForm representative;
};

// Representatives are 64-bit forms, so p^nu is capped at 2^50.
inline constexpr Int kMaxLocalScale = Int{1} << 50;

// All local genera of primitive binary p-integral forms with det_H in Sp,
// ordered by Hasse invariant (+1 first) then by symbol.
// Throws std::out_of_range when p^nu exceeds kMaxLocalScale.
std::vector<LocalGenus> enumerate_local_genera(Int p, const LocalSquareClass& Sp);

// Genus partition of the primitive proper classes with det_H = S.
struct GenusPart {
  std::vector<LocalGenusSymbol> symbols;  // one per prime of {2} u supp(S)
  std::vector<size_t> members;            // indices into the class list
};
std::vector<GenusPart> partition_genera(Int S, const std::vector<QuadForm>& primitive_classes);

}  // namespace bqm
