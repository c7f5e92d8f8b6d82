#pragma once

#include <string>
#include <vector>

#include "grnet/cones.hpp"
#include "grnet/laurent.hpp"
#include "grnet/seeds.hpp"

namespace grnet {

// "q", "0" for the vertex of [1,k], then the grid labels
LatticePtr w_lattice(int k, int n);
// "0" then the grid labels: the simples basis of the rectangles quiver
LatticePtr simples_lattice(int k, int n);

// superpotential in rectangle variables p_ij, with p_0 standing for every
// p_ij having i = 0 or j = 0
LaurentPoly w_rectangles(int k, int n);

// Composition factors listed from socle to top, as lattice labels.
struct Uniserial {
  std::vector<std::string> factors;
};
// sum over t of x^(sum of the top t factors), t = 0..length
LaurentPoly quotient_f_polynomial(const Uniserial& m, const LatticePtr& lat);

// boundary vertex (grid position, (0,0) for the [1,k] vertex) carrying P_s
std::pair<int, int> projective_position(int k, int n, int s);
// the module Ext^1(T, M) for the s-th term of W; empty for s = n-k and s = n
Uniserial ext_module(int k, int n, int s);

// sum over s of x^{[S at P_s]} F^quot(ext_module(s)), over simples_lattice
LaurentPoly w_x_rectangles(int k, int n);

struct WFormulaReport {
  bool ok = false;
  LaurentPoly transported;  // W_X pushed through the dual map, on q + grid
  LaurentPoly expected;     // w_rectangles with p_0 = 1
  std::vector<std::string> diffs;
};
// pushes W_X through ([T,J*], -beta^T) and compares with w_rectangles;
// ParameterError unless 2 <= k <= n-2
WFormulaReport verify_wformula(int k, int n);

// W for a rectangles-shaped seed: lattice "q" plus the seed's vertex names
LaurentPoly w_on_seed(const Seed& rect, int k, int n);

struct MutatedW {
  Seed seed;
  LaurentPoly w;  // lattice "q" plus the new seed's vertex names
};
// substitutes p_j = (prod over in-arrows + prod over out-arrows) / p'_j and
// clears the common denominator; labels are kept when the exchange pattern
// is present
MutatedW a_mutate_w(const Seed& s, const LaurentPoly& w, int j);

// covectors [S_i] + [V] over the projectives basis (the seed's vertex names)
Cone gvector_cone_ineqs(int k, int n);

}  // namespace grnet
