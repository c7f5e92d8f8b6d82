#pragma once

#include <string>
#include <vector>

#include "grnet/combinat.hpp"
#include "grnet/laurent.hpp"
#include "grnet/quiver.hpp"
#include "grnet/seeds.hpp"

namespace grnet {

// {x : <m, x> >= 0 for every covector m}. The first ambient coordinate is
// the level r.
struct Cone {
  LatticePtr ambient;
  std::vector<Exponent> ineqs;

  // divide by gcd, drop zero rows, sort and deduplicate
  Cone& canonicalize();
  Cone canonical() const;
  bool contains(const Exponent& x) const;
  // x given on the ambient minus the level slot
  bool contains(long long r, const Exponent& v) const;
  // coordinates matched by label; labels missing from v read as 0
  bool contains(long long r, const LatticeVector& v) const;
  std::vector<std::string> coordinate_labels() const;  // ambient minus "r"
};

// same set of canonical covectors; ambients must agree label for label
bool cone_equal(const Cone& a, const Cone& b);
// reorder/rename coordinates by label, each of c's labels mapped through
// `rename` (identity when absent from the map) to a label of target
Cone cone_on(const Cone& c, const LatticePtr& target,
             const std::vector<std::pair<std::string, std::string>>& rename = {});
// {y : m(y) in c}; m's codomain must be c's ambient
Cone pull_cone(const Cone& c, const LatticeMap& m);

// "ij", or "i_j" once k or n-k reaches 10
std::string grid_label(int k, int n, int i, int j);
std::vector<std::string> grid_labels(int k, int n);  // row-major
LatticePtr gt_ambient(int k, int n);                   // "r" then the grid

Cone gt_inequalities(int k, int n);

// one covector per monomial: the q exponent in the level slot, the star
// exponent dropped, every other exponent kept under its label
Cone cone_from_tropical(const LaurentPoly& w, const std::string& q_label, const std::string& star_label);

// every integral x with x_r = r and x in c, sorted; Unbounded when the
// slice is not bounded
std::vector<Exponent> lattice_points(const Cone& c, long long r);

Int weyl_dim(int k, int n, long long r);

// level-1 pattern of I on the grid: v_ij = max_diag(K_ij, I)
Exponent gt_pattern(int k, int n, const KSubset& i);
// subsets whose patterns sum to v, peeled greedily in all_subsets order;
// ParameterError when (r, v) is outside the GT cone
std::vector<KSubset> gt_decompose(int k, int n, long long r, const Exponent& v);

// kappa vectors of every k-subset, on the lattice without the star
std::vector<LatticeVector> no_body_level1(const Seed& s);
// indices of points outside the cone at level r (empty when all inside)
std::vector<size_t> body_membership_check(const std::vector<LatticeVector>& pts, const Cone& c, long long r = 1);

struct HullReport {
  bool inside = false;       // every point lies in the slice
  bool facets_tight = false; // each inequality is tight at dim affinely independent points
  bool same_points = false;  // the slice has no lattice points beyond the given ones
  std::vector<std::string> diagnostics;
  bool ok() const { return inside && facets_tight && same_points; }
};
// compares the convex hull of the points with the level-r slice of c
HullReport hull_matches_slice(const std::vector<LatticeVector>& pts, const Cone& c, long long r = 1);

// trop_a_mutate on each point; points may carry the star and/or an "r"
// slot, matched by label, which are left alone
std::vector<LatticeVector> trop_mutate_points(const Quiver& q, int j, const std::vector<LatticeVector>& pts);

std::string cone_to_json(const Cone& c);
Cone cone_from_json(const std::string& text);
std::string points_to_json(const std::vector<LatticeVector>& pts);
std::string points_to_csv(const std::vector<LatticeVector>& pts);

}  // namespace grnet
