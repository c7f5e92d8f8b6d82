#pragma once

#include <map>
#include <string>
#include <vector>

#include "grnet/combinat.hpp"
#include "grnet/laurent.hpp"
#include "grnet/plabic.hpp"
#include "grnet/quiver.hpp"

namespace grnet {

// sum of x^m over matchings m with boundary value I, over edge_lattice()
LaurentPoly partition_function(const PlabicModel& m, const KSubset& i);

// Flow polynomial over face_lattice_no_star(). Computed from matching
// weights and from flows; ConsistencyError if the two disagree,
// InvariantViolation if min or max term is not unique with coefficient 1.
LaurentPoly flow_polynomial(const PlabicModel& m, const KSubset& i);

struct NetworkCharts {
  std::map<KSubset, LaurentPoly> partition;  // only subsets in the positroid
  std::map<KSubset, LaurentPoly> flow;
};
// every chart of the model from one matching enumeration, with the same
// checks as flow_polynomial
NetworkCharts network_charts(const PlabicModel& m);

// minimal exponent; lattice order unless `order` names the tiebreak
LatticeVector valuation(const LaurentPoly& f, const std::vector<std::string>& order = {});

// Pulls f, written in the variables of the seed mutated at j, back to the
// variables of q_old. Coordinates of f are matched to q_old vertices by
// name; the one name q_old lacks is taken to be the mutated vertex. The
// result lives on q_old.lattice() or q_old.lattice_no_star(), whichever
// has the size of f's lattice.
LaurentPoly x_mutate(const Quiver& q_old, int j, const LaurentPoly& f);

// image of the single variable s'_i under the mutation at j
LaurentPoly x_mutate_variable(const Quiver& q_old, int j, int i);

struct PluckerTriple {
  KSubset s;
  int a, b, c, d;
  std::string str() const;
};

// D_Sac D_Sbd = D_Sab D_Scd + D_Sad D_Sbc in the given charts, with charts
// missing from the map read as 0
bool plucker_holds(const std::map<KSubset, LaurentPoly>& chart, const LatticePtr& lat,
                   const PluckerTriple& t);
std::vector<PluckerTriple> plucker_triples(int k, int n);

struct PluckerReport {
  size_t checked = 0;
  std::vector<std::string> failures;  // "P:<triple>" or "F:<triple>"
  bool ok() const { return failures.empty(); }
};
PluckerReport plucker_verify(const PlabicModel& m);
PluckerReport plucker_verify(const PlabicModel& m, const PluckerTriple& t);

}  // namespace grnet
