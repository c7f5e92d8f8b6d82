#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grnet/combinat.hpp"
#include "grnet/laurent.hpp"
#include "grnet/plabic.hpp"
#include "grnet/quiver.hpp"

namespace grnet {

struct Seed {
  int k = 0, n = 0;
  Quiver quiver;
  std::vector<std::optional<KSubset>> labels;  // per vertex, empty once off the plabic world

  bool labelled() const;
  int star() const { return quiver.star(); }
  int vertex_of(const KSubset& label) const;  // -1 when absent
};

Seed seed_of(const PlabicModel& m);

// FZ mutation plus the Plucker exchange of labels; NotPlabicMutable when the
// neighbourhood of j does not show the exchange pattern
Seed mutate_labels(const Seed& s, int j);
// FZ mutation only; labels are dropped
Seed mutate_unlabelled(const Seed& s, int j);

// coordinate at vertex J is max_diag(label(J), I)
LatticeVector kappa_vector(const Seed& s, const KSubset& i);

// column v is [S_v] written in the projectives basis; both sides Z^{Q0}
LatticeMap beta_matrix(const Seed& s);

struct WtMaps {
  LatticeMap rk;       // Z^{Q0} -> Z
  LatticeMap wt;       // Z^{Q0} -> N_star
  LatticeMap wt_hat;   // Z^{Q0} -> Z + N_star, (rk, wt)
  LatticeMap beta_hat; // inverse of wt_hat
};
WtMaps wt_maps(const Seed& s);

// v'_j = min(sum over out-neighbours, sum over in-neighbours) - v_j
Exponent trop_a_mutate(const Quiver& q, int j, const Exponent& v);
LatticeVector trop_a_mutate(const Quiver& q, int j, const LatticeVector& v);

std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);

}  // namespace grnet
