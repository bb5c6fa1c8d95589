#pragma once

/*
  Root-set combinatorics and the tangent-space certificates.

  For a tableau, X is its set of excluded coordinates, Y the label-* set,
  S the label-1 set and Z = X \ Y.  The checks implemented here:

    - X contains Y, S avoids X, S is rook-disjoint;
    - S covers Z (same matrix row, strictly left) and covers nothing of Y;
    - with e the sum of the S coordinate vectors and u the span of the
      non-excluded coordinates, u + [n,e] + Y fills the whole nilradical,
      the rank computed over exact rationals;
    - the coincidence criterion: excluding the union X(T) cup X(R) still
      covers and still fills, so both tableaux drive the same component.
*/

#include <set>
#include <string>
#include <vector>

#include "nilfibre/component.hpp"
#include "nilfibre/polynomial.hpp"
#include "nilfibre/reverse.hpp"

namespace nilfibre {

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        failures.push_back(std::move(why));
    }
    std::string summary() const;
};

struct XyzReport {
    CheckReport check;
    std::set<Coord> Z;
};

XyzReport xyz_properties(const std::set<Coord>& X, const std::set<Coord>& Y, const std::set<Coord>& S);

// Every z in Z must be covered by an S element in its row strictly to the
// left; no Y element may be covered.
CheckReport covering_check(const std::set<Coord>& S, const std::set<Coord>& Z, const std::set<Coord>& Y);

struct RankReport {
    bool full = false;
    bool full_with_borel = false;  // diagnostic variant including Levi diagonals
    int dim_m = 0;
    int dim_u = 0;
    int rank = 0;
    std::vector<Coord> missing;  // non-pivot coordinates when deficient
    std::string summary() const;
};

// Rank over Q of u + [n,e] + Y inside the nilradical, u the span of the
// coordinates not excluded by X, e the sum of the S coordinate vectors.
RankReport tangent_rank_check(const Diagram& d, const std::set<Coord>& X, const std::set<Coord>& S,
                              const std::set<Coord>& Y);

// Coincidence criterion for two exclusion sets sharing S and Y: S covers
// the union minus Y and the union still passes the rank check.
CheckReport coincidence_check(const Diagram& d, const std::set<Coord>& X_component,
                              const std::set<Coord>& X_reverse, const std::set<Coord>& S,
                              const std::set<Coord>& Y);

// Label-1 lines of the component tableau, located inside its reverse
// tableau: right-going, descending by exactly the number of label-* entries
// to their left in the same matrix row; star coordinates all excluded.
CheckReport line_geometry_check(const ReverseState& reverse, const ComponentTableau& ct);

}  // namespace nilfibre
