#pragma once

/*
  The determinantal invariant attached to a neighbouring pair (C,C') of
  height s.

  Restrict to the sub-diagram spanned by the columns [C,C'], N the number
  of its boxes.  Over c*Id + xi, with xi the generic element of the
  sub-nilradical, take the (N-s) x (N-s) minor on the first N-s rows and
  last N-s columns and keep the coefficient of the lowest power of c.
  That coefficient is multilinear of degree equal to the size of the left
  rectangle, and its monomial built from the horizontal lines of the
  rectangle has coefficient +-1; signs are normalized so that monomial
  carries +1.

  Symbolic mode materializes the polynomial (bounded); blackbox mode
  evaluates exactly at points, over the testing prime field or over the
  integers, by elimination and interpolation in c.
*/

#include <functional>

#include "nilfibre/component.hpp"
#include "nilfibre/polynomial.hpp"
#include "nilfibre/reverse.hpp"

namespace nilfibre {

inline constexpr int kDefaultSymbolicBound = 14;  // max sub-diagram rows for symbolic mode

class BsInvariant {
public:
    BsInvariant(DiagramPtr diag, NeighbouringPair pair);

    const NeighbouringPair& pair() const { return pair_; }
    const Diagram& diagram() const { return *diag_; }
    int sub_size() const { return N_; }
    int degree() const { return degree_; }
    int aux_power() const { return c_power_; }
    int sign() const { return sign_; }
    // Coordinates of the sub-nilradical the invariant may mention.
    const std::vector<Coord>& support() const { return support_; }

    SparsePolynomial symbolic(int size_bound = kDefaultSymbolicBound) const;
    std::uint64_t evaluate_fp(const std::function<std::uint64_t(Coord)>& point) const;
    long long evaluate_exact(const std::function<long long(Coord)>& point) const;

private:
    DiagramPtr diag_;
    NeighbouringPair pair_;
    int start_ = 0;  // first value of column C
    int N_ = 0;
    int s_ = 0;
    int degree_ = 0;
    int c_power_ = 0;
    int sign_ = 1;
    std::vector<Coord> support_;

    friend int monomial_coefficient(const BsInvariant&, const std::vector<Coord>&);
};

inline BsInvariant bs_invariant(DiagramPtr d, const NeighbouringPair& p) { return BsInvariant(std::move(d), p); }

// Coefficient (before sign normalization) of the multilinear monomial
// prod x_{a,b} over the given segments; 0 when the segments do not assemble
// into a monomial of the minor.
int monomial_coefficient(const BsInvariant& inv, const std::vector<Coord>& segments);

struct ZeroTestReport {
    bool is_zero = false;
    int trials = 0;
    long double failure_bound = 0.0L;  // (degree/P)^trials when declared zero
    std::uint64_t witness = 0;         // a nonzero value when not zero
};

// Schwartz-Zippel test of the invariant on the span of the non-excluded
// coordinates: excluded coordinates pinned to 0, the rest uniform in F_P.
ZeroTestReport is_zero_on_subspace(const BsInvariant& inv, const std::set<Coord>& excluded, int trials,
                                   std::uint64_t seed);

struct WeierstrassReport {
    bool pass = false;
    std::vector<std::pair<NeighbouringPair, Coord>> images;  // invariant -> its Y coordinate
    std::string detail;
};

// Substitutes every label-1 coordinate by 1 and everything outside S and Y
// by 0; each invariant must collapse to +-1 times a single Y coordinate and
// the g invariants must reach g distinct ones.
WeierstrassReport weierstrass_check(const ComponentTableau& ct, int size_bound = kDefaultSymbolicBound);

struct HorizontalCheck {
    bool applicable = false;  // no red in R_s of the left trapezium
    bool pass = false;
    std::vector<Coord> segments;
    int coefficient = 0;  // after sign normalization
    std::string detail;
};

// Builds the horizontal-line monomial of the current trapezium of `p` and
// certifies it survives in the invariant with the excluded coordinates of
// the state zeroed: a constructive witness of non-vanishing.
HorizontalCheck horizontal_monomial_check(const ReverseState& state, const NeighbouringPair& p);

}  // namespace nilfibre
