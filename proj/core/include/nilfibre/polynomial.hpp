#pragma once

/*
  Exact sparse multivariate polynomials over the matrix coordinates
  x_{i,j}, plus the auxiliary variable c used when slicing minors of
  c*Id + xi.

  Monomials are sorted vectors of variable ids, repeats denoting powers;
  the invariants themselves are multilinear with unit coefficients, so
  int64 coefficients are ample for everything built on top of them.
*/

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilfibre/diagram.hpp"

namespace nilfibre {

using Coord = std::pair<int, int>;  // (row, column) of x_{i,j}, 1-based
using VarId = std::uint16_t;

inline constexpr VarId kAuxVar = 0;  // the variable c

inline VarId var_of(int i, int j) { return static_cast<VarId>(i * 128 + j); }
inline Coord coord_of(VarId v) { return {v / 128, v % 128}; }

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct Substitution {
    enum class Kind { Zero, One, Keep, Value };
    struct Action {
        Kind kind = Kind::Keep;
        long long value = 0;
    };
    std::map<Coord, Action> map;

    void set_zero(Coord c) { map[c] = {Kind::Zero, 0}; }
    void set_one(Coord c) { map[c] = {Kind::One, 1}; }
    void set_value(Coord c, long long v) { map[c] = {Kind::Value, v}; }
    Action action(Coord c) const;
    bool homogeneous() const;  // only Zero/Keep actions

    // "x1,2=1;x1,3=0;x2,4=5"
    static std::optional<Substitution> parse(const std::string& text);
    std::string str() const;
};

class SparsePolynomial {
public:
    using Monomial = std::vector<VarId>;  // sorted, repeats = powers

    SparsePolynomial() = default;
    static SparsePolynomial constant(long long c);
    static SparsePolynomial variable(VarId v);
    static SparsePolynomial coordinate(int i, int j) { return variable(var_of(i, j)); }

    void add_term(Monomial m, long long coeff);
    long long coefficient(const Monomial& m) const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial negated() const;
    SparsePolynomial scaled(long long k) const;
    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;      // aux variable included
    int degree_in(VarId v) const;
    bool is_multilinear() const;   // in the coordinate variables; c-free
    std::set<VarId> variables() const;

    // Applies a substitution to the coordinate variables; c is untouched.
    SparsePolynomial substitute(const Substitution& sub) const;
    // Splits off the coefficient of the lowest power of c, dropping c.
    SparsePolynomial lowest_aux_coefficient(int* power = nullptr) const;
    long long evaluate(const std::function<long long(Coord)>& point) const;

    const std::map<Monomial, long long>& terms() const { return terms_; }
    std::string str() const;   // "x2,4*x4,5*x3,6 - x2,5*x3,4*x4,6" style, deterministic

private:
    std::map<Monomial, long long> terms_;
};

// Complete factorisation of a multilinear polynomial into its irreducible
// multilinear factors, via connected components of the variable
// interaction graph.  Factors come in canonical variable order, content 1,
// leading coefficient positive; their product rebuilds the input up to an
// integer scalar, which is verified.  Non-multilinear input is rejected.
std::vector<SparsePolynomial> multilinear_factor(const SparsePolynomial& q);

// Arithmetic in the prime field of size 2^61 - 1 used for randomized
// identity testing.
struct Fp {
    static constexpr std::uint64_t P = (1ull << 61) - 1;
    static std::uint64_t add(std::uint64_t a, std::uint64_t b);
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b);
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b);
    static std::uint64_t pow(std::uint64_t a, std::uint64_t e);
    static std::uint64_t inv(std::uint64_t a);
};

}  // namespace nilfibre
