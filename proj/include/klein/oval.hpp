#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klein/scalar.hpp"

namespace klein {

// Modular arithmetic for a small odd prime.
class PrimeField {
  public:
    explicit PrimeField(long p);
    long p() const { return p_; }
    long norm(long a) const {
        long r = a % p_;
        return r < 0 ? r + p_ : r;
    }
    long add(long a, long b) const { return norm(a + b); }
    long sub(long a, long b) const { return norm(a - b); }
    long mul(long a, long b) const { return norm(norm(a) * norm(b)); }
    long neg(long a) const { return norm(-a); }
    long inv(long a) const;
    long div(long a, long b) const { return mul(a, inv(b)); }

  private:
    long p_;
};

// Permutation of {0, ..., n-1} in one-line notation.
using Perm = std::vector<int>;

// A finite set O = {0, ..., n-1} with involutory permutations acting on it.
// The defining property (checked by verify_abstract_oval): for all a1, a2,
// b1, b2 with {a1,a2} and {b1,b2} disjoint, exactly one member maps a1 to a2
// and b1 to b2.
struct AbstractOval {
    int n = 0;
    std::vector<Perm> s;
};

// A line of the derived incidence structure: the pair of base elements plus
// the members of S mapping one to the other.  Tangent when a == b.
struct OvalLine {
    int a = 0, b = 0;
    std::vector<int> members;  // indices into AbstractOval::s
};

struct OvalIncidence {
    int point_count = 0;  // |O| + |S|
    std::vector<OvalLine> secants;
    std::vector<OvalLine> tangents;
};

// The oval induced by the conic xz = y^2 in PG(2,p): base set of p+1 conic
// points, one involution per off-conic point (p^2 of them).
AbstractOval conic_oval(long p);

// Involutority plus sharp transitivity, by exhaustive enumeration.
bool verify_abstract_oval(const AbstractOval& b);

// Every secant closes under triple products: for all I, J, K mapping a to b,
// IJK is again a member mapping a to b.  Requires a valid oval.
bool secants_pascalian(const AbstractOval& b);

// S closed under conjugation by its own members.  Requires a valid oval.
bool is_regular(const AbstractOval& b);

// Materialised incidence lists.  Requires a valid oval.
OvalIncidence build_incidence(const AbstractOval& b);

// Comparison of the conic's incidence geometry with the involution picture:
// internal points correspond to fixed-point-free involutions, secant lines to
// involutions with two fixed base points, and lying on a secant corresponds
// to commuting.
struct InvolutionModelReport {
    long p = 0;
    long fixed_point_free = 0;
    long two_fixed = 0;
    long internal_points = 0;
    long external_points = 0;
    long secant_lines = 0;
    bool counts_ok = false;     // class sizes match the point and line counts
    bool incidence_ok = false;  // incidence and commuting agree everywhere
    bool ok() const { return counts_ok && incidence_ok; }
};

InvolutionModelReport involution_model(long p);

// JSON dumps (adjacency-list style) for the CLI surface.
std::string oval_json(const AbstractOval& b);
std::string incidence_json(const OvalIncidence& inc);

}  // namespace klein
