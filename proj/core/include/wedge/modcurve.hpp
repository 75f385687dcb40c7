#pragma once

#include <string>
#include <vector>

#include "wedge/hurwitz.hpp"

namespace wedge {

// Right: a transitive PSL2(Z)-action given by the images of the two
// parabolic generators; piS and piU are derived and must satisfy
// piS^2 = piU^3 = id. Composition convention matches compose(): (pq)(x) = p(q(x)).
struct PermAction {
    std::vector<int> pi1, pi2;  // generators
    std::vector<int> piS, piU;  // piS = pi1 pi2 pi1, piU = pi1 pi2
};

// Validates both inputs are permutations of the same degree, derives piS and
// piU, and checks the relations and transitivity. Throws with the name of
// the first failed relation.
PermAction make_action(std::vector<int> pi1, std::vector<int> pi2);

// pi1 from M3Inv, pi2 from M1Swap34, on the 18 classes of (A5; 3,2,2,2).
// Throws unless the class set is exactly that classification.
PermAction build_action(const ClassSet& cs);

struct Cusp {
    int width = 0;
    std::vector<int> classes;  // a pi2-cycle, from its least member
};

struct CuspData {
    std::vector<Cusp> cusps;  // width descending, then least member ascending
};

CuspData cusp_data(const PermAction& a);

// 1 + n/12 - e2/4 - e3/3 - c/2, exact; throws unless a nonnegative integer.
int quotient_genus(const PermAction& a);

// 2*genus + cusps - 1.
int free_rank(const PermAction& a);

// Larcher's congruence-subgroup necessary condition restricted to the cusp
// width set: closure under pairwise gcd and lcm.
bool larcher_test(const std::vector<int>& widths);

// Cusp permutation induced by the outer involution on classes. Throws if the
// involution fails to permute the cusps.
std::vector<int> involution_on_cusps(const ClassSet& cs, const PermAction& a);

// One row per cusp: "cusp <k>: width <w>, classes [...], iota-image <k'>".
std::string dump_action(const ClassSet& cs, const PermAction& a);

}  // namespace wedge
