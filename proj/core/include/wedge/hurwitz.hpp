#pragma once

#include <map>
#include <string>
#include <vector>

#include "wedge/perm.hpp"

namespace wedge {

// Branching data (G; p_1 >= p_2 >= ... >= p_n), n >= 3, all p_i >= 2.
struct Signature {
    Group group;
    std::vector<int> orders;
};

// Throws std::invalid_argument unless the order list is valid.
Signature make_signature(Group g, std::vector<int> orders);

using GenTuple = std::vector<Perm5>;

// Entries applied in tuple order: entries[0] acts first.
Perm5 tuple_product(const GenTuple& t);

// Orders match the signature, the product is the identity, and the entries
// generate the whole group.
bool is_valid_tuple(const Signature& sig, const GenTuple& t);

// All valid tuples, in lexicographic order. Deterministic.
std::vector<GenTuple> enumerate_tuples(const Signature& sig);

// Lexicographically least tuple in the simultaneous-conjugation orbit.
GenTuple canonicalize(const Signature& sig, const GenTuple& t);

struct CoverClass {
    std::string id;
    GenTuple canonical;
    int size = 0;
    // order(g1 g2) when the tuple has four entries, 0 otherwise.
    int rtype = 0;
};

struct ClassSet {
    Signature sig;
    std::vector<CoverClass> classes;  // sorted by canonical representative
};

// Partition into simultaneous-conjugation orbits. The input must be closed
// under conjugation by the signature's group (throws otherwise).
ClassSet orbit_classes(const Signature& sig, const std::vector<GenTuple>& tuples);

// enumerate_tuples followed by orbit_classes.
ClassSet classify(const Signature& sig);

// Index of the class owning the given tuple. Throws if absent.
int class_index(const ClassSet& cs, const GenTuple& t);

// rtype -> number of classes. Throws if any class lacks an rtype.
std::map<int, int> rtype_census(const ClassSet& cs);

enum class BraidMove { M1Swap34, M2Conj12, M3Swap23, M3Inv };

std::string to_string(BraidMove m);

// Tuple substitutions for four-entry tuples (words read left to right):
//   M1Swap34: (a1, a2, a3 a4 a3^-1, a3)
//   M2Conj12: slots 3,4 conjugated by a1 a2
//   M3Swap23: (a1, a3, a3^-1 a2 a3, a4)
//   M3Inv:    (a1, a2 a3 a2^-1, a2, a4)
// Throws if the result violates the signature (cannot happen for (3,2,2,2)).
GenTuple apply_move(const Signature& sig, BraidMove m, const GenTuple& t);

// Class-level actions; values are class indices.
int move_on_class(const ClassSet& cs, BraidMove m, int i);
int outer_on_class(const ClassSet& cs, int i);  // entrywise conjugation by (12)

// Orbits of M1Swap34 on classes, each orbit sorted, orbits sorted by first.
std::vector<std::vector<int>> tgamma_orbits(const ClassSet& cs);

// Closure type of the first two entries of the canonical representative.
SubgroupId stabilizer_type(const CoverClass& c);

// One line per class: "ID rtype size entries...".
std::string dump_classes(const ClassSet& cs);

}  // namespace wedge
