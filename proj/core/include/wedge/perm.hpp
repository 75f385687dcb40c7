#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wedge {

// Permutation of {1,...,5}, stored 0-based: img[i] is the image of point i.
class Perm5 {
public:
    Perm5() : img_{0, 1, 2, 3, 4} {}

    // Throws std::invalid_argument unless img is a bijection of {0,...,4}.
    static Perm5 from_images(const std::array<uint8_t, 5>& img);

    uint8_t operator()(uint8_t i) const { return img_[i]; }
    const std::array<uint8_t, 5>& images() const { return img_; }

    bool operator==(const Perm5& o) const { return img_ == o.img_; }
    bool operator!=(const Perm5& o) const { return img_ != o.img_; }
    // Image-array lexicographic; the total order used for all canonical forms.
    bool operator<(const Perm5& o) const { return img_ < o.img_; }

private:
    std::array<uint8_t, 5> img_;
};

// compose(a, b) applies b first, then a: compose(a,b)(x) = a(b(x)).
Perm5 compose(const Perm5& a, const Perm5& b);

// word_product(a, b) is "a then b", the left-to-right reading used for
// generator words and tuple products.
inline Perm5 word_product(const Perm5& a, const Perm5& b) { return compose(b, a); }

Perm5 inverse(const Perm5& g);

// conjugate(g, h) = h g h^{-1} as functions.
Perm5 conjugate(const Perm5& g, const Perm5& h);

int order(const Perm5& g);
bool is_even(const Perm5& g);

enum class Group { A5, S5 };

// All elements, sorted by image array. |A5| = 60, |S5| = 120.
const std::vector<Perm5>& elements(Group g);

std::vector<Perm5> elements_of_order(Group g, int r);

enum class SubgroupLabel {
    Trivial, C2, C3, C5, V4, S3ev, C6Type, A4, DType, A5, S5, Other
};

std::string to_string(SubgroupLabel label);

struct SubgroupId {
    int order = 0;
    SubgroupLabel label = SubgroupLabel::Other;
    bool operator==(const SubgroupId&) const = default;
};

// Full closure of a nonempty generating set inside S5, sorted.
// Throws std::invalid_argument on an empty generating set.
std::vector<Perm5> closure_elements(const std::vector<Perm5>& gens);

// Order plus an isomorphism-type label; ambiguities at equal order are
// resolved by the element-order census.
SubgroupId subgroup_closure(const std::vector<Perm5>& gens);

// Cycle notation: "(123)(45)"; "()" and "e" denote the identity.
// Whitespace is ignored. Throws std::invalid_argument on malformed input.
Perm5 parse_cycles(std::string_view s);
std::string to_cycles(const Perm5& g);

}  // namespace wedge
