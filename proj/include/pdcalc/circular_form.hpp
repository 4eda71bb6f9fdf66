#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdcalc/errors.hpp"

namespace pdcalc {

// A rooted unordered tree; one node per circle, children are the circles
// immediately nested inside.
struct TreeNode {
    std::vector<TreeNode> children;
    int node_count() const {
        int n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }
};
using Forest = std::vector<TreeNode>;

// An isotopy class of finitely many disjoint nested circles in the plane.
// Stored canonically: each tree as a balanced-paren string with children
// sorted descending, the forest as the descending-sorted list of tree strings.
// Equal forms always have identical encodings.
class CircularForm {
public:
    CircularForm() = default;

    static CircularForm empty() { return {}; }

    // Grammar: a form is a sequence of balanced groups; "∅" or "" is empty.
    static CircularForm parse(std::string_view text);

    // One new circle around the whole of u.
    static CircularForm wrap(const CircularForm& u);

    // Disjoint union of diagrams = product in the commutative monoid.
    friend CircularForm operator*(const CircularForm& a, const CircularForm& b);
    CircularForm& operator*=(const CircularForm& o) { return *this = *this * o; }

    int circle_count() const;
    bool is_empty() const { return trees_.empty(); }
    std::string encode() const;
    const std::vector<std::string>& trees() const { return trees_; }

    bool operator==(const CircularForm& o) const { return trees_ == o.trees_; }
    bool operator!=(const CircularForm& o) const { return !(*this == o); }
    bool operator<(const CircularForm& o) const { return encode() < o.encode(); }

private:
    std::vector<std::string> trees_; // canonical tree encodings, sorted descending
    friend CircularForm circles_of(const Forest&);
    friend Forest forest_of(const CircularForm&);
};

// Mutually inverse bijections between circular forms and rooted forests:
// parent = immediately enclosing circle.
Forest forest_of(const CircularForm& u);
CircularForm circles_of(const Forest& f);

// All distinct forms with exactly c circles, in canonical (descending
// encoding) order. Count is the number of rooted forests with c nodes.
std::vector<CircularForm> enumerate_circular_forms(int c, int bound = 12);

// Representative of the S^2-isotopy class of u: the infinity face is added as
// a virtual root, the resulting free tree is re-rooted over all vertices, and
// the lexicographically minimal encoding wins. Two forms are isotopic on the
// sphere iff their spherical canonicals are equal.
CircularForm spherical_canonical(const CircularForm& u);

} // namespace pdcalc
