#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planar/errors.hpp"

namespace planar {

enum class Label : char { x = 'x', y = 'y' };

/// An {x,y}-labeled finite planar reduced rooted tree, or the unit (empty tree).
///
/// Values are interned: structural equality is id equality, and construction
/// always normalizes (unit entries are absorbed at graft time, so no Unit ever
/// appears as a child and every interior vertex keeps at least two children).
/// Monomials are immutable and freely copyable; a copy is 4 bytes.
class Monomial {
public:
    /// The unit monomial, the empty tree.
    static Monomial unit();
    /// The single-vertex tree labeled x (resp. y).
    static Monomial var_x();
    static Monomial var_y();
    static Monomial leaf(Label l);

    bool is_unit() const { return id_ == 0; }
    bool is_leaf() const { return id_ == 1 || id_ == 2; }
    bool is_node() const { return id_ > 2; }

    /// Label of a leaf; throws on unit or interior nodes.
    Label leaf_label() const;

    /// Ordered children of an interior node; empty for unit and leaves.
    std::span<const Monomial> children() const;

    /// Root arity (number of children); 0 for unit and leaves.
    int arity() const { return static_cast<int>(children().size()); }

    int deg_x() const;
    int deg_y() const;
    int deg() const { return deg_x() + deg_y(); }

    /// Canonical text: unit = "1", leaves = "x"/"y",
    /// node = "(" + comma-joined child encodings + ")".
    const std::string& encoding() const;

    /// Canonical encoding of the underlying non-planar tree: children sorted
    /// recursively by (degree, encoded text). Equal keys <=> isomorphic
    /// underlying labeled rooted trees.
    const std::string& orbit_key() const;

    /// Parses canonical encoding text; rejects non-canonical forms.
    static Monomial from_encoding(std::string_view text);

    friend bool operator==(Monomial a, Monomial b) { return a.id_ == b.id_; }
    friend bool operator!=(Monomial a, Monomial b) { return a.id_ != b.id_; }

    std::uint32_t id() const { return id_; }

private:
    friend Monomial graft(std::span<const Monomial> args);
    explicit Monomial(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;
};

/// Canonical order: ascending total degree, then byte-lexicographic encoding.
struct MonomialOrder {
    bool operator()(Monomial a, Monomial b) const;
};

/// The m-ary grafting operation, m >= 2: joins the arguments under a new
/// common root. Unit entries are dropped; if none remain the unit is returned,
/// if exactly one remains it is returned unchanged.
Monomial graft(std::span<const Monomial> args);
Monomial graft(std::initializer_list<Monomial> args);

/// All m-tuples (S_1,...,S_m) whose graft equals S. Unit placements are
/// enumerated combinatorially: S itself in one of the m slots, plus, when S
/// has root arity r <= m, the C(m,r) ways of spreading its children in order.
std::vector<std::vector<Monomial>> decompositions(Monomial s, int m);

/// Removes leaf i (1-based, planar left-to-right order) and splices out any
/// vertex left with a single child. Total degree drops by exactly one.
Monomial delete_leaf_and_reduce(Monomial s, int i);

/// Same shape with leaf i relabeled.
Monomial relabel_leaf(Monomial s, int i, Label l);

/// All monomials of total degree n over the given leaf alphabet, in canonical
/// order. Degree 0 yields just the unit.
std::vector<Monomial> enumerate_monomials(int n, const std::vector<Label>& labels);

/// All planar monomials with the same underlying non-planar labeled tree as s,
/// in canonical order; s is always a member.
std::vector<Monomial> orbit_sum(Monomial s);

} // namespace planar
