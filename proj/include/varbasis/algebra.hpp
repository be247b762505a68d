#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "varbasis/errors.hpp"

namespace varbasis {

/// Symbolic species identifier. Basis vectors are never materialized; a
/// basis is identified with its label set.
using Label = std::uint32_t;

/// A finite set of labels, kept sorted ascending. May be empty (the basis
/// of the null-dimension zero vector) or equal to the whole universe.
class BasisSet {
public:
    BasisSet() = default;
    BasisSet(std::initializer_list<Label> ids);

    /// Sorts and deduplicates.
    static BasisSet from_labels(std::vector<Label> ids);

    bool empty() const noexcept { return labels_.empty(); }
    std::size_t size() const noexcept { return labels_.size(); }
    bool contains(Label id) const noexcept;

    bool subset_of(const BasisSet& other) const noexcept;
    bool strict_subset_of(const BasisSet& other) const noexcept;

    BasisSet unite(const BasisSet& other) const;
    BasisSet intersect(const BasisSet& other) const;
    BasisSet difference(const BasisSet& other) const;

    /// Ascending label ids.
    const std::vector<Label>& labels() const noexcept { return labels_; }

    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }

    bool operator==(const BasisSet&) const = default;
    auto operator<=>(const BasisSet&) const = default;

private:
    std::vector<Label> labels_;
};

std::string to_string(const BasisSet& basis);

/// The full index set I, partitioned into catalogued labels and a reserved
/// range for species that are not yet catalogued. The two parts must be
/// disjoint; parameters are only required to cover the catalogued part.
class Universe {
public:
    Universe() = default;
    explicit Universe(BasisSet known, BasisSet unknown_reserve = {});

    const BasisSet& known() const noexcept { return known_; }
    const BasisSet& unknown_reserve() const noexcept { return reserve_; }

    /// known ∪ unknown_reserve: the maximal basis.
    const BasisSet& full() const noexcept { return full_; }

    bool contains(Label id) const noexcept { return full_.contains(id); }

    /// Throws DomainError naming the first offending label.
    void require_contains(const BasisSet& basis) const;

    void set_name(Label id, std::string name);
    /// Display name for a label, or empty string if none was configured.
    const std::string& name(Label id) const;
    const std::map<Label, std::string>& names() const noexcept { return names_; }

    bool operator==(const Universe&) const = default;

private:
    BasisSet known_;
    BasisSet reserve_;
    BasisSet full_;
    std::map<Label, std::string> names_;
};

/// An element of the variable-basis space: a basis (which species exist)
/// plus one real coordinate per basis label (their abundances).
///
/// A label present with coordinate 0.0 is a PRESENT species with zero
/// abundance; a label missing from the basis is an ABSENT species. The two
/// are never conflated: equality compares basis sets exactly.
class VBVector {
public:
    /// The null-dimension zero vector (empty basis).
    VBVector() = default;

    VBVector(std::initializer_list<std::pair<Label, double>> entries);

    /// Sorts by label; throws DomainError on duplicate labels.
    static VBVector from_pairs(std::vector<std::pair<Label, double>> entries);

    /// Basis and coordinates aligned positionally (ascending label order).
    static VBVector from_parts(BasisSet basis, std::vector<double> coords);

    const BasisSet& basis() const noexcept { return basis_; }
    const std::vector<double>& coords() const noexcept { return coords_; }

    bool empty_basis() const noexcept { return basis_.empty(); }
    std::size_t dimension() const noexcept { return basis_.size(); }

    bool has(Label id) const noexcept { return basis_.contains(id); }

    /// Coordinate of a present species; throws DomainError if the label is
    /// not in the basis (absence is not zero).
    double coord(Label id) const;

    bool operator==(const VBVector&) const = default;

private:
    BasisSet basis_;
    std::vector<double> coords_;
};

std::string to_string(const VBVector& x);

// --- Internal composition laws -------------------------------------------

/// Sum over the united basis: result basis is x.basis ∪ y.basis, a missing
/// operand coordinate counts as 0. Models species addition.
VBVector union_add(const VBVector& x, const VBVector& y);

/// Sum over the common basis: result basis is x.basis ∩ y.basis, labels
/// outside the intersection are dropped. Models species removal.
VBVector inter_add(const VBVector& x, const VBVector& y);

/// Universe-checked variants: throw DomainError if either operand
/// references a label outside the universe.
VBVector union_add(const VBVector& x, const VBVector& y, const Universe& universe);
VBVector inter_add(const VBVector& x, const VBVector& y, const Universe& universe);

// --- External law and constructions ---------------------------------------

/// External multiplicative law: same basis, every coordinate times a.
/// scale(0, x) keeps x's basis with all-zero coordinates.
VBVector scale(double a, const VBVector& x);

/// Restriction of support: basis x.basis ∩ target, coordinates copied.
VBVector project(const VBVector& x, const BasisSet& target);

/// All-ones vector on x's basis.
VBVector unit_from(const VBVector& x);

/// All-ones vector on the given basis.
VBVector unit_on(const BasisSet& basis);
VBVector unit_on(const BasisSet& basis, const Universe& universe);

/// Neutral element of union_add: the empty-basis zero vector.
VBVector zero_empty();

/// Neutral element of inter_add: the full-universe basis, all coordinates 0.
VBVector zero_full(const Universe& universe);

/// Exact basis equality plus coordinate-wise agreement within abs_tol.
bool approx_equal(const VBVector& x, const VBVector& y, double abs_tol = 1e-12);

}  // namespace varbasis
