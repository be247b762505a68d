#include "varbasis/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace varbasis {

namespace {

std::string fmt_coord(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

// --- BasisSet ---------------------------------------------------------------

BasisSet::BasisSet(std::initializer_list<Label> ids) {
    labels_.assign(ids.begin(), ids.end());
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

BasisSet BasisSet::from_labels(std::vector<Label> ids) {
    BasisSet b;
    b.labels_ = std::move(ids);
    std::sort(b.labels_.begin(), b.labels_.end());
    b.labels_.erase(std::unique(b.labels_.begin(), b.labels_.end()), b.labels_.end());
    return b;
}

bool BasisSet::contains(Label id) const noexcept {
    return std::binary_search(labels_.begin(), labels_.end(), id);
}

bool BasisSet::subset_of(const BasisSet& other) const noexcept {
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                         labels_.end());
}

bool BasisSet::strict_subset_of(const BasisSet& other) const noexcept {
    return size() < other.size() && subset_of(other);
}

BasisSet BasisSet::unite(const BasisSet& other) const {
    BasisSet out;
    out.labels_.reserve(size() + other.size());
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(out.labels_));
    return out;
}

BasisSet BasisSet::intersect(const BasisSet& other) const {
    BasisSet out;
    std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                          other.labels_.end(), std::back_inserter(out.labels_));
    return out;
}

BasisSet BasisSet::difference(const BasisSet& other) const {
    BasisSet out;
    std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(out.labels_));
    return out;
}

std::string to_string(const BasisSet& basis) {
    std::string out = "{";
    for (std::size_t i = 0; i < basis.labels().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(basis.labels()[i]);
    }
    out += "}";
    return out;
}

// --- Universe ----------------------------------------------------------------

Universe::Universe(BasisSet known, BasisSet unknown_reserve)
    : known_(std::move(known)), reserve_(std::move(unknown_reserve)) {
    if (!known_.intersect(reserve_).empty()) {
        throw DomainError("universe: known labels and unknown reserve overlap on " +
                          to_string(known_.intersect(reserve_)));
    }
    full_ = known_.unite(reserve_);
}

void Universe::require_contains(const BasisSet& basis) const {
    for (Label id : basis) {
        if (!contains(id)) {
            throw DomainError("label " + std::to_string(id) + " is outside the universe " +
                              to_string(full_));
        }
    }
}

void Universe::set_name(Label id, std::string name) { names_[id] = std::move(name); }

const std::string& Universe::name(Label id) const {
    static const std::string empty;
    auto it = names_.find(id);
    return it == names_.end() ? empty : it->second;
}

// --- VBVector ------------------------------------------------------------------

VBVector::VBVector(std::initializer_list<std::pair<Label, double>> entries) {
    *this = from_pairs(std::vector<std::pair<Label, double>>(entries.begin(), entries.end()));
}

VBVector VBVector::from_pairs(std::vector<std::pair<Label, double>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].first == entries[i].first) {
            throw DomainError("duplicate label " + std::to_string(entries[i].first) +
                              " in vector literal");
        }
    }
    VBVector x;
    std::vector<Label> ids;
    ids.reserve(entries.size());
    x.coords_.reserve(entries.size());
    for (const auto& [id, value] : entries) {
        ids.push_back(id);
        x.coords_.push_back(value);
    }
    x.basis_ = BasisSet::from_labels(std::move(ids));
    return x;
}

VBVector VBVector::from_parts(BasisSet basis, std::vector<double> coords) {
    if (basis.size() != coords.size()) {
        throw DomainError("coordinate count " + std::to_string(coords.size()) +
                          " does not match basis size " + std::to_string(basis.size()));
    }
    VBVector x;
    x.basis_ = std::move(basis);
    x.coords_ = std::move(coords);
    return x;
}

double VBVector::coord(Label id) const {
    const auto& ids = basis_.labels();
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
        throw DomainError("species " + std::to_string(id) +
                          " is absent from the basis (absence is not zero)");
    }
    return coords_[static_cast<std::size_t>(it - ids.begin())];
}

std::string to_string(const VBVector& x) {
    std::string out = "{";
    const auto& ids = x.basis().labels();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(ids[i]) + ":" + fmt_coord(x.coords()[i]);
    }
    out += "}";
    return out;
}

// --- Composition laws ------------------------------------------------------------

VBVector union_add(const VBVector& x, const VBVector& y) {
    const auto& xi = x.basis().labels();
    const auto& yi = y.basis().labels();
    std::vector<Label> ids;
    std::vector<double> coords;
    ids.reserve(xi.size() + yi.size());
    coords.reserve(xi.size() + yi.size());

    std::size_t a = 0;
    std::size_t b = 0;
    while (a < xi.size() || b < yi.size()) {
        if (b == yi.size() || (a < xi.size() && xi[a] < yi[b])) {
            ids.push_back(xi[a]);
            coords.push_back(x.coords()[a]);
            ++a;
        } else if (a == xi.size() || yi[b] < xi[a]) {
            ids.push_back(yi[b]);
            coords.push_back(y.coords()[b]);
            ++b;
        } else {
            ids.push_back(xi[a]);
            coords.push_back(x.coords()[a] + y.coords()[b]);
            ++a;
            ++b;
        }
    }
    return VBVector::from_parts(BasisSet::from_labels(std::move(ids)), std::move(coords));
}

VBVector inter_add(const VBVector& x, const VBVector& y) {
    const auto& xi = x.basis().labels();
    const auto& yi = y.basis().labels();
    std::vector<Label> ids;
    std::vector<double> coords;

    std::size_t a = 0;
    std::size_t b = 0;
    while (a < xi.size() && b < yi.size()) {
        if (xi[a] < yi[b]) {
            ++a;
        } else if (yi[b] < xi[a]) {
            ++b;
        } else {
            ids.push_back(xi[a]);
            coords.push_back(x.coords()[a] + y.coords()[b]);
            ++a;
            ++b;
        }
    }
    return VBVector::from_parts(BasisSet::from_labels(std::move(ids)), std::move(coords));
}

VBVector union_add(const VBVector& x, const VBVector& y, const Universe& universe) {
    universe.require_contains(x.basis());
    universe.require_contains(y.basis());
    return union_add(x, y);
}

VBVector inter_add(const VBVector& x, const VBVector& y, const Universe& universe) {
    universe.require_contains(x.basis());
    universe.require_contains(y.basis());
    return inter_add(x, y);
}

VBVector scale(double a, const VBVector& x) {
    std::vector<double> coords = x.coords();
    for (double& c : coords) c *= a;
    return VBVector::from_parts(x.basis(), std::move(coords));
}

VBVector project(const VBVector& x, const BasisSet& target) {
    const auto& ids = x.basis().labels();
    std::vector<Label> keep;
    std::vector<double> coords;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (target.contains(ids[i])) {
            keep.push_back(ids[i]);
            coords.push_back(x.coords()[i]);
        }
    }
    return VBVector::from_parts(BasisSet::from_labels(std::move(keep)), std::move(coords));
}

VBVector unit_from(const VBVector& x) {
    return VBVector::from_parts(x.basis(), std::vector<double>(x.dimension(), 1.0));
}

VBVector unit_on(const BasisSet& basis) {
    return VBVector::from_parts(basis, std::vector<double>(basis.size(), 1.0));
}

VBVector unit_on(const BasisSet& basis, const Universe& universe) {
    universe.require_contains(basis);
    return unit_on(basis);
}

VBVector zero_empty() { return VBVector{}; }

VBVector zero_full(const Universe& universe) {
    return VBVector::from_parts(universe.full(), std::vector<double>(universe.full().size(), 0.0));
}

bool approx_equal(const VBVector& x, const VBVector& y, double abs_tol) {
    if (x.basis() != y.basis()) return false;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (!(std::abs(x.coords()[i] - y.coords()[i]) <= abs_tol)) return false;
    }
    return true;
}

}  // namespace varbasis
