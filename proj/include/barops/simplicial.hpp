#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "barops/algebra.hpp"
#include "barops/chain.hpp"

namespace barops {

// A possibly-degenerate simplex in normal form: a strictly decreasing word
// of degeneracy operators applied to a nondegenerate simplex id.
struct SimplexRef {
    std::vector<int> degens; // s_{j_1}...s_{j_k} with j_1 > ... > j_k
    int id = -1;

    bool degenerate() const { return !degens.empty(); }
    bool operator==(const SimplexRef&) const = default;
};

// Simplicial set given by its nondegenerate simplices and their faces.
// Face identities d_i d_j = d_{j-1} d_i (i < j) are checked at load through
// the degeneracy normal forms.
class SimplicialSet {
public:
    struct SimplexData {
        std::string name;
        int dim = 0;
        std::vector<SimplexRef> faces; // dim+1 entries, empty for vertices
    };

    SimplicialSet(std::vector<SimplexData> simplices, bool reduced);

    int count() const { return static_cast<int>(simplices_.size()); }
    int dim(int id) const { return simplices_[static_cast<size_t>(id)].dim; }
    const std::string& name(int id) const { return simplices_[static_cast<size_t>(id)].name; }
    int id_of(const std::string& name) const; // ParseError if unknown
    std::vector<int> simplices_of_dim(int n) const;
    int max_dim() const { return max_dim_; }
    bool reduced() const { return reduced_; }

    // i-th face of a possibly-degenerate simplex of dimension dim, in
    // normal form via the simplicial identities.
    SimplexRef face(const SimplexRef& x, int dim, int i) const;

    // Face of a nondegenerate simplex spanned by a vertex subset of {0..n}.
    SimplexRef face_by_vertices(int id, const std::vector<int>& vertices) const;

private:
    std::vector<SimplexData> simplices_;
    bool reduced_;
    int max_dim_;
};

std::shared_ptr<SimplicialSet> parse_simplicial_set(const std::string& text);
std::shared_ptr<SimplicialSet> load_simplicial_set(const std::string& path);

// Normalized cochains of a simplicial set with the interval-cut action.
// Basis id i is the indicator cochain of nondegenerate simplex i, in
// homological grade -dim.  The unit is the vertex when the set is reduced
// with a single vertex.
class CochainAlgebra final : public SurjAlgebra {
public:
    explicit CochainAlgebra(std::shared_ptr<const SimplicialSet> space);

    int basis_size() const override { return space_->count(); }
    const std::string& basis_name(int id) const override { return space_->name(id); }
    int grade(int id) const override { return -space_->dim(id); }
    std::optional<int> unit() const override { return unit_; }
    ElemSum diff(int id) const override;
    ElemSum apply(const Surjection& u, const std::vector<int>& inputs) const override;

    const SimplicialSet& space() const { return *space_; }

    // Coefficient of the evaluation of u(x_1..x_r) on one simplex: the sum
    // over interval cuts of the word positions into {0..n} of the product
    // of the x_k over the faces the value-k intervals span.
    bool interval_cut_coefficient(const Surjection& u, const std::vector<int>& inputs,
                                  int simplex) const;

    // The cochain complex as a slice (grades -max_dim..0).
    f2::ComplexSlice<int> cochain_slice() const;

private:
    std::shared_ptr<const SimplicialSet> space_;
    std::optional<int> unit_;
};

} // namespace barops
