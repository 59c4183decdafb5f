#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barops/formal_sum.hpp"
#include "barops/surjection.hpp"

namespace barops {

// Element of an algebra presented over its F_2 basis, by dense ids.
using ElemSum = f2::FormalSum<int>;

// Algebra with an action of surjection words.  Grades are homological;
// a cohomological degree n is stored as -n.  apply is multilinear in the
// inputs on the basis; apply_linear extends it.
class SurjAlgebra {
public:
    virtual ~SurjAlgebra() = default;

    virtual int basis_size() const = 0;
    virtual const std::string& basis_name(int id) const = 0;
    virtual int grade(int id) const = 0;
    virtual std::optional<int> unit() const = 0;
    virtual ElemSum diff(int id) const = 0;
    virtual ElemSum apply(const Surjection& u, const std::vector<int>& inputs) const = 0;

    int id_of(const std::string& name) const; // ParseError if unknown
    ElemSum diff_linear(const ElemSum& x) const;
    ElemSum apply_linear(const Surjection& u, const std::vector<ElemSum>& inputs) const;

    // Basis ids of the augmentation ideal (everything except the unit).
    std::vector<int> ideal_basis() const;
    // True when the ideal sits in cohomological degrees >= 1.
    bool connected() const;
};

// Strictly commutative algebra from a finite multiplication table.  A word
// of degree 0 acts as the iterated product; positive-degree words act as 0.
class CommutativeAlgebra final : public SurjAlgebra {
public:
    struct Spec {
        std::vector<std::pair<std::string, int>> basis; // name, cohomological degree
        std::string unit;
        // product of two basis names -> basis name or "0"
        std::map<std::pair<std::string, std::string>, std::string> products;
        std::map<std::string, std::string> diffs; // optional, name -> name or "0"
    };

    explicit CommutativeAlgebra(const Spec& spec); // validates at load

    int basis_size() const override { return static_cast<int>(names_.size()); }
    const std::string& basis_name(int id) const override { return names_[static_cast<size_t>(id)]; }
    int grade(int id) const override { return grades_[static_cast<size_t>(id)]; }
    std::optional<int> unit() const override { return unit_; }
    ElemSum diff(int id) const override;
    ElemSum apply(const Surjection& u, const std::vector<int>& inputs) const override;

    // Product of two basis elements (id or empty sum for 0).
    ElemSum mul(int a, int b) const;

private:
    std::vector<std::string> names_;
    std::vector<int> grades_;
    int unit_;
    std::vector<std::vector<int>> mul_;  // -1 encodes 0
    std::vector<int> diff_;              // -1 encodes 0
};

CommutativeAlgebra::Spec parse_commutative_spec(const std::string& text);
std::shared_ptr<CommutativeAlgebra> load_commutative(const std::string& path);

} // namespace barops
