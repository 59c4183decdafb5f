#include "barops/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

int SurjAlgebra::id_of(const std::string& name) const {
    for (int i = 0; i < basis_size(); ++i)
        if (basis_name(i) == name) return i;
    throw ParseError("unknown basis element: " + name);
}

ElemSum SurjAlgebra::diff_linear(const ElemSum& x) const {
    return x.mapped([&](int id) { return diff(id); });
}

ElemSum SurjAlgebra::apply_linear(const Surjection& u, const std::vector<ElemSum>& inputs) const {
    std::vector<int> pick(inputs.size(), 0);
    ElemSum out;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == inputs.size()) {
            out += apply(u, pick);
            return;
        }
        for (int id : inputs[i]) {
            pick[i] = id;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<int> SurjAlgebra::ideal_basis() const {
    std::vector<int> out;
    for (int i = 0; i < basis_size(); ++i)
        if (!unit() || *unit() != i) out.push_back(i);
    return out;
}

bool SurjAlgebra::connected() const {
    if (!unit()) return false;
    for (int i : ideal_basis())
        if (grade(i) > -1) return false;
    return true;
}

CommutativeAlgebra::CommutativeAlgebra(const Spec& spec) {
    for (const auto& [name, cohom_deg] : spec.basis) {
        for (const auto& n : names_)
            if (n == name) throw DomainError("duplicate basis name: " + name);
        names_.push_back(name);
        grades_.push_back(-cohom_deg);
    }
    const int n = static_cast<int>(names_.size());
    if (n == 0) throw DomainError("empty basis");

    auto find = [&](const std::string& name) -> int {
        for (int i = 0; i < n; ++i)
            if (names_[static_cast<size_t>(i)] == name) return i;
        throw DomainError("unknown basis element: " + name);
    };
    unit_ = find(spec.unit);
    if (grades_[static_cast<size_t>(unit_)] != 0)
        throw DomainError("unit must sit in degree 0");

    mul_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -2));
    for (const auto& [key, val] : spec.products) {
        int a = find(key.first), b = find(key.second);
        int c = val == "0" ? -1 : find(val);
        if (mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] != -2 &&
            mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] != c)
            throw DomainError("conflicting products for " + key.first + " " + key.second);
        mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] = c; // symmetry below
        mul_[static_cast<size_t>(b)][static_cast<size_t>(a)] = c;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] == -2)
                throw DomainError("unspecified product: " + names_[static_cast<size_t>(a)] +
                                  " " + names_[static_cast<size_t>(b)]);

    diff_.assign(static_cast<size_t>(n), -1);
    for (const auto& [a, b] : spec.diffs)
        diff_[static_cast<size_t>(find(a))] = b == "0" ? -1 : find(b);

    // unit neutral
    for (int a = 0; a < n; ++a)
        if (mul_[static_cast<size_t>(unit_)][static_cast<size_t>(a)] != a)
            throw DomainError("unit is not neutral on " + names_[static_cast<size_t>(a)]);
    // grading of products
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = mul_[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (c >= 0 && grades_[static_cast<size_t>(c)] !=
                              grades_[static_cast<size_t>(a)] + grades_[static_cast<size_t>(b)])
                throw DomainError("product breaks the grading: " + names_[static_cast<size_t>(a)] +
                                  " " + names_[static_cast<size_t>(b)]);
        }
    // associativity on all triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = mul_[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int bc = mul_[static_cast<size_t>(b)][static_cast<size_t>(c)];
                int left = ab < 0 ? -1 : mul_[static_cast<size_t>(ab)][static_cast<size_t>(c)];
                int right = bc < 0 ? -1 : mul_[static_cast<size_t>(a)][static_cast<size_t>(bc)];
                if (left != right)
                    throw DomainError("associativity fails on " + names_[static_cast<size_t>(a)] +
                                      " " + names_[static_cast<size_t>(b)] + " " +
                                      names_[static_cast<size_t>(c)]);
            }
    // the ideal is closed under products (no product of non-units hits the unit)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != unit_ && b != unit_ &&
                mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] == unit_)
                throw DomainError("product of ideal elements hits the unit");
    // differential: degree -1 and square zero
    for (int a = 0; a < n; ++a) {
        int da = diff_[static_cast<size_t>(a)];
        if (da >= 0) {
            if (grades_[static_cast<size_t>(da)] != grades_[static_cast<size_t>(a)] - 1)
                throw DomainError("differential breaks the grading on " +
                                  names_[static_cast<size_t>(a)]);
            if (diff_[static_cast<size_t>(da)] >= 0)
                throw DomainError("differential does not square to zero on " +
                                  names_[static_cast<size_t>(a)]);
        }
    }
    // Leibniz rule: d(ab) = da*b + a*db over F2; every term is a single basis
    // element or zero, so tally the three contributions and cancel pairs
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> sum;
            auto toggle = [&](int x) {
                if (x < 0) return;
                auto it = std::find(sum.begin(), sum.end(), x);
                if (it == sum.end())
                    sum.push_back(x);
                else
                    sum.erase(it);
            };
            int ab = mul_[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (ab >= 0) toggle(diff_[static_cast<size_t>(ab)]);
            int da = diff_[static_cast<size_t>(a)];
            if (da >= 0) toggle(mul_[static_cast<size_t>(da)][static_cast<size_t>(b)]);
            int db = diff_[static_cast<size_t>(b)];
            if (db >= 0) toggle(mul_[static_cast<size_t>(a)][static_cast<size_t>(db)]);
            if (!sum.empty())
                throw DomainError("Leibniz rule fails on " + names_[static_cast<size_t>(a)] +
                                  " " + names_[static_cast<size_t>(b)]);
        }
}

ElemSum CommutativeAlgebra::diff(int id) const {
    ElemSum out;
    int d = diff_[static_cast<size_t>(id)];
    if (d >= 0) out.add(d);
    return out;
}

ElemSum CommutativeAlgebra::mul(int a, int b) const {
    ElemSum out;
    int c = mul_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    if (c >= 0) out.add(c);
    return out;
}

ElemSum CommutativeAlgebra::apply(const Surjection& u, const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != u.arity())
        throw DomainError("input count must match the arity");
    ElemSum out;
    if (u.degree() != 0) return out; // positive-degree words act as zero
    int acc = inputs[0];
    // a degree-0 word visits each value once; fold in word order
    for (size_t i = 1; i < u.word().size(); ++i) {
        int next = inputs[static_cast<size_t>(u.word()[i] - 1)];
        int prod = mul_[static_cast<size_t>(acc)][static_cast<size_t>(next)];
        if (prod < 0) return out;
        acc = prod;
    }
    out.add(acc);
    return out;
}

CommutativeAlgebra::Spec parse_commutative_spec(const std::string& text) {
    CommutativeAlgebra::Spec spec;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        auto fail = [&](const std::string& why) -> ParseError {
            return ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (head == "basis") {
            std::string tok;
            while (ls >> tok) {
                size_t colon = tok.rfind(':');
                if (colon == std::string::npos || colon + 1 == tok.size())
                    throw fail("basis entries look like name:degree");
                int deg;
                try {
                    deg = std::stoi(tok.substr(colon + 1));
                } catch (const std::exception&) {
                    throw fail("bad degree in " + tok);
                }
                spec.basis.emplace_back(tok.substr(0, colon), deg);
            }
        } else if (head == "unit") {
            if (!(ls >> spec.unit)) throw fail("unit needs a name");
        } else if (head == "mul") {
            std::string a, b, eq, c;
            if (!(ls >> a >> b >> eq >> c) || eq != "=") throw fail("mul lines look like: mul a b = c");
            spec.products[{a, b}] = c;
        } else if (head == "diff") {
            std::string a, eq, b;
            if (!(ls >> a >> eq >> b) || eq != "=") throw fail("diff lines look like: diff a = b");
            spec.diffs[a] = b;
        } else {
            throw fail("unknown directive: " + head);
        }
    }
    return spec;
}

std::shared_ptr<CommutativeAlgebra> load_commutative(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return std::make_shared<CommutativeAlgebra>(parse_commutative_spec(buf.str()));
}

} // namespace barops
