#include "barops/barratt_eccles.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

namespace {

bool has_adjacent_repeat(const std::vector<Perm>& ls) {
    for (size_t i = 1; i < ls.size(); ++i)
        if (ls[i] == ls[i - 1]) return true;
    return false;
}

} // namespace

std::optional<PermSimplex> PermSimplex::make(std::vector<Perm> levels) {
    if (levels.empty()) throw DomainError("no levels");
    const size_t r = levels.front().size();
    for (const Perm& p : levels) {
        if (p.size() != r || !is_permutation(p))
            throw DomainError("levels must be permutations of a common 1..r");
    }
    if (has_adjacent_repeat(levels)) return std::nullopt;
    return PermSimplex(std::move(levels), static_cast<int>(r));
}

PermSimplex theta(int d) {
    if (d < 0) throw DomainError("negative degree");
    std::vector<Perm> ls;
    for (int i = 0; i <= d; ++i)
        ls.push_back(i % 2 == 0 ? Perm{1, 2} : Perm{2, 1});
    return *PermSimplex::make(std::move(ls));
}

PermSimplexSum differential(const PermSimplex& x) {
    const auto& ls = x.levels();
    PermSimplexSum out;
    if (ls.size() == 1) return out;
    for (size_t i = 0; i < ls.size(); ++i) {
        std::vector<Perm> sub;
        sub.reserve(ls.size() - 1);
        for (size_t j = 0; j < ls.size(); ++j)
            if (j != i) sub.push_back(ls[j]);
        if (auto y = PermSimplex::make(std::move(sub))) out.add(*y);
    }
    return out;
}

PermSimplexPairSum diagonal(const PermSimplex& x) {
    const auto& ls = x.levels();
    const int d = x.degree();
    PermSimplexPairSum out;
    for (int i = 0; i <= d; ++i) {
        auto front = PermSimplex::make({ls.begin(), ls.begin() + i + 1});
        auto back = PermSimplex::make({ls.begin() + i, ls.end()});
        if (front && back) out.add({*front, *back});
    }
    return out;
}

std::vector<std::vector<PermSimplex>> iterated_diagonal(const PermSimplex& x, int n) {
    if (n < 1) throw DomainError("diagonal iterate needs n >= 1");
    const auto& ls = x.levels();
    const int d = x.degree();
    std::vector<std::vector<PermSimplex>> out;
    std::vector<int> cuts(static_cast<size_t>(n) + 1);
    cuts[0] = 0;
    cuts[static_cast<size_t>(n)] = d;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<PermSimplex> factors;
            factors.reserve(static_cast<size_t>(n));
            for (int t = 0; t < n; ++t) {
                auto f = PermSimplex::make(
                    {ls.begin() + cuts[static_cast<size_t>(t)],
                     ls.begin() + cuts[static_cast<size_t>(t) + 1] + 1});
                if (!f) return;
                factors.push_back(std::move(*f));
            }
            out.push_back(std::move(factors));
            return;
        }
        for (int c = cuts[static_cast<size_t>(i - 1)]; c <= d; ++c) {
            cuts[static_cast<size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

PermSimplexSum compose(const PermSimplex& x, int slot, const PermSimplex& y) {
    if (slot < 1 || slot > x.arity())
        throw DomainError("slot out of range");
    const int p = x.degree();
    const int q = y.degree();
    PermSimplexSum out;
    // monotone paths from (0,0) to (p,q), each step +1 in one coordinate
    std::vector<std::pair<int, int>> path{{0, 0}};
    std::function<void()> rec = [&]() {
        auto [i, j] = path.back();
        if (i == p && j == q) {
            std::vector<Perm> ls;
            ls.reserve(path.size());
            for (auto [a, b] : path)
                ls.push_back(perm_block_sub(x.levels()[static_cast<size_t>(a)], slot,
                                            y.levels()[static_cast<size_t>(b)]));
            if (auto z = PermSimplex::make(std::move(ls))) out.add(*z);
            return;
        }
        if (i < p) {
            path.emplace_back(i + 1, j);
            rec();
            path.pop_back();
        }
        if (j < q) {
            path.emplace_back(i, j + 1);
            rec();
            path.pop_back();
        }
    };
    rec();
    return out;
}

PermSimplex permute(const Perm& sigma, const PermSimplex& x) {
    if (static_cast<int>(sigma.size()) != x.arity())
        throw DomainError("permutation arity mismatch");
    std::vector<Perm> ls;
    ls.reserve(x.levels().size());
    for (const Perm& p : x.levels()) ls.push_back(perm_relabel(sigma, p));
    return *PermSimplex::make(std::move(ls));
}

std::vector<PermSimplex> all_perm_simplices(int arity, int degree) {
    std::vector<PermSimplex> out;
    if (arity < 1 || degree < 0) return out;
    const auto perms = all_perms(arity);
    std::vector<Perm> ls;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(ls.size()) == degree + 1) {
            out.push_back(*PermSimplex::make(ls));
            return;
        }
        for (const Perm& p : perms) {
            if (!ls.empty() && ls.back() == p) continue;
            ls.push_back(p);
            rec();
            ls.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::string perm_simplex_to_string(const PermSimplex& x) {
    std::ostringstream os;
    const auto& ls = x.levels();
    for (size_t i = 0; i < ls.size(); ++i) {
        if (i) os << " | ";
        os << perm_to_string(ls[i]);
    }
    return os.str();
}

PermSimplex parse_perm_simplex(const std::string& text) {
    std::vector<Perm> ls;
    size_t start = 0;
    while (start <= text.size()) {
        size_t bar = text.find('|', start);
        std::string part =
            bar == std::string::npos ? text.substr(start) : text.substr(start, bar - start);
        ls.push_back(parse_perm(part));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    auto x = PermSimplex::make(std::move(ls));
    if (!x) throw DomainError("tuple has equal adjacent levels (represents zero)");
    return *x;
}

std::string perm_simplex_sum_to_string(const PermSimplexSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const PermSimplex& x : s) {
        if (!first) os << " + ";
        os << perm_simplex_to_string(x);
        first = false;
    }
    return os.str();
}

std::string perm_simplex_pair_sum_to_string(const PermSimplexPairSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : s) {
        if (!first) os << " + ";
        os << perm_simplex_to_string(a) << " (x) " << perm_simplex_to_string(b);
        first = false;
    }
    return os.str();
}

} // namespace barops
