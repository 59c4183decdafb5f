#include "barops/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<size_t>(v - 1)])
            return false;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return !p.empty();
}

Perm identity_perm(int r) {
    Perm p(static_cast<size_t>(r));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

int perm_position_of(const Perm& p, int v) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[static_cast<size_t>(i)] == v) return i + 1;
    throw DomainError("value not in permutation");
}

Perm perm_block_sub(const Perm& p, int k, const Perm& q) {
    const int s = static_cast<int>(q.size());
    Perm out;
    out.reserve(p.size() + q.size() - 1);
    for (int v : p) {
        if (v < k)
            out.push_back(v);
        else if (v == k)
            for (int w : q) out.push_back(w + k - 1);
        else
            out.push_back(v + s - 1);
    }
    return out;
}

Perm perm_relabel(const Perm& sigma, const Perm& p) {
    Perm out;
    out.reserve(p.size());
    for (int v : p) out.push_back(sigma[static_cast<size_t>(v - 1)]);
    return out;
}

std::vector<Perm> all_perms(int r) {
    Perm p = identity_perm(r);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_to_string(const Perm& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i];
    }
    return os.str();
}

Perm parse_perm(const std::string& text) {
    std::istringstream is(text);
    Perm p;
    int v;
    while (is >> v) p.push_back(v);
    if (!is.eof()) throw ParseError("bad permutation: " + text);
    if (!is_permutation(p)) throw ParseError("not a permutation of 1..r: " + text);
    return p;
}

} // namespace barops
