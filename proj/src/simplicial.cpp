#include "barops/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

namespace {

// Prepends s_j to a normal-form degeneracy word (strictly decreasing),
// renormalizing with s_i s_j = s_{j+1} s_i for i <= j.
std::vector<int> push_degeneracy(int j, std::vector<int> word) {
    std::vector<int> out;
    size_t k = 0;
    int a = j;
    while (k < word.size() && a <= word[k]) {
        out.push_back(word[k] + 1);
        ++k;
    }
    out.push_back(a);
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
    return out;
}

} // namespace

SimplicialSet::SimplicialSet(std::vector<SimplexData> simplices, bool reduced)
    : simplices_(std::move(simplices)), reduced_(reduced), max_dim_(0) {
    const int n = count();
    if (n == 0) throw DomainError("empty simplicial set");
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
        const auto& s = simplices_[static_cast<size_t>(i)];
        if (s.dim < 0) throw DomainError("negative dimension: " + s.name);
        if (seen.count(s.name)) throw DomainError("duplicate simplex name: " + s.name);
        seen[s.name] = i;
        max_dim_ = std::max(max_dim_, s.dim);
        if (static_cast<int>(s.faces.size()) != (s.dim == 0 ? 0 : s.dim + 1))
            throw DomainError("simplex " + s.name + " needs " + std::to_string(s.dim + 1) +
                              " faces");
        for (const auto& f : s.faces) {
            if (f.id < 0 || f.id >= n) throw DomainError("face out of range in " + s.name);
            int fdim = static_cast<int>(f.degens.size()) + dim(f.id);
            if (fdim != s.dim - 1)
                throw DomainError("face of " + s.name + " has dimension " +
                                  std::to_string(fdim) + ", expected " +
                                  std::to_string(s.dim - 1));
            for (size_t k = 0; k < f.degens.size(); ++k) {
                if (f.degens[k] < 0 || (k + 1 < f.degens.size() && f.degens[k] <= f.degens[k + 1]))
                    throw DomainError("degeneracy word in " + s.name + " is not normal form");
            }
            if (!f.degens.empty() && f.degens.front() > s.dim - 2)
                throw DomainError("degeneracy index out of range in " + s.name);
        }
    }
    if (reduced_) {
        int vertices = 0;
        for (int i = 0; i < n; ++i)
            if (dim(i) == 0) ++vertices;
        if (vertices != 1) throw DomainError("a reduced simplicial set has exactly one vertex");
    }
    // simplicial identities d_i d_j = d_{j-1} d_i for i < j
    for (int id = 0; id < n; ++id) {
        const int m = dim(id);
        if (m < 2) continue;
        SimplexRef self{{}, id};
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef a = face(face(self, m, j), m - 1, i);
                SimplexRef b = face(face(self, m, i), m - 1, j - 1);
                if (!(a == b))
                    throw DomainError("face identities fail on " + name(id) + " at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
}

int SimplicialSet::id_of(const std::string& nm) const {
    for (int i = 0; i < count(); ++i)
        if (name(i) == nm) return i;
    throw ParseError("unknown simplex: " + nm);
}

std::vector<int> SimplicialSet::simplices_of_dim(int n) const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (dim(i) == n) out.push_back(i);
    return out;
}

SimplexRef SimplicialSet::face(const SimplexRef& x, int d, int i) const {
    if (i < 0 || i > d) throw DomainError("face index out of range");
    if (x.degens.empty()) {
        if (d == 0) throw DomainError("a vertex has no faces");
        return simplices_[static_cast<size_t>(x.id)].faces[static_cast<size_t>(i)];
    }
    const int j = x.degens.front();
    SimplexRef inner{{x.degens.begin() + 1, x.degens.end()}, x.id};
    if (i == j || i == j + 1) return inner;
    if (i < j) {
        SimplexRef f = face(inner, d - 1, i);
        return SimplexRef{push_degeneracy(j - 1, std::move(f.degens)), f.id};
    }
    SimplexRef f = face(inner, d - 1, i - 1);
    return SimplexRef{push_degeneracy(j, std::move(f.degens)), f.id};
}

SimplexRef SimplicialSet::face_by_vertices(int id, const std::vector<int>& vertices) const {
    const int n = dim(id);
    if (vertices.empty()) throw DomainError("empty vertex set");
    std::vector<bool> keep(static_cast<size_t>(n) + 1, false);
    for (int v : vertices) {
        if (v < 0 || v > n) throw DomainError("vertex out of range");
        keep[static_cast<size_t>(v)] = true;
    }
    SimplexRef ref{{}, id};
    int d = n;
    for (int i = n; i >= 0; --i) {
        if (!keep[static_cast<size_t>(i)]) {
            ref = face(ref, d, i);
            --d;
        }
    }
    return ref;
}

namespace {

bool is_degeneracy_token(const std::string& tok) {
    if (tok.empty() || tok[0] != 's' || tok.size() < 2) return false;
    size_t i = 0;
    while (i < tok.size()) {
        if (tok[i] != 's') return false;
        ++i;
        if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    }
    return true;
}

std::vector<int> parse_degeneracy_token(const std::string& tok) {
    std::vector<int> raw;
    size_t i = 0;
    while (i < tok.size()) {
        ++i; // consume 's'
        size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        raw.push_back(std::stoi(tok.substr(start, i - start)));
    }
    // normalize written order (outermost first) into the normal form
    std::vector<int> word;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) word = push_degeneracy(*it, std::move(word));
    return word;
}

} // namespace

std::shared_ptr<SimplicialSet> parse_simplicial_set(const std::string& text) {
    std::vector<SimplicialSet::SimplexData> simplices;
    std::map<std::string, int> ids;
    bool reduced = false;

    // first pass: collect names and dimensions so faces can refer forward
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head) || head[0] == '#') continue;
            if (head == "simplex") {
                std::string name, kw;
                int n;
                if (!(ls >> name >> kw >> n) || kw != "dim")
                    throw ParseError("simplex lines look like: simplex name dim n");
                if (is_degeneracy_token(name))
                    throw ParseError("simplex name looks like a degeneracy word: " + name);
                if (ids.count(name)) throw ParseError("duplicate simplex: " + name);
                ids[name] = static_cast<int>(simplices.size());
                simplices.push_back({name, n, {}});
            }
        }
    }

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int current = -1;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        auto fail = [&](const std::string& why) -> ParseError {
            return ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (head == "reduced") {
            reduced = true;
        } else if (head == "simplex") {
            std::string name, kw;
            int n;
            ls >> name >> kw >> n;
            current = ids.at(name);
        } else if (head == "faces") {
            if (current < 0) throw fail("faces before any simplex");
            auto& sx = simplices[static_cast<size_t>(current)];
            if (!sx.faces.empty()) throw fail("duplicate faces for " + sx.name);
            std::vector<std::string> toks;
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            size_t i = 0;
            while (i < toks.size()) {
                SimplexRef ref;
                if (is_degeneracy_token(toks[i]) && i + 1 < toks.size()) {
                    ref.degens = parse_degeneracy_token(toks[i]);
                    ++i;
                }
                auto it = ids.find(toks[i]);
                if (it == ids.end()) throw fail("unknown simplex in faces: " + toks[i]);
                ref.id = it->second;
                ++i;
                sx.faces.push_back(std::move(ref));
            }
        } else {
            throw fail("unknown directive: " + head);
        }
    }
    return std::make_shared<SimplicialSet>(std::move(simplices), reduced);
}

std::shared_ptr<SimplicialSet> load_simplicial_set(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_simplicial_set(buf.str());
}

CochainAlgebra::CochainAlgebra(std::shared_ptr<const SimplicialSet> space)
    : space_(std::move(space)) {
    if (space_->reduced()) {
        for (int i = 0; i < space_->count(); ++i)
            if (space_->dim(i) == 0) unit_ = i;
    }
}

ElemSum CochainAlgebra::diff(int id) const {
    const int m = space_->dim(id);
    ElemSum out;
    for (int tau : space_->simplices_of_dim(m + 1)) {
        int cnt = 0;
        SimplexRef self{{}, tau};
        for (int i = 0; i <= m + 1; ++i) {
            SimplexRef f = space_->face(self, m + 1, i);
            if (!f.degenerate() && f.id == id) ++cnt;
        }
        if (cnt % 2) out.add(tau);
    }
    return out;
}

bool CochainAlgebra::interval_cut_coefficient(const Surjection& u, const std::vector<int>& inputs,
                                              int simplex) const {
    const Word& w = u.word();
    const int L = static_cast<int>(w.size());
    const int n = space_->dim(simplex);
    const int r = u.arity();

    bool total = false;
    std::vector<int> cuts(static_cast<size_t>(L) + 1);
    cuts[0] = 0;
    cuts[static_cast<size_t>(L)] = n;
    std::function<void(int)> rec = [&](int i) {
        if (i == L) {
            // vertex set per value
            std::vector<std::vector<int>> vertices(static_cast<size_t>(r));
            for (int j = 0; j < L; ++j) {
                auto& vs = vertices[static_cast<size_t>(w[static_cast<size_t>(j)] - 1)];
                for (int v = cuts[static_cast<size_t>(j)]; v <= cuts[static_cast<size_t>(j) + 1]; ++v)
                    if (vs.empty() || vs.back() != v) vs.push_back(v);
            }
            bool coeff = true;
            for (int k = 0; k < r && coeff; ++k) {
                const auto& vs = vertices[static_cast<size_t>(k)];
                const int want = space_->dim(inputs[static_cast<size_t>(k)]);
                if (static_cast<int>(vs.size()) != want + 1) {
                    coeff = false;
                    break;
                }
                SimplexRef f = space_->face_by_vertices(simplex, vs);
                if (f.degenerate() || f.id != inputs[static_cast<size_t>(k)]) coeff = false;
            }
            if (coeff) total = !total;
            return;
        }
        for (int c = cuts[static_cast<size_t>(i - 1)]; c <= n; ++c) {
            cuts[static_cast<size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(1);
    return total;
}

ElemSum CochainAlgebra::apply(const Surjection& u, const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != u.arity())
        throw DomainError("input count must match the arity");
    int cohom_out = 0;
    for (int id : inputs) cohom_out += space_->dim(id);
    cohom_out -= u.degree();
    ElemSum out;
    if (cohom_out < 0 || cohom_out > space_->max_dim()) return out;
    for (int sx : space_->simplices_of_dim(cohom_out))
        if (interval_cut_coefficient(u, inputs, sx)) out.add(sx);
    return out;
}

f2::ComplexSlice<int> CochainAlgebra::cochain_slice() const {
    f2::ComplexSlice<int> slice;
    for (int g = -space_->max_dim() - 1; g <= 1; ++g) slice.basis[g] = {};
    for (int m = 0; m <= space_->max_dim(); ++m) slice.basis[-m] = space_->simplices_of_dim(m);
    auto self = space_;
    auto alg = std::make_shared<CochainAlgebra>(self);
    slice.diff = [alg](int, int id) { return alg->diff(id); };
    return slice;
}

} // namespace barops
