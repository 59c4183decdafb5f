#include "oracles.hpp"

#include <functional>
#include <stdexcept>

#include "barops/chain.hpp"
#include "barops/errors.hpp"
#include "barops/f2linalg.hpp"

namespace oracles {

using namespace barops;

Word braces_word(int p) {
    Word w{p + 1};
    for (int k = 1; k <= p; ++k) {
        w.push_back(k);
        w.push_back(p + 1);
    }
    return w;
}

Word e1pq_word(int p, int q) {
    Word w{p + 1};
    for (int k = 1; k < p; ++k) {
        w.push_back(k);
        w.push_back(p + 1);
    }
    w.push_back(p);
    w.push_back(p + 1);
    w.push_back(p);
    for (int k = 2; k <= q; ++k) {
        w.push_back(p + k);
        w.push_back(p);
    }
    return w;
}

std::map<int, int> cobar_homology_dims(const SimplicialSet& X, int max_deg) {
    if (!X.reduced()) throw DomainError("cobar oracle needs a reduced simplicial set");
    std::vector<int> letters; // nondegenerate simplices of dimension >= 2
    for (int id = 0; id < X.count(); ++id) {
        if (X.dim(id) == 1)
            throw DomainError("cobar oracle needs all cells in dimensions >= 2");
        if (X.dim(id) >= 2) letters.push_back(id);
    }

    using CobarWord = std::vector<int>;
    auto degree = [&](const CobarWord& w) {
        int g = 0;
        for (int id : w) g += X.dim(id) - 1;
        return g;
    };

    f2::ComplexSlice<CobarWord> slice;
    for (int g = -1; g <= max_deg + 1; ++g) slice.basis[g] = {};
    CobarWord word;
    std::function<void(int)> grow = [&](int deg) {
        slice.basis[deg].push_back(word);
        for (int id : letters) {
            int g = deg + X.dim(id) - 1;
            if (g > max_deg + 1) continue;
            word.push_back(id);
            grow(g);
            word.pop_back();
        }
    };
    grow(0);
    for (auto& [g, b] : slice.basis) std::sort(b.begin(), b.end());

    const SimplicialSet* space = &X;
    slice.diff = [space](int, const CobarWord& w) {
        f2::FormalSum<CobarWord> out;
        for (size_t i = 0; i < w.size(); ++i) {
            const int id = w[i];
            const int n = space->dim(id);
            // desuspended chain differential of the letter
            for (int f = 0; f <= n; ++f) {
                SimplexRef face = space->face(SimplexRef{{}, id}, n, f);
                if (face.degenerate()) continue;
                if (space->dim(face.id) < 2)
                    throw DomainError("cobar oracle hit a low-dimensional face");
                CobarWord t = w;
                t[i] = face.id;
                out.add(t);
            }
            // splitting by the front/back diagonal of the letter
            for (int cut = 1; cut < n; ++cut) {
                std::vector<int> front_v, back_v;
                for (int v = 0; v <= cut; ++v) front_v.push_back(v);
                for (int v = cut; v <= n; ++v) back_v.push_back(v);
                SimplexRef front = space->face_by_vertices(id, front_v);
                SimplexRef back = space->face_by_vertices(id, back_v);
                if (front.degenerate() || back.degenerate()) continue;
                if (space->dim(front.id) < 2 || space->dim(back.id) < 2)
                    throw DomainError("cobar oracle hit a low-dimensional factor");
                CobarWord t;
                t.reserve(w.size() + 1);
                t.insert(t.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                t.push_back(front.id);
                t.push_back(back.id);
                t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                out.add(t);
            }
        }
        return out;
    };

    if (!f2::square_zero_check(slice, 0, max_deg + 1))
        throw DomainError("cobar differential does not square to zero");
    auto res = f2::homology_dims(slice, 0, max_deg + 1);
    std::map<int, int> dims;
    for (int g = 0; g <= max_deg; ++g) dims[g] = res.dims.at(g);
    return dims;
}

std::map<int, int> trunc_poly_tor_dims(int max_total) {
    // F_s = A<g_s> with A spanned by 1, x, x^2; d alternates *x and *x^2.
    auto step_matrix = [](int power) {
        f2::BitMatrix m(3, 3); // rows: x^i g_s -> coefficients on x^j g_{s-1}
        for (int i = 0; i < 3; ++i)
            if (i + power < 3) m.set(i, i + power, true);
        return m;
    };
    auto power_of = [](int s) { return s % 2 == 1 ? 1 : 2; };

    // generator degrees: t_0 = 0, t_s = t_{s-1} + 2*power(s)
    std::vector<int> t{0};
    while (t.back() - (static_cast<int>(t.size()) - 1) <= max_total) {
        int s = static_cast<int>(t.size());
        t.push_back(t[static_cast<size_t>(s) - 1] + 2 * power_of(s));
    }
    const int steps = static_cast<int>(t.size()) - 1;

    // exactness: rank d_s + rank d_{s+1} = dim F_s at every interior step,
    // and the augmentation kernel x*A equals the image of d_1
    std::vector<int> ranks(static_cast<size_t>(steps) + 1, 0);
    for (int s = 1; s <= steps; ++s) ranks[static_cast<size_t>(s)] = rank(step_matrix(power_of(s)));
    if (ranks[1] != 2) throw DomainError("resolution: d_1 image is not the ideal");
    for (int s = 1; s < steps; ++s) {
        // d_s d_{s+1} = 0: multiplication by x^3
        if (power_of(s) + power_of(s + 1) < 3)
            throw DomainError("resolution: composite is not zero");
        if (ranks[static_cast<size_t>(s)] + ranks[static_cast<size_t>(s) + 1] != 3)
            throw DomainError("resolution: not exact at step " + std::to_string(s));
    }

    // minimality: no unit coefficient, so Tor_s = F2<g_s> in degree t_s
    std::map<int, int> dims;
    for (int total = 0; total <= max_total; ++total) dims[total] = 0;
    for (int s = 0; s <= steps; ++s) {
        int total = t[static_cast<size_t>(s)] - s;
        if (total <= max_total) dims[total] += 1;
    }
    return dims;
}

bool shuffle_binomial_odd(int a, int b) { return (a & b) == 0; }

} // namespace oracles
