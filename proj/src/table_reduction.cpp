#include "barops/table_reduction.hpp"

#include <functional>

#include "barops/errors.hpp"

namespace barops {

SurjectionSum table_reduction(const PermSimplex& x) {
    const int r = x.arity();
    const int d = x.degree();
    const auto& levels = x.levels();
    SurjectionSum out;

    // One term per composition r+d = r_0+...+r_d with every r_i >= 1.
    std::vector<int> parts(static_cast<size_t>(d) + 1, 0);
    std::vector<bool> closed(static_cast<size_t>(r) + 1, false);
    Word word;
    word.reserve(static_cast<size_t>(r + d));

    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == d) {
            // final row: everything not closed, in the order of the last level
            if (remaining < 1) return;
            Word w = word;
            int taken = 0;
            for (int v : levels[static_cast<size_t>(d)])
                if (!closed[static_cast<size_t>(v)]) {
                    w.push_back(v);
                    ++taken;
                }
            if (taken != remaining) return; // composition does not fit
            if (auto su = Surjection::make(std::move(w))) out.add(*su);
            return;
        }
        // row takes r_row >= 1 entries, leaving at least 1 for each later row
        const int max_take = remaining - (d - row);
        const Perm& level = levels[static_cast<size_t>(row)];
        for (int take = 1; take <= max_take; ++take) {
            // scan the level, skipping closed values, writing `take` entries;
            // all but the last close, the last stays open as the caesura
            Word added;
            std::vector<int> newly_closed;
            for (int v : level) {
                if (closed[static_cast<size_t>(v)]) continue;
                added.push_back(v);
                if (static_cast<int>(added.size()) == take) break;
            }
            if (static_cast<int>(added.size()) < take) continue;
            for (size_t i = 0; i + 1 < added.size(); ++i) {
                closed[static_cast<size_t>(added[i])] = true;
                newly_closed.push_back(added[i]);
            }
            size_t base = word.size();
            word.insert(word.end(), added.begin(), added.end());
            rec(row + 1, remaining - take);
            word.resize(base);
            for (int v : newly_closed) closed[static_cast<size_t>(v)] = false;
        }
    };
    rec(0, r + d);
    return out;
}

} // namespace barops
