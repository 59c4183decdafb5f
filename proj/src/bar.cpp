#include "barops/bar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

int bar_grade(const SurjAlgebra& A, const BarWord& c) {
    int g = 0;
    for (int id : c) g += A.grade(id) + 1;
    return g;
}

namespace {

void check_letters(const SurjAlgebra& A, const BarWord& c) {
    for (int id : c) {
        if (id < 0 || id >= A.basis_size()) throw DomainError("letter id out of range");
        if (A.unit() && *A.unit() == id)
            throw DomainError("bar letters live in the augmentation ideal");
    }
}

void check_not_unit(const SurjAlgebra& A, const ElemSum& x, const char* what) {
    if (A.unit() && x.contains(*A.unit()))
        throw DomainError(std::string(what) + " left the augmentation ideal");
}

} // namespace

BarSum bar_differential(const SurjAlgebra& A, const BarWord& c) {
    check_letters(A, c);
    BarSum out;
    const auto merge_word = Surjection::make({1, 2});
    for (size_t i = 0; i < c.size(); ++i) {
        ElemSum d = A.diff(c[i]);
        check_not_unit(A, d, "internal differential");
        for (int t : d) {
            BarWord w = c;
            w[i] = t;
            out.add(w);
        }
    }
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        ElemSum p = A.apply(*merge_word, {c[i], c[i + 1]});
        check_not_unit(A, p, "product of adjacent letters");
        for (int t : p) {
            BarWord w;
            w.reserve(c.size() - 1);
            w.insert(w.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            w.push_back(t);
            w.insert(w.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 2, c.end());
            out.add(w);
        }
    }
    return out;
}

BarTupleSum deconcat(const BarWord& c, int parts) {
    if (parts < 1) throw DomainError("deconcat needs at least one part");
    BarTupleSum out;
    const int len = static_cast<int>(c.size());
    std::vector<int> cuts(static_cast<size_t>(parts) + 1);
    cuts[0] = 0;
    cuts[static_cast<size_t>(parts)] = len;
    std::function<void(int)> rec = [&](int i) {
        if (i == parts) {
            std::vector<BarWord> tuple;
            tuple.reserve(static_cast<size_t>(parts));
            for (int t = 0; t < parts; ++t)
                tuple.emplace_back(c.begin() + cuts[static_cast<size_t>(t)],
                                   c.begin() + cuts[static_cast<size_t>(t) + 1]);
            out.add(tuple);
            return;
        }
        for (int v = cuts[static_cast<size_t>(i - 1)]; v <= len; ++v) {
            cuts[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

namespace {

// Backtracking over the row grammar: a row is either a fresh value followed
// by a prefix of the open values (staying in the current block) or, for a
// new block, a nonempty prefix of the open values; the last entry of a
// non-final row stays open, everything else in the row closes; the final
// row closes everything.  Prefixes are taken in the order the current level
// puts on the intervals; a fresh value for interval s requires no open value
// of interval s and that s precede the first open value's interval in the
// current level, whether or not the row goes on to consume any opens.
class AdmissibleEnum {
public:
    AdmissibleEnum(const PermSimplex& w, const std::vector<int>& sizes)
        : w_(w), sizes_(sizes), r_(w.arity()), d_(w.degree()) {
        offsets_.resize(static_cast<size_t>(r_) + 1, 0);
        for (int s = 0; s < r_; ++s)
            offsets_[static_cast<size_t>(s) + 1] =
                offsets_[static_cast<size_t>(s)] + sizes_[static_cast<size_t>(s)];
        labels_ = offsets_[static_cast<size_t>(r_)];
        next_.assign(static_cast<size_t>(r_), 1);
        open_.assign(static_cast<size_t>(r_), 0);
    }

    std::vector<Surjection> run() {
        if (labels_ == 0) return {};
        total_rows_ = labels_ + d_;
        fresh_left_ = labels_;
        rec();
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    int interval_of(int label) const {
        int s = 0;
        while (offsets_[static_cast<size_t>(s) + 1] < label) ++s;
        return s;
    }

    // position of interval s in the one-line word of the given level
    int pos(int block, int s) const {
        return perm_position_of(w_.levels()[static_cast<size_t>(block)], s + 1);
    }

    std::vector<int> opens_sorted(int block) const {
        std::vector<int> opens;
        for (int s = 0; s < r_; ++s)
            if (open_[static_cast<size_t>(s)]) opens.push_back(open_[static_cast<size_t>(s)]);
        std::sort(opens.begin(), opens.end(), [&](int a, int b) {
            return pos(block, interval_of(a)) < pos(block, interval_of(b));
        });
        return opens;
    }

    void emit_row(const std::vector<int>& row) {
        word_.insert(word_.end(), row.begin(), row.end());
        ++rows_done_;
    }

    void retract_row(size_t count) {
        word_.resize(word_.size() - count);
        --rows_done_;
    }

    void rec() {
        if (rows_done_ == total_rows_) {
            out_.push_back(*Surjection::make(word_));
            return;
        }
        const bool final_row = rows_done_ == total_rows_ - 1;
        const int prev_last = word_.empty() ? 0 : word_.back();

        // fresh-headed row in the current block
        for (int s = 0; s < r_; ++s) {
            if (next_[static_cast<size_t>(s)] > sizes_[static_cast<size_t>(s)]) continue;
            if (open_[static_cast<size_t>(s)]) continue;
            const int h = offsets_[static_cast<size_t>(s)] + next_[static_cast<size_t>(s)];
            auto opens = opens_sorted(block_);
            const int m = static_cast<int>(opens.size());
            const bool head_ok =
                m == 0 || pos(block_, s) < pos(block_, interval_of(opens[0]));
            if (!head_ok) continue;
            if (final_row) {
                if (fresh_left_ != 1) continue;
                std::vector<int> row{h};
                row.insert(row.end(), opens.begin(), opens.end());
                descend_fresh(s, row, opens, m /* all close */, true);
            } else {
                for (int l = 0; l <= m; ++l) {
                    std::vector<int> row{h};
                    row.insert(row.end(), opens.begin(), opens.begin() + l);
                    descend_fresh(s, row, opens, l, false);
                }
            }
        }

        // block-initial row
        if (block_ < d_) {
            auto opens = opens_sorted(block_ + 1);
            const int m = static_cast<int>(opens.size());
            if (m >= 1 && opens[0] != prev_last) {
                if (final_row) {
                    if (fresh_left_ == 0)
                        descend_block(std::vector<int>(opens.begin(), opens.end()), opens, m, true);
                } else {
                    for (int l = 1; l <= m; ++l)
                        descend_block(std::vector<int>(opens.begin(), opens.begin() + l), opens, l,
                                      false);
                }
            }
        }
    }

    // row = h :: opens[0..l-1]; on a final row l == m and everything closes.
    void descend_fresh(int s, const std::vector<int>& row, const std::vector<int>& opens, int l,
                       bool final_row) {
        next_[static_cast<size_t>(s)] += 1;
        fresh_left_ -= 1;
        std::vector<std::pair<int, int>> undo; // interval -> previous open label
        if (l == 0 && !final_row) {
            undo.emplace_back(s, 0);
            open_[static_cast<size_t>(s)] = row[0];
        } else {
            // h closes; opens[0..l-2] close; opens[l-1] stays open unless final
            const int upto = final_row ? l : l - 1;
            for (int i = 0; i < upto; ++i) {
                int iv = interval_of(opens[static_cast<size_t>(i)]);
                undo.emplace_back(iv, open_[static_cast<size_t>(iv)]);
                open_[static_cast<size_t>(iv)] = 0;
            }
        }
        emit_row(row);
        rec();
        retract_row(row.size());
        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            open_[static_cast<size_t>(it->first)] = it->second;
        next_[static_cast<size_t>(s)] -= 1;
        fresh_left_ += 1;
    }

    // row = opens[0..l-1] starting the next block.
    void descend_block(const std::vector<int>& row, const std::vector<int>& opens, int l,
                       bool final_row) {
        std::vector<std::pair<int, int>> undo;
        const int upto = final_row ? l : l - 1;
        for (int i = 0; i < upto; ++i) {
            int iv = interval_of(opens[static_cast<size_t>(i)]);
            undo.emplace_back(iv, open_[static_cast<size_t>(iv)]);
            open_[static_cast<size_t>(iv)] = 0;
        }
        block_ += 1;
        emit_row(row);
        rec();
        retract_row(row.size());
        block_ -= 1;
        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            open_[static_cast<size_t>(it->first)] = it->second;
    }

    const PermSimplex& w_;
    std::vector<int> sizes_;
    int r_, d_;
    std::vector<int> offsets_;
    int labels_ = 0;
    std::vector<int> next_, open_;
    int block_ = 0;
    int rows_done_ = 0, total_rows_ = 0, fresh_left_ = 0;
    Word word_;
    std::vector<Surjection> out_;
};

} // namespace

std::vector<Surjection> admissible_surjections(const PermSimplex& w,
                                               const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != w.arity())
        throw DomainError("sizes must match the arity");
    for (int n : sizes)
        if (n < 0) throw DomainError("negative size");
    return AdmissibleEnum(w, sizes).run();
}

ElemSum tilde_op(const SurjAlgebra& A, const PermSimplex& w, const std::vector<BarWord>& words) {
    if (static_cast<int>(words.size()) != w.arity())
        throw DomainError("word count must match the arity");
    std::vector<int> sizes;
    std::vector<int> inputs;
    for (const BarWord& c : words) {
        check_letters(A, c);
        sizes.push_back(static_cast<int>(c.size()));
        inputs.insert(inputs.end(), c.begin(), c.end());
    }
    ElemSum out;
    for (const Surjection& u : admissible_surjections(w, sizes)) out += A.apply(u, inputs);
    check_not_unit(A, out, "tilde operation");
    return out;
}

BarSum full_op(const SurjAlgebra& A, const PermSimplex& w, const std::vector<BarWord>& words) {
    if (static_cast<int>(words.size()) != w.arity())
        throw DomainError("word count must match the arity");
    const int r = w.arity();
    int total = 0;
    for (const BarWord& c : words) {
        check_letters(A, c);
        total += static_cast<int>(c.size());
    }
    BarSum out;
    if (total == 0) {
        // only a degree-0 operation hits the coalgebra unit (grade law)
        if (w.degree() == 0) out.add(BarWord{});
        return out;
    }
    for (int n = 1; n <= total; ++n) {
        const auto diag = iterated_diagonal(w, n);
        if (diag.empty()) continue;
        // blocks[t][k] = piece t of input word k
        std::vector<std::vector<BarWord>> blocks(static_cast<size_t>(n),
                                                 std::vector<BarWord>(static_cast<size_t>(r)));
        std::function<void(int)> split_rec = [&](int k) {
            if (k == r) {
                for (int t = 0; t < n; ++t) {
                    int sz = 0;
                    for (const auto& b : blocks[static_cast<size_t>(t)])
                        sz += static_cast<int>(b.size());
                    if (sz == 0) return; // a factor with no letters vanishes
                }
                for (const auto& factors : diag) {
                    std::vector<ElemSum> letters;
                    letters.reserve(static_cast<size_t>(n));
                    bool dead = false;
                    for (int t = 0; t < n && !dead; ++t) {
                        letters.push_back(
                            tilde_op(A, factors[static_cast<size_t>(t)], blocks[static_cast<size_t>(t)]));
                        if (letters.back().is_zero()) dead = true;
                    }
                    if (dead) continue;
                    BarWord pick(static_cast<size_t>(n));
                    std::function<void(int)> expand = [&](int t) {
                        if (t == n) {
                            out.add(pick);
                            return;
                        }
                        for (int id : letters[static_cast<size_t>(t)]) {
                            pick[static_cast<size_t>(t)] = id;
                            expand(t + 1);
                        }
                    };
                    expand(0);
                }
                return;
            }
            const BarWord& c = words[static_cast<size_t>(k)];
            const int len = static_cast<int>(c.size());
            std::vector<int> cuts(static_cast<size_t>(n) + 1);
            cuts[0] = 0;
            cuts[static_cast<size_t>(n)] = len;
            std::function<void(int)> cut_rec = [&](int i) {
                if (i == n) {
                    for (int t = 0; t < n; ++t)
                        blocks[static_cast<size_t>(t)][static_cast<size_t>(k)] =
                            BarWord(c.begin() + cuts[static_cast<size_t>(t)],
                                    c.begin() + cuts[static_cast<size_t>(t) + 1]);
                    split_rec(k + 1);
                    return;
                }
                for (int v = cuts[static_cast<size_t>(i - 1)]; v <= len; ++v) {
                    cuts[static_cast<size_t>(i)] = v;
                    cut_rec(i + 1);
                }
            };
            cut_rec(1);
        };
        split_rec(0);
    }
    return out;
}

BarSum full_op_linear(const SurjAlgebra& A, const PermSimplex& w,
                      const std::vector<BarSum>& args) {
    std::vector<BarWord> pick(args.size());
    BarSum out;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == args.size()) {
            out += full_op(A, w, pick);
            return;
        }
        for (const BarWord& c : args[i]) {
            pick[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

BarSum cup(const SurjAlgebra& A, int d, const BarWord& c1, const BarWord& c2) {
    return full_op(A, theta(d), {c1, c2});
}

f2::ComplexSlice<BarWord> bar_complex_slice(const SurjAlgebra& A, int lo, int hi,
                                            std::optional<int> max_letters) {
    if (lo > hi) throw DomainError("empty grade range");
    if (!A.connected())
        throw DomainError("bar complex needs a connected algebra "
                          "(unit plus ideal in cohomological degrees >= 1)");
    const auto ideal = A.ideal_basis();
    bool has_flat = false;
    for (int id : ideal)
        if (A.grade(id) + 1 == 0) has_flat = true;
    if (has_flat && !max_letters)
        throw DomainError("grade levels are infinite (a letter contributes grade 0); "
                          "pass a letter bound");

    f2::ComplexSlice<BarWord> slice;
    for (int g = lo - 1; g <= hi + 1; ++g) slice.basis[g] = {};
    BarWord word;
    std::function<void(int)> rec = [&](int grade) {
        if (grade >= lo - 1 && grade <= hi + 1)
            slice.basis[grade].push_back(word);
        if (max_letters && static_cast<int>(word.size()) >= *max_letters) return;
        for (int id : ideal) {
            int g = grade + A.grade(id) + 1;
            if (g < lo - 1) continue;
            word.push_back(id);
            rec(g);
            word.pop_back();
        }
    };
    rec(0);
    for (auto& [g, basis] : slice.basis) std::sort(basis.begin(), basis.end());

    const SurjAlgebra* alg = &A; // caller keeps the algebra alive
    slice.diff = [alg](int, const BarWord& c) { return bar_differential(*alg, c); };
    return slice;
}

std::string bar_word_to_string(const SurjAlgebra& A, const BarWord& c) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << '|';
        os << A.basis_name(c[i]);
    }
    os << ']';
    return os.str();
}

BarWord parse_bar_word(const SurjAlgebra& A, const std::string& text) {
    std::string t = text;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    t = strip(t);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("bar words look like [a|b|c]: " + text);
    t = t.substr(1, t.size() - 2);
    BarWord out;
    if (strip(t).empty()) return out;
    size_t start = 0;
    while (start <= t.size()) {
        size_t bar = t.find('|', start);
        std::string part =
            bar == std::string::npos ? t.substr(start) : t.substr(start, bar - start);
        part = strip(part);
        if (part.empty()) throw ParseError("empty letter in bar word: " + text);
        out.push_back(A.id_of(part));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    check_letters(A, out);
    return out;
}

std::string bar_sum_to_string(const SurjAlgebra& A, const BarSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const BarWord& c : s) {
        if (!first) os << " + ";
        first = false;
        os << bar_word_to_string(A, c);
    }
    return os.str();
}

} // namespace barops
