#include "barops/surjection.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "barops/errors.hpp"

namespace barops {

namespace {

bool has_adjacent_repeat(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return true;
    return false;
}

// Arity of a word covering {1..max}; 0 when some value is missing.
int covered_arity(const Word& w) {
    int r = 0;
    for (int v : w) r = std::max(r, v);
    std::vector<bool> seen(static_cast<size_t>(r), false);
    for (int v : w) {
        if (v < 1) return 0;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    for (bool b : seen)
        if (!b) return 0;
    return r;
}

} // namespace

std::optional<Surjection> Surjection::make(Word w) {
    if (w.empty()) throw DomainError("empty word");
    int r = covered_arity(w);
    if (r == 0) throw DomainError("word is not surjective onto 1..r: " + word_to_string(w));
    if (has_adjacent_repeat(w)) return std::nullopt;
    return Surjection(std::move(w), r);
}

SurjectionSum differential(const Surjection& u) {
    const Word& w = u.word();
    SurjectionSum out;
    for (size_t i = 0; i < w.size(); ++i) {
        Word v;
        v.reserve(w.size() - 1);
        for (size_t j = 0; j < w.size(); ++j)
            if (j != i) v.push_back(w[j]);
        if (has_adjacent_repeat(v) || covered_arity(v) != u.arity()) continue;
        out.add(*Surjection::make(std::move(v)));
    }
    return out;
}

Table table_arrangement(const Surjection& u) {
    const Word& w = u.word();
    std::vector<int> last(static_cast<size_t>(u.arity()), 0);
    for (size_t i = 0; i < w.size(); ++i)
        last[static_cast<size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    Table t;
    Word row;
    for (size_t i = 0; i < w.size(); ++i) {
        row.push_back(w[i]);
        bool final_occurrence = last[static_cast<size_t>(w[i] - 1)] == static_cast<int>(i) + 1;
        if (!final_occurrence) {
            t.caesuras.push_back(static_cast<int>(i) + 1);
            t.rows.push_back(std::move(row));
            row.clear();
        }
    }
    t.rows.push_back(std::move(row)); // final row, never empty
    return t;
}

SurjectionSum compose(const Surjection& u, int slot, const Surjection& v) {
    if (slot < 1 || slot > u.arity())
        throw DomainError("slot out of range");
    const Word& uw = u.word();
    const Word& vw = v.word();
    const int s = v.arity();
    const int lv = static_cast<int>(vw.size());
    int t = 0;
    for (int a : uw)
        if (a == slot) ++t;

    SurjectionSum out;
    // cuts[i] for i in 0..t with cuts[0] = 1, cuts[t] = lv, weakly increasing;
    // piece i is vw[cuts[i-1]..cuts[i]] inclusive (1-based).
    std::vector<int> cuts(static_cast<size_t>(t) + 1);
    cuts[0] = 1;
    cuts[static_cast<size_t>(t)] = lv;
    std::function<void(int)> rec = [&](int i) {
        if (i == t) {
            Word w;
            int occ = 0;
            for (int a : uw) {
                if (a < slot)
                    w.push_back(a);
                else if (a > slot)
                    w.push_back(a + s - 1);
                else {
                    for (int j = cuts[static_cast<size_t>(occ)]; j <= cuts[static_cast<size_t>(occ) + 1]; ++j)
                        w.push_back(vw[static_cast<size_t>(j - 1)] + slot - 1);
                    ++occ;
                }
            }
            if (auto su = Surjection::make(std::move(w))) out.add(*su);
            return;
        }
        for (int c = cuts[static_cast<size_t>(i - 1)]; c <= lv; ++c) {
            cuts[static_cast<size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

Surjection permute(const Perm& sigma, const Surjection& u) {
    if (static_cast<int>(sigma.size()) != u.arity())
        throw DomainError("permutation arity mismatch");
    Word w;
    w.reserve(u.word().size());
    for (int v : u.word()) w.push_back(sigma[static_cast<size_t>(v - 1)]);
    return *Surjection::make(std::move(w));
}

Perm block_permutation(const Perm& sigma, int value, int block_size) {
    return perm_block_sub(sigma, value, identity_perm(block_size));
}

std::vector<Surjection> all_surjections(int arity, int degree) {
    std::vector<Surjection> out;
    const int len = arity + degree;
    if (len < arity || arity < 1) return out;
    Word w;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == len) {
            if (covered_arity(w) == arity) out.push_back(*Surjection::make(w));
            return;
        }
        for (int v = 1; v <= arity; ++v) {
            if (!w.empty() && w.back() == v) continue;
            // remaining positions must still be able to cover missing values
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad word entry: " + tok);
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw ParseError("bad word entry: " + tok);
        w.push_back(v);
    }
    if (w.empty()) throw ParseError("empty word: " + text);
    return w;
}

std::string surjection_sum_to_string(const SurjectionSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Surjection& u : s) { // terms are kept sorted by word
        if (!first) os << " + ";
        os << word_to_string(u.word());
        first = false;
    }
    return os.str();
}

std::string table_to_string(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) os << " ; ";
        os << word_to_string(t.rows[i]);
    }
    return os.str();
}

} // namespace barops
