#pragma once

#include <string>
#include <vector>

namespace barops {

// Permutation of {1..r} in one-line notation: p[i-1] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int r);

// Index (1-based) at which value v appears in the one-line word.
int perm_position_of(const Perm& p, int v);

// Substitutes a block for one value: every entry equal to k expands to
// q's word shifted into {k..k+s-1}, entries above k shift up by s-1.
// This is the composite of permutations seen as an operad of words.
Perm perm_block_sub(const Perm& p, int k, const Perm& q);

// Relabels values: entry v becomes sigma[v-1].
Perm perm_relabel(const Perm& sigma, const Perm& p);

std::vector<Perm> all_perms(int r);

std::string perm_to_string(const Perm& p);
Perm parse_perm(const std::string& text);

} // namespace barops
