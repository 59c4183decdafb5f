#pragma once

#include <map>

#include "barops/simplicial.hpp"
#include "barops/surjection.hpp"

// Reference values computed by routes independent of the code under test.
namespace oracles {

// The unique admissible word for the one-level identity pair and sizes
// (p, 1): value p+1 interleaved with 1..p.
barops::Word braces_word(int p);

// The unique admissible word for the (id, transposition) pair and sizes
// (p, q).
barops::Word e1pq_word(int p, int q);

// Homology dimensions, in degrees 0..max_deg, of the cobar construction on
// the chain coalgebra of a reduced simplicial set whose nondegenerate
// simplices above the vertex all have dimension >= 2.  Uses only the
// simplicial face machinery, no bar-construction code.
std::map<int, int> cobar_homology_dims(const barops::SimplicialSet& X, int max_deg);

// Dimension of Tor over the truncated polynomial algebra F2[x]/(x^3),
// |x| = 2, per total degree (internal degree minus homological step) up to
// max_total.  Built from the explicit two-periodic minimal resolution,
// whose exactness is verified by rank computations before use.
std::map<int, int> trunc_poly_tor_dims(int max_total);

// Parity of the shuffle multinomial (a+b choose a).
bool shuffle_binomial_odd(int a, int b);

} // namespace oracles
