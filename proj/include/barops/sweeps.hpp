#pragma once

#include <string>
#include <vector>

namespace barops::sweeps {

struct SweepResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure; // counterexample description

    bool ok() const { return failures == 0; }
};

// Operad-level invariants: square-zero differentials, composition chain
// rules and associativity, equivariance, table round trips, diagonal
// coalgebra laws.
std::vector<SweepResult> sweep_operads(int jobs = 1);

// Table reduction: chain map, equivariance, values on the arity-2
// generators, compatibility with composition.
std::vector<SweepResult> sweep_tr();

// Bar-level invariants: degree law of admissible enumeration, bar
// differential square-zero, chain-map property of full_op, boundary
// relation of consecutive cup operations.
std::vector<SweepResult> sweep_bar();

// Coalgebra compatibility of full_op, strict associativity of cup(0),
// equivariance, shuffle reduction over a commutative instance.
std::vector<SweepResult> sweep_hopf();

std::vector<SweepResult> sweep_all(int jobs = 1);

} // namespace barops::sweeps
