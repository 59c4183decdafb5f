#include "barops/sweeps.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "barops/bar.hpp"
#include "barops/barratt_eccles.hpp"
#include "barops/builtin.hpp"
#include "barops/simplicial.hpp"
#include "barops/surjection.hpp"
#include "barops/table_reduction.hpp"

namespace barops::sweeps {

namespace {

class Check {
public:
    explicit Check(std::string name) { res_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++res_.checks;
        if (!ok) {
            ++res_.failures;
            if (res_.first_failure.empty()) res_.first_failure = describe();
        }
    }

    SweepResult take() { return std::move(res_); }

private:
    SweepResult res_;
};

template <class F>
void parallel_for(int jobs, int n, F&& f) {
    if (jobs <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    for (auto& th : pool) th.join();
}

SurjectionSum diff_linear(const SurjectionSum& s) {
    return s.mapped([](const Surjection& u) { return differential(u); });
}

PermSimplexSum diff_linear(const PermSimplexSum& s) {
    return s.mapped([](const PermSimplex& x) { return differential(x); });
}

SurjectionSum compose_left(const SurjectionSum& s, int k, const Surjection& v) {
    return s.mapped([&](const Surjection& u) { return compose(u, k, v); });
}

SurjectionSum compose_right(const Surjection& u, int k, const SurjectionSum& s) {
    return s.mapped([&](const Surjection& v) { return compose(u, k, v); });
}

PermSimplexSum compose_left(const PermSimplexSum& s, int k, const PermSimplex& v) {
    return s.mapped([&](const PermSimplex& x) { return compose(x, k, v); });
}

PermSimplexSum compose_right(const PermSimplex& x, int k, const PermSimplexSum& s) {
    return s.mapped([&](const PermSimplex& y) { return compose(x, k, y); });
}

std::string show(const Surjection& u) { return word_to_string(u.word()); }
std::string show(const PermSimplex& x) { return perm_simplex_to_string(x); }

// ---- operad sweeps ----

SweepResult surj_square_zero(int jobs) {
    Check c("surj.square_zero");
    std::vector<Surjection> all;
    for (int r = 1; r <= 4; ++r)
        for (int d = 0; r + d <= 8; ++d) {
            auto v = all_surjections(r, d);
            all.insert(all.end(), v.begin(), v.end());
        }
    std::mutex mu;
    std::atomic<long> checks{0};
    std::atomic<long> fails{0};
    std::string first;
    parallel_for(jobs, static_cast<int>(all.size()), [&](int i) {
        const auto& u = all[static_cast<size_t>(i)];
        bool ok = diff_linear(differential(u)).is_zero();
        checks.fetch_add(1);
        if (!ok) {
            fails.fetch_add(1);
            std::lock_guard<std::mutex> g(mu);
            if (first.empty()) first = "d(d(" + show(u) + ")) != 0";
        }
    });
    SweepResult r = c.take();
    r.checks = checks.load();
    r.failures = fails.load();
    r.first_failure = first;
    return r;
}

SweepResult surj_theta_identity() {
    Check c("surj.theta0_identity");
    const Surjection t0 = *Surjection::make({1, 2});
    auto left = compose(t0, 1, t0);
    auto right = compose(t0, 2, t0);
    SurjectionSum want = SurjectionSum::of(*Surjection::make({1, 2, 3}));
    c.expect(left == want && right == want, [&] {
        return "theta0 composites differ: " + surjection_sum_to_string(left) + " vs " +
               surjection_sum_to_string(right);
    });
    auto d1 = differential(*Surjection::make({1, 2, 1}));
    SurjectionSum wantd;
    wantd.add(*Surjection::make({1, 2}));
    wantd.add(*Surjection::make({2, 1}));
    c.expect(d1 == wantd,
             [&] { return "d(1,2,1) = " + surjection_sum_to_string(d1); });
    return c.take();
}

SweepResult surj_chain_rule() {
    Check c("surj.chain_rule");
    for (int ru = 1; ru <= 3; ++ru)
        for (int rv = 1; rv <= 3; ++rv)
            for (int du = 0; du <= 3; ++du)
                for (int dv = 0; du + dv <= 3; ++dv)
                    for (const auto& u : all_surjections(ru, du))
                        for (const auto& v : all_surjections(rv, dv))
                            for (int k = 1; k <= ru; ++k) {
                                auto lhs = diff_linear(compose(u, k, v));
                                auto rhs = compose_left(differential(u), k, v) +
                                           compose_right(u, k, differential(v));
                                c.expect(lhs == rhs, [&] {
                                    return "chain rule fails at " + show(u) + " o_" +
                                           std::to_string(k) + " " + show(v);
                                });
                            }
    return c.take();
}

SweepResult surj_associativity() {
    Check c("surj.associativity");
    for (int ru = 1; ru <= 3; ++ru)
        for (int rv = 1; rv <= 3; ++rv)
            for (int rw = 1; ru + rv + rw <= 5; ++rw)
                for (int du = 0; du <= 2; ++du)
                    for (int dv = 0; du + dv <= 2; ++dv)
                        for (int dw = 0; du + dv + dw <= 2; ++dw)
                            for (const auto& u : all_surjections(ru, du))
                                for (const auto& v : all_surjections(rv, dv))
                                    for (const auto& w : all_surjections(rw, dw)) {
                                        // nested: w goes into slot l of v
                                        for (int k = 1; k <= ru; ++k)
                                            for (int l = 1; l <= rv; ++l) {
                                                auto lhs = compose_left(compose(u, k, v),
                                                                        k + l - 1, w);
                                                auto rhs = compose_right(u, k, compose(v, l, w));
                                                c.expect(lhs == rhs, [&] {
                                                    return "nested associativity fails at " +
                                                           show(u) + "," + show(v) + "," + show(w);
                                                });
                                            }
                                        // disjoint slots i < j of u
                                        for (int j = 2; j <= ru; ++j)
                                            for (int i = 1; i < j; ++i) {
                                                auto lhs = compose_left(compose(u, j, v), i, w);
                                                auto rhs = compose_left(compose(u, i, w),
                                                                        j + rw - 1, v);
                                                c.expect(lhs == rhs, [&] {
                                                    return "disjoint associativity fails at " +
                                                           show(u) + "," + show(v) + "," + show(w);
                                                });
                                            }
                                    }
    return c.take();
}

SweepResult surj_equivariance() {
    Check c("surj.equivariance");
    for (int ru = 1; ru <= 3; ++ru)
        for (int du = 0; du <= 2; ++du)
            for (const auto& u : all_surjections(ru, du))
                for (int rv = 1; rv <= 2; ++rv)
                    for (int dv = 0; dv <= 1; ++dv)
                        for (const auto& v : all_surjections(rv, dv))
                            for (const auto& sigma : all_perms(ru))
                                for (int k = 1; k <= ru; ++k) {
                                    auto lhs = compose(permute(sigma, u),
                                                       sigma[static_cast<size_t>(k - 1)], v);
                                    Perm big = block_permutation(
                                        sigma, sigma[static_cast<size_t>(k - 1)], rv);
                                    auto rhs = compose(u, k, v).mapped([&](const Surjection& t) {
                                        return SurjectionSum::of(permute(big, t));
                                    });
                                    c.expect(lhs == rhs, [&] {
                                        return "equivariance fails at sigma=" +
                                               perm_to_string(sigma) + " u=" + show(u) +
                                               " k=" + std::to_string(k) + " v=" + show(v);
                                    });
                                }
    return c.take();
}

SweepResult surj_table_roundtrip() {
    Check c("surj.table_roundtrip");
    for (int r = 1; r <= 4; ++r)
        for (int d = 0; r + d <= 7; ++d)
            for (const auto& u : all_surjections(r, d)) {
                Table t = table_arrangement(u);
                Word flat;
                for (const auto& row : t.rows) flat.insert(flat.end(), row.begin(), row.end());
                bool ok = flat == u.word() && t.rows.size() == t.caesuras.size() + 1;
                // caesuras are exactly the non-final occurrences
                std::vector<int> nonfinal;
                for (size_t i = 0; i < u.word().size(); ++i) {
                    for (size_t j = i + 1; j < u.word().size(); ++j)
                        if (u.word()[j] == u.word()[i]) {
                            nonfinal.push_back(static_cast<int>(i) + 1);
                            break;
                        }
                }
                ok = ok && nonfinal == t.caesuras;
                for (const auto& row : t.rows) ok = ok && !row.empty();
                c.expect(ok, [&] { return "table arrangement broken for " + show(u); });
            }
    return c.take();
}

SweepResult be_square_zero(int jobs) {
    Check c("be.square_zero");
    std::vector<PermSimplex> all;
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 4; ++d) {
            auto v = all_perm_simplices(r, d);
            all.insert(all.end(), v.begin(), v.end());
        }
    std::mutex mu;
    std::atomic<long> checks{0};
    std::atomic<long> fails{0};
    std::string first;
    parallel_for(jobs, static_cast<int>(all.size()), [&](int i) {
        const auto& x = all[static_cast<size_t>(i)];
        bool ok = diff_linear(differential(x)).is_zero();
        checks.fetch_add(1);
        if (!ok) {
            fails.fetch_add(1);
            std::lock_guard<std::mutex> g(mu);
            if (first.empty()) first = "d(d(" + show(x) + ")) != 0";
        }
    });
    SweepResult r = c.take();
    r.checks = checks.load();
    r.failures = fails.load();
    r.first_failure = first;
    return r;
}

SweepResult be_theta_diff() {
    Check c("be.theta_differential");
    const Perm tau{2, 1};
    for (int d = 1; d <= 5; ++d) {
        PermSimplexSum want;
        want.add(theta(d - 1));
        want.add(permute(tau, theta(d - 1)));
        auto got = differential(theta(d));
        c.expect(got == want, [&] {
            return "d(theta_" + std::to_string(d) + ") = " + perm_simplex_sum_to_string(got);
        });
    }
    return c.take();
}

SweepResult be_chain_rule() {
    Check c("be.chain_rule");
    for (int rx = 1; rx <= 3; ++rx)
        for (int ry = 1; rx + ry <= 4; ++ry)
            for (int dx = 0; dx <= 2; ++dx)
                for (int dy = 0; dx + dy <= 2; ++dy)
                    for (const auto& x : all_perm_simplices(rx, dx))
                        for (const auto& y : all_perm_simplices(ry, dy))
                            for (int k = 1; k <= rx; ++k) {
                                auto lhs = diff_linear(compose(x, k, y));
                                auto rhs = compose_left(differential(x), k, y) +
                                           compose_right(x, k, differential(y));
                                c.expect(lhs == rhs, [&] {
                                    return "chain rule fails at " + show(x) + " o_" +
                                           std::to_string(k) + " " + show(y);
                                });
                            }
    return c.take();
}

SweepResult be_associativity() {
    Check c("be.associativity");
    for (int rx = 1; rx <= 2; ++rx)
        for (int ry = 1; ry <= 2; ++ry)
            for (int rz = 1; rx + ry + rz <= 5; ++rz)
                for (int dx = 0; dx <= 1; ++dx)
                    for (int dy = 0; dx + dy <= 2; ++dy)
                        for (int dz = 0; dx + dy + dz <= 2; ++dz)
                            for (const auto& x : all_perm_simplices(rx, dx))
                                for (const auto& y : all_perm_simplices(ry, dy))
                                    for (const auto& z : all_perm_simplices(rz, dz)) {
                                        for (int k = 1; k <= rx; ++k)
                                            for (int l = 1; l <= ry; ++l) {
                                                auto lhs = compose_left(compose(x, k, y),
                                                                        k + l - 1, z);
                                                auto rhs = compose_right(x, k, compose(y, l, z));
                                                c.expect(lhs == rhs, [&] {
                                                    return "nested associativity fails at " +
                                                           show(x) + " ; " + show(y) + " ; " +
                                                           show(z);
                                                });
                                            }
                                        for (int j = 2; j <= rx; ++j)
                                            for (int i = 1; i < j; ++i) {
                                                auto lhs = compose_left(compose(x, j, y), i, z);
                                                auto rhs = compose_left(compose(x, i, z),
                                                                        j + rz - 1, y);
                                                c.expect(lhs == rhs, [&] {
                                                    return "disjoint associativity fails at " +
                                                           show(x) + " ; " + show(y) + " ; " +
                                                           show(z);
                                                });
                                            }
                                    }
    return c.take();
}

SweepResult be_equivariance() {
    Check c("be.equivariance");
    for (int rx = 2; rx <= 3; ++rx)
        for (int dx = 0; dx <= 2; ++dx)
            for (const auto& x : all_perm_simplices(rx, dx))
                for (int ry = 1; ry <= 2; ++ry)
                    for (int dy = 0; dy <= 1; ++dy)
                        for (const auto& y : all_perm_simplices(ry, dy))
                            for (const auto& sigma : all_perms(rx))
                                for (int k = 1; k <= rx; ++k) {
                                    auto lhs = compose(permute(sigma, x),
                                                       sigma[static_cast<size_t>(k - 1)], y);
                                    Perm big = block_permutation(
                                        sigma, sigma[static_cast<size_t>(k - 1)], ry);
                                    auto rhs = compose(x, k, y).mapped([&](const PermSimplex& t) {
                                        return PermSimplexSum::of(permute(big, t));
                                    });
                                    c.expect(lhs == rhs, [&] {
                                        return "equivariance fails at sigma=" +
                                               perm_to_string(sigma) + " x=" + show(x) +
                                               " k=" + std::to_string(k);
                                    });
                                }
    return c.take();
}

PermSimplexPairSum pair_diff(const PermSimplexPairSum& s) {
    PermSimplexPairSum out;
    for (const auto& [a, b] : s) {
        for (const auto& a1 : differential(a)) out.add({a1, b});
        for (const auto& b1 : differential(b)) out.add({a, b1});
    }
    return out;
}

SweepResult be_diag_chain_map() {
    Check c("be.diagonal_chain_map");
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : all_perm_simplices(r, d)) {
                PermSimplexPairSum lhs;
                for (const auto& y : differential(x)) lhs += diagonal(y);
                auto rhs = pair_diff(diagonal(x));
                c.expect(lhs == rhs,
                         [&] { return "diagonal chain map fails at " + show(x); });
            }
    return c.take();
}

SweepResult be_diag_coassoc() {
    Check c("be.diagonal_coassociative");
    using Triple = f2::FormalSum<std::vector<PermSimplex>>;
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : all_perm_simplices(r, d)) {
                Triple left, right, iter;
                for (const auto& [a, b] : diagonal(x)) {
                    for (const auto& [a1, a2] : diagonal(a)) left.add({a1, a2, b});
                    for (const auto& [b1, b2] : diagonal(b)) right.add({a, b1, b2});
                }
                for (const auto& f : iterated_diagonal(x, 3)) iter.add(f);
                c.expect(left == right && left == iter,
                         [&] { return "coassociativity fails at " + show(x); });
            }
    return c.take();
}

SweepResult be_diag_counit() {
    Check c("be.diagonal_counit");
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : all_perm_simplices(r, d)) {
                PermSimplexSum left, right;
                for (const auto& [a, b] : diagonal(x)) {
                    if (a.degree() == 0) left.add(b);
                    if (b.degree() == 0) right.add(a);
                }
                bool ok = left == PermSimplexSum::of(x) && right == PermSimplexSum::of(x);
                c.expect(ok, [&] { return "counit fails at " + show(x); });
            }
    return c.take();
}

// ---- table reduction sweeps ----

SweepResult tr_values() {
    Check c("tr.generator_values");
    for (int d = 0; d <= 5; ++d) {
        Word alt;
        for (int i = 0; i <= d + 1; ++i) alt.push_back(i % 2 == 0 ? 1 : 2);
        auto got = table_reduction(theta(d));
        c.expect(got == SurjectionSum::of(*Surjection::make(alt)), [&] {
            return "tr(theta_" + std::to_string(d) + ") = " + surjection_sum_to_string(got);
        });
    }
    for (int r = 1; r <= 4; ++r)
        for (const auto& p : all_perms(r)) {
            auto x = *PermSimplex::make({p});
            auto got = table_reduction(x);
            c.expect(got == SurjectionSum::of(*Surjection::make(p)), [&] {
                return "tr of the 0-simplex " + perm_to_string(p) + " = " +
                       surjection_sum_to_string(got);
            });
        }
    return c.take();
}

SweepResult tr_chain_map() {
    Check c("tr.chain_map");
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : all_perm_simplices(r, d)) {
                auto lhs = diff_linear(table_reduction(x));
                SurjectionSum rhs;
                for (const auto& y : differential(x)) rhs += table_reduction(y);
                c.expect(lhs == rhs, [&] { return "tr chain map fails at " + show(x); });
            }
    for (const auto& x : all_perm_simplices(4, 1)) {
        auto lhs = diff_linear(table_reduction(x));
        SurjectionSum rhs;
        for (const auto& y : differential(x)) rhs += table_reduction(y);
        c.expect(lhs == rhs, [&] { return "tr chain map fails at " + show(x); });
    }
    return c.take();
}

SweepResult tr_equivariance() {
    Check c("tr.equivariance");
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : all_perm_simplices(r, d))
                for (const auto& sigma : all_perms(r)) {
                    auto lhs = table_reduction(permute(sigma, x));
                    auto rhs = table_reduction(x).mapped([&](const Surjection& u) {
                        return SurjectionSum::of(permute(sigma, u));
                    });
                    c.expect(lhs == rhs, [&] {
                        return "tr equivariance fails at " + show(x) + " sigma=" +
                               perm_to_string(sigma);
                    });
                }
    return c.take();
}

SweepResult tr_morphism() {
    Check c("tr.composition_morphism");
    for (int rx = 1; rx <= 3; ++rx)
        for (int ry = 1; rx + ry <= 4; ++ry)
            for (int dx = 0; dx <= 2; ++dx)
                for (int dy = 0; dx + dy <= 2; ++dy)
                    for (const auto& x : all_perm_simplices(rx, dx))
                        for (const auto& y : all_perm_simplices(ry, dy))
                            for (int k = 1; k <= rx; ++k) {
                                auto lhs = table_reduction(x).mapped([&](const Surjection& u) {
                                    return table_reduction(y).mapped([&](const Surjection& v) {
                                        return compose(u, k, v);
                                    });
                                });
                                SurjectionSum rhs;
                                for (const auto& z : compose(x, k, y)) rhs += table_reduction(z);
                                c.expect(lhs == rhs, [&] {
                                    return "tr morphism fails at " + show(x) + " o_" +
                                           std::to_string(k) + " " + show(y);
                                });
                            }
    return c.take();
}

// ---- bar sweeps ----

struct Instance {
    std::string name;
    std::shared_ptr<const SurjAlgebra> alg;
};

std::vector<Instance> bar_instances() {
    std::vector<Instance> out;
    out.push_back({"trunc_poly", builtin::truncated_polynomial()});
    out.push_back({"sphere2_cochains", std::make_shared<CochainAlgebra>(builtin::sphere2())});
    out.push_back({"disk2_cochains", std::make_shared<CochainAlgebra>(builtin::disk2())});
    return out;
}

std::vector<BarWord> enumerate_words(const SurjAlgebra& A, int max_len) {
    std::vector<BarWord> out;
    const auto ideal = A.ideal_basis();
    BarWord w;
    std::function<void()> rec = [&]() {
        out.push_back(w);
        if (static_cast<int>(w.size()) >= max_len) return;
        for (int id : ideal) {
            w.push_back(id);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

BarWord random_word(const SurjAlgebra& A, std::mt19937& rng, int len) {
    const auto ideal = A.ideal_basis();
    std::uniform_int_distribution<size_t> pick(0, ideal.size() - 1);
    BarWord w;
    for (int i = 0; i < len; ++i) w.push_back(ideal[pick(rng)]);
    return w;
}

SweepResult bar_square_zero() {
    Check c("bar.square_zero");
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        for (const auto& w : enumerate_words(A, 4)) {
            BarSum dd;
            for (const auto& t : bar_differential(A, w)) dd += bar_differential(A, t);
            c.expect(dd.is_zero(), [&] {
                return inst.name + ": d(d(" + bar_word_to_string(A, w) + ")) != 0";
            });
        }
    }
    return c.take();
}

SweepResult bar_degree_law() {
    Check c("bar.admissible_degree_law");
    std::vector<PermSimplex> ws;
    for (int d = 0; d <= 3; ++d) ws.push_back(theta(d));
    ws.push_back(*PermSimplex::make({{1, 2, 3}, {2, 3, 1}}));
    ws.push_back(*PermSimplex::make({{3, 1, 2}, {1, 3, 2}, {2, 1, 3}}));
    for (const auto& w : ws) {
        const int r = w.arity();
        std::vector<int> sizes(static_cast<size_t>(r), 0);
        std::function<void(int)> rec = [&](int slot) {
            if (slot == r) {
                int m = 0;
                for (int n : sizes) m += n;
                auto adm = admissible_surjections(w, sizes);
                if (m == 0) {
                    c.expect(adm.empty(), [&] { return "empty sizes must give no words"; });
                    return;
                }
                for (const auto& u : adm) {
                    bool ok = u.arity() == m && u.degree() == m + w.degree() - 1;
                    c.expect(ok, [&] {
                        return "degree law fails for " + show(w) + " at " + show(u);
                    });
                }
                // enumeration is duplicate-free and sorted
                for (size_t i = 1; i < adm.size(); ++i)
                    c.expect(adm[i - 1] < adm[i], [&] { return "enumeration not strictly sorted"; });
                return;
            }
            for (int n = 0; n <= 3; ++n) {
                sizes[static_cast<size_t>(slot)] = n;
                rec(slot + 1);
            }
        };
        rec(0);
    }
    return c.take();
}

SweepResult bar_chain_map(int trials) {
    Check c("bar.operation_chain_map");
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(20260814);
        std::vector<PermSimplex> ws;
        for (int d = 0; d <= 3; ++d) {
            auto v = all_perm_simplices(2, d);
            ws.insert(ws.end(), v.begin(), v.end());
        }
        std::uniform_int_distribution<size_t> pick_w(0, ws.size() - 1);
        std::uniform_int_distribution<int> len1(0, 3);
        for (int trial = 0; trial < trials; ++trial) {
            const auto& w = ws[pick_w(rng)];
            int l1 = len1(rng);
            std::uniform_int_distribution<int> len2(0, 4 - l1);
            int l2 = len2(rng);
            BarWord c1 = random_word(A, rng, l1), c2 = random_word(A, rng, l2);

            auto value = full_op(A, w, {c1, c2});
            // grade law
            int want_grade = bar_grade(A, c1) + bar_grade(A, c2) + w.degree();
            for (const auto& t : value)
                c.expect(bar_grade(A, t) == want_grade, [&] {
                    return inst.name + ": output grade off for " + show(w);
                });

            BarSum lhs;
            for (const auto& t : value) lhs += bar_differential(A, t);
            BarSum rhs;
            for (const auto& wd : differential(w)) rhs += full_op(A, wd, {c1, c2});
            rhs += full_op_linear(A, w, {bar_differential(A, c1), BarSum::of(c2)});
            rhs += full_op_linear(A, w, {BarSum::of(c1), bar_differential(A, c2)});
            c.expect(lhs == rhs, [&] {
                return inst.name + ": chain map fails for " + show(w) + " on " +
                       bar_word_to_string(A, c1) + ", " + bar_word_to_string(A, c2);
            });
        }
    }
    return c.take();
}

SweepResult bar_boundary_relation(int trials) {
    Check c("bar.cup_boundary_relation");
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(775807);
        std::uniform_int_distribution<int> len1(0, 3);
        std::uniform_int_distribution<int> degd(1, 3);
        for (int trial = 0; trial < trials; ++trial) {
            int d = degd(rng);
            int l1 = len1(rng);
            std::uniform_int_distribution<int> len2(0, 4 - l1);
            int l2 = len2(rng);
            BarWord a1 = random_word(A, rng, l1), a2 = random_word(A, rng, l2);

            BarSum lhs = cup(A, d - 1, a1, a2) + cup(A, d - 1, a2, a1);
            BarSum rhs;
            for (const auto& t : cup(A, d, a1, a2)) rhs += bar_differential(A, t);
            rhs += full_op_linear(A, theta(d), {bar_differential(A, a1), BarSum::of(a2)});
            rhs += full_op_linear(A, theta(d), {BarSum::of(a1), bar_differential(A, a2)});
            c.expect(lhs == rhs, [&] {
                return inst.name + ": boundary relation fails at d=" + std::to_string(d) +
                       " on " + bar_word_to_string(A, a1) + ", " + bar_word_to_string(A, a2);
            });
        }
    }
    return c.take();
}

// ---- hopf sweeps ----

BarSum shuffle_product(const BarWord& a, const BarWord& b) {
    BarSum out;
    BarWord w;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == a.size() && j == b.size()) {
            out.add(w);
            return;
        }
        if (i < a.size()) {
            w.push_back(a[i]);
            rec(i + 1, j);
            w.pop_back();
        }
        if (j < b.size()) {
            w.push_back(b[j]);
            rec(i, j + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

using PairSum = f2::FormalSum<std::vector<BarWord>>;

PairSum deconcat2_linear(const BarSum& s) {
    PairSum out;
    for (const auto& w : s) out += deconcat(w, 2);
    return out;
}

SweepResult hopf_compatibility(int trials) {
    Check c("hopf.coproduct_compatibility");
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(424243);
        std::vector<PermSimplex> ws;
        for (int d = 0; d <= 2; ++d) {
            auto v = all_perm_simplices(2, d);
            ws.insert(ws.end(), v.begin(), v.end());
        }
        std::uniform_int_distribution<size_t> pick_w(0, ws.size() - 1);
        std::uniform_int_distribution<int> len1(0, 3);
        for (int trial = 0; trial < trials; ++trial) {
            const auto& w = ws[pick_w(rng)];
            int l1 = len1(rng);
            std::uniform_int_distribution<int> len2(0, 4 - l1);
            int l2 = len2(rng);
            BarWord c1 = random_word(A, rng, l1), c2 = random_word(A, rng, l2);

            PairSum lhs = deconcat2_linear(full_op(A, w, {c1, c2}));
            PairSum rhs;
            for (const auto& [wa, wb] : diagonal(w))
                for (const auto& s1 : deconcat(c1, 2))
                    for (const auto& s2 : deconcat(c2, 2)) {
                        BarSum left = full_op(A, wa, {s1[0], s2[0]});
                        if (left.is_zero()) continue;
                        BarSum right = full_op(A, wb, {s1[1], s2[1]});
                        for (const auto& u : left)
                            for (const auto& v : right) rhs.add({u, v});
                    }
            c.expect(lhs == rhs, [&] {
                return inst.name + ": coproduct compatibility fails for " + show(w) + " on " +
                       bar_word_to_string(A, c1) + ", " + bar_word_to_string(A, c2);
            });
        }
    }
    return c.take();
}

SweepResult hopf_cup0_associativity(int trials) {
    Check c("hopf.cup0_associative");
    const auto id3 = *PermSimplex::make({{1, 2, 3}});
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(99991);
        std::uniform_int_distribution<int> len(0, 2);
        for (int trial = 0; trial < trials; ++trial) {
            BarWord c1 = random_word(A, rng, len(rng));
            BarWord c2 = random_word(A, rng, len(rng));
            BarWord c3 = random_word(A, rng, len(rng));
            BarSum left = full_op_linear(A, theta(0), {cup(A, 0, c1, c2), BarSum::of(c3)});
            BarSum right = full_op_linear(A, theta(0), {BarSum::of(c1), cup(A, 0, c2, c3)});
            BarSum flat = full_op(A, id3, {c1, c2, c3});
            c.expect(left == right && left == flat, [&] {
                return inst.name + ": cup0 associativity fails on " + bar_word_to_string(A, c1) +
                       ", " + bar_word_to_string(A, c2) + ", " + bar_word_to_string(A, c3);
            });
        }
    }
    return c.take();
}

// The action axiom itself: operadic composition of two binary simplices acts
// as the nested operation.
SweepResult hopf_composition_axiom(int trials) {
    Check c("hopf.composition_axiom");
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(171717);
        std::vector<PermSimplex> ws;
        for (int d = 0; d <= 3; ++d) {
            auto v = all_perm_simplices(2, d);
            ws.insert(ws.end(), v.begin(), v.end());
        }
        std::uniform_int_distribution<size_t> pick_w(0, ws.size() - 1);
        std::uniform_int_distribution<int> len(0, 2);
        std::uniform_int_distribution<int> pick_slot(1, 2);
        for (int trial = 0; trial < trials; ++trial) {
            const auto& w = ws[pick_w(rng)];
            const auto& v = ws[pick_w(rng)];
            if (w.degree() + v.degree() > 3) continue;
            const int slot = pick_slot(rng);
            BarWord c1 = random_word(A, rng, len(rng));
            BarWord c2 = random_word(A, rng, len(rng));
            BarWord c3 = random_word(A, rng, len(rng));
            BarSum inner = slot == 1 ? full_op(A, v, {c1, c2}) : full_op(A, v, {c2, c3});
            BarSum nested = slot == 1 ? full_op_linear(A, w, {inner, BarSum::of(c3)})
                                      : full_op_linear(A, w, {BarSum::of(c1), inner});
            BarSum flat;
            for (const auto& z : compose(w, slot, v)) flat += full_op(A, z, {c1, c2, c3});
            c.expect(nested == flat, [&] {
                return inst.name + ": composition axiom fails for " + show(w) + " o" +
                       std::to_string(slot) + " " + show(v) + " on " + bar_word_to_string(A, c1) +
                       ", " + bar_word_to_string(A, c2) + ", " + bar_word_to_string(A, c3);
            });
        }
    }
    return c.take();
}

SweepResult hopf_equivariance(int trials) {
    Check c("hopf.operation_equivariance");
    const Perm tau{2, 1};
    for (const auto& inst : bar_instances()) {
        const auto& A = *inst.alg;
        std::mt19937 rng(5557);
        std::vector<PermSimplex> ws;
        for (int d = 0; d <= 3; ++d) {
            auto v = all_perm_simplices(2, d);
            ws.insert(ws.end(), v.begin(), v.end());
        }
        std::uniform_int_distribution<size_t> pick_w(0, ws.size() - 1);
        std::uniform_int_distribution<int> len1(0, 3);
        for (int trial = 0; trial < trials; ++trial) {
            const auto& w = ws[pick_w(rng)];
            int l1 = len1(rng);
            std::uniform_int_distribution<int> len2(0, 4 - l1);
            BarWord c1 = random_word(A, rng, l1), c2 = random_word(A, rng, len2(rng));
            BarSum lhs = full_op(A, permute(tau, w), {c1, c2});
            BarSum rhs = full_op(A, w, {c2, c1});
            c.expect(lhs == rhs, [&] {
                return inst.name + ": equivariance fails for " + show(w);
            });
        }
    }
    return c.take();
}

SweepResult hopf_shuffle() {
    Check c("hopf.shuffle_reduction");
    auto A = builtin::truncated_polynomial();
    auto words = enumerate_words(*A, 3);
    for (const auto& c1 : words)
        for (const auto& c2 : words) {
            BarSum lhs = cup(*A, 0, c1, c2);
            BarSum rhs = shuffle_product(c1, c2);
            c.expect(lhs == rhs, [&] {
                return "shuffle reduction fails on " + bar_word_to_string(*A, c1) + ", " +
                       bar_word_to_string(*A, c2);
            });
        }
    auto E = builtin::exterior();
    auto ewords = enumerate_words(*E, 3);
    for (const auto& c1 : ewords)
        for (const auto& c2 : ewords) {
            BarSum lhs = cup(*E, 0, c1, c2);
            BarSum rhs = shuffle_product(c1, c2);
            c.expect(lhs == rhs, [&] {
                return "shuffle reduction fails on " + bar_word_to_string(*E, c1) + ", " +
                       bar_word_to_string(*E, c2);
            });
        }
    return c.take();
}

} // namespace

std::vector<SweepResult> sweep_operads(int jobs) {
    std::vector<SweepResult> out;
    out.push_back(surj_square_zero(jobs));
    out.push_back(surj_theta_identity());
    out.push_back(surj_chain_rule());
    out.push_back(surj_associativity());
    out.push_back(surj_equivariance());
    out.push_back(surj_table_roundtrip());
    out.push_back(be_square_zero(jobs));
    out.push_back(be_theta_diff());
    out.push_back(be_chain_rule());
    out.push_back(be_associativity());
    out.push_back(be_equivariance());
    out.push_back(be_diag_chain_map());
    out.push_back(be_diag_coassoc());
    out.push_back(be_diag_counit());
    return out;
}

std::vector<SweepResult> sweep_tr() {
    std::vector<SweepResult> out;
    out.push_back(tr_values());
    out.push_back(tr_chain_map());
    out.push_back(tr_equivariance());
    out.push_back(tr_morphism());
    return out;
}

std::vector<SweepResult> sweep_bar() {
    std::vector<SweepResult> out;
    out.push_back(bar_square_zero());
    out.push_back(bar_degree_law());
    out.push_back(bar_chain_map(200));
    out.push_back(bar_boundary_relation(200));
    return out;
}

std::vector<SweepResult> sweep_hopf() {
    std::vector<SweepResult> out;
    out.push_back(hopf_compatibility(200));
    out.push_back(hopf_cup0_associativity(100));
    out.push_back(hopf_composition_axiom(100));
    out.push_back(hopf_equivariance(200));
    out.push_back(hopf_shuffle());
    return out;
}

std::vector<SweepResult> sweep_all(int jobs) {
    std::vector<SweepResult> out;
    for (auto&& v : {sweep_operads(jobs), sweep_tr(), sweep_bar(), sweep_hopf()})
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace barops::sweeps
