// Microbenchmarks for the exact kernels: blade algebra, projections,
// stabilizer kernels and Clifford squares. Everything here is pure and
// reentrant, so benchmarks are also a cheap thread-safety smoke test.

#include <benchmark/benchmark.h>

#include <random>

#include "ahm6/clifford.hpp"
#include "ahm6/exterior.hpp"
#include "ahm6/homogeneous.hpp"
#include "ahm6/isotropy.hpp"
#include "ahm6/unitary.hpp"

using namespace ahm6;

namespace {

KForm random_form(std::mt19937_64& gen, int dim, int grade) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3), keep(0, 2);
    KForm f(dim, grade);
    for (Blade b : enumerate_blades(dim, grade))
        if (keep(gen)) f.add_term(b, rat(num(gen), den(gen)));
    return f;
}

Lambda12Params random_params(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    Lambda12Params p;
    for (auto& v : p.a) v = rat(num(gen), den(gen));
    return p;
}

} // namespace

static void BM_wedge_3forms(benchmark::State& state) {
    std::mt19937_64 gen(7);
    KForm a = random_form(gen, 6, 3), b = random_form(gen, 6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge_3forms);

static void BM_hodge(benchmark::State& state) {
    std::mt19937_64 gen(8);
    KForm a = random_form(gen, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(hodge(a));
}
BENCHMARK(BM_hodge);

static void BM_tau(benchmark::State& state) {
    std::mt19937_64 gen(9);
    KForm a = random_form(gen, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(tau(a));
}
BENCHMARK(BM_tau);

static void BM_project_lambda3(benchmark::State& state) {
    std::mt19937_64 gen(10);
    KForm a = random_form(gen, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(project_lambda3(a));
}
BENCHMARK(BM_project_lambda3);

static void BM_w_projection(benchmark::State& state) {
    std::mt19937_64 gen(11);
    IntrinsicTorsion g(6);
    for (int i = 1; i <= 6; ++i) g.set_gamma(i, m_part(random_form(gen, 6, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(w_projection(g));
}
BENCHMARK(BM_w_projection);

static void BM_isotropy_kernel(benchmark::State& state) {
    std::mt19937_64 gen(12);
    Lambda12Params p = random_params(gen);
    for (auto _ : state) benchmark::DoNotOptimize(isotropy_matrix(p).kernel());
}
BENCHMARK(BM_isotropy_kernel);

static void BM_isotropy_algebra_direct(benchmark::State& state) {
    std::mt19937_64 gen(13);
    KForm t = random_params(gen).to_form();
    for (auto _ : state) benchmark::DoNotOptimize(isotropy_algebra(t, Ambient::u3));
}
BENCHMARK(BM_isotropy_algebra_direct);

static void BM_clifford_square(benchmark::State& state) {
    std::mt19937_64 gen(14);
    CliffordElement c = embed_3form(random_params(gen).to_form());
    for (auto _ : state) benchmark::DoNotOptimize(clifford_mul(c, c));
}
BENCHMARK(BM_clifford_square);

static void BM_gamma_rep(benchmark::State& state) {
    std::mt19937_64 gen(15);
    CliffordElement c = embed_3form(random_params(gen).to_form());
    const GammaRep& rep = default_gamma_rep();
    for (auto _ : state) benchmark::DoNotOptimize(gamma_rep_of(c, rep));
}
BENCHMARK(BM_gamma_rep);

static void BM_transvection_jacobi(benchmark::State& state) {
    auto mu = so3_mu_basis();
    auto sol = solve_invariant_curvature(mu, sl2c_torsion());
    LieAlgebraTable t = transvection_algebra(mu, sl2c_torsion(), sol.particular);
    for (auto _ : state) benchmark::DoNotOptimize(t.jacobi_defect());
}
BENCHMARK(BM_transvection_jacobi);

BENCHMARK_MAIN();
