"""Acceptance suite: eight exit criteria, one test and one printed verdict each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
The full suite takes tens of minutes on one core; the desk-scale comparison
(criterion 4) and the 1000-dimensional spot check (criterion 5) dominate.
"""

import dataclasses
import itertools
import time

import numpy as np

from vigpso import (
    ExperimentPlan,
    InteractionGraph,
    PsoConfig,
    RngStream,
    TuningGrid,
    VigLearnConfig,
    VigpsoConfig,
    alpha_schedule,
    benchmarks,
    blend_velocity,
    compare,
    default_pso_config,
    default_vigpso_config,
    init_swarm,
    mann_whitney_u,
    pso_run,
    pso_step,
    run_batch,
    tune,
    update_graph,
    vigpso_run,
    vigpso_step,
)
from vigpso.vig import _movement_correlations

from oracles import (
    brute_force_u_distribution,
    reference_decaying_pso_run,
    u_statistic_by_counting,
)

TUNE_SEED = 5000
RUN_SEED = 9000


def _verdict(name: str, ok: bool, detail: str = ""):
    print(f"\n[acceptance] {name}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{name}: {detail}"


class TestCriterion1ReductionOracle:
    def test_vigpso_with_unreachable_threshold_matches_decaying_pso(self):
        seeds = np.random.default_rng(321).integers(0, 2**31, size=10)
        worst = 0.0
        for fname in ("sphere", "rosenbrock"):
            for dim in (5, 20):
                obj = benchmarks.make_objective(fname, dim)
                cfg = VigpsoConfig(
                    base=PsoConfig(omega=0.7, c1=1.6, c2=1.8, swarm_size=20,
                                   max_iterations=50),
                    learn=VigLearnConfig(tau1=1.01, tau2=0.3, update_interval=5),
                )
                for seed in seeds:
                    ref_trace, _, _, ref_gbest = reference_decaying_pso_run(
                        cfg.base, cfg.inertia_decay, obj, int(seed)
                    )
                    run = vigpso_run(cfg, obj, int(seed))
                    worst = max(
                        worst,
                        float(np.max(np.abs(run.trace - ref_trace))),
                        float(np.max(np.abs(run.final_position - ref_gbest))),
                    )
        _verdict("criterion 1 (reduction oracle)", worst <= 1e-12,
                 f"max component deviation {worst:.3e} over 40 runs")


class TestCriterion2BenchmarkCorrectness:
    WORKED = [
        ("sphere", [1, 2, 3], 14.0),
        ("sum_squares", [1, 2, 3], 36.0),
        ("schwefel_2_22", [1, -2, 3], 12.0),
        ("dixon_price", [1, 1], 2.0),
        ("rastrigin", [0, 0, 0], 0.0),
        ("rosenbrock", [1, 1, 1, 1], 0.0),
        ("griewank", [0.0] * 10, 0.0),
        ("alpine", [0.0] * 5, 0.0),
    ]

    def test_worked_examples_and_optima(self):
        for name, x, expected in self.WORKED:
            got = benchmarks.evaluate(name, x)
            assert got == expected, f"{name}({x}) = {got}, expected {expected}"
        worst = 0.0
        for name in benchmarks.names():
            spec = benchmarks.get(name)
            for dim in (2, 5, 30, 50):
                value = benchmarks.evaluate(name, spec.optimum_point(dim))
                worst = max(worst, abs(value - spec.known_optimum_value))
        _verdict("criterion 2 (benchmark correctness)", worst <= 1e-12,
                 f"8 worked examples exact; worst optimum residual {worst:.3e}")


class TestCriterion3MannWhitneyOracle:
    def test_exact_and_approximate_paths_against_enumeration(self):
        max_exact_err = 0.0
        max_approx_err = 0.0
        for n in range(2, 9):
            dist = brute_force_u_distribution(n, n)
            total = sum(dist.values())
            oracle_p = {
                u: min(1.0, 2.0 * min(
                    sum(c for v, c in dist.items() if v <= u),
                    sum(c for v, c in dist.items() if v >= u),
                ) / total)
                for u in dist
            }
            universe = range(1, 2 * n + 1)
            for chosen in itertools.combinations(universe, n):
                chosen_set = set(chosen)
                a = [float(v) for v in chosen]
                b = [float(v) for v in universe if v not in chosen_set]
                u_ref = u_statistic_by_counting(a, b)
                result = mann_whitney_u(a, b)  # auto picks the exact path here
                assert result.u_statistic == u_ref
                max_exact_err = max(max_exact_err, abs(result.p_value - oracle_p[u_ref]))
                if n == 8:
                    approx = mann_whitney_u(a, b, method="normal").p_value
                    max_approx_err = max(max_approx_err, abs(approx - oracle_p[u_ref]))
        ok = max_exact_err <= 1e-12 and max_approx_err <= 0.02
        _verdict("criterion 3 (Mann-Whitney oracle)", ok,
                 f"exact err {max_exact_err:.2e} (<=1e-12), "
                 f"normal-approx err {max_approx_err:.4f} (<=0.02) at n=8")


class TestCriterion6ComplexitySignature:
    SWARM = 50
    ITERS = 60

    @staticmethod
    def _dense_graph(dim: int) -> InteractionGraph:
        w = np.full((dim, dim), 0.5)
        np.fill_diagonal(w, 0.0)
        return InteractionGraph(dim, w)

    def _vigpso_tick_time(self, dim: int) -> float:
        obj = benchmarks.make_objective("sphere", dim)
        cfg = VigpsoConfig(
            base=PsoConfig(omega=0.6, c1=1.6, c2=1.6, swarm_size=self.SWARM,
                           max_iterations=10 * self.ITERS),
            # hysteresis band spans almost all of [0, 1]: the dense graph persists
            learn=VigLearnConfig(tau1=0.999999, tau2=1e-12, update_interval=1),
        )
        rng = RngStream(100 + dim)
        state = init_swarm(obj.space, self.SWARM, rng, obj, cfg.base.v_clamp)
        graph = self._dense_graph(dim)
        for _ in range(5):  # warm the JIT and caches
            state, graph = vigpso_step(state, graph, cfg, obj, rng)
        times = []
        for _ in range(self.ITERS):
            t0 = time.perf_counter()
            state, graph = vigpso_step(state, graph, cfg, obj, rng)
            times.append(time.perf_counter() - t0)
        assert graph.has_edges  # the measured iterations all did full blend work
        return float(np.median(times))

    def _pso_time(self, dim: int) -> float:
        obj = benchmarks.make_objective("sphere", dim)
        cfg = PsoConfig(omega=0.6, c1=1.6, c2=1.6, swarm_size=self.SWARM,
                        max_iterations=10 * self.ITERS)
        rng = RngStream(200 + dim)
        state = init_swarm(obj.space, self.SWARM, rng, obj, cfg.v_clamp)
        for _ in range(5):
            pso_step(state, cfg, obj, rng)
        times = []
        for _ in range(self.ITERS):
            t0 = time.perf_counter()
            pso_step(state, cfg, obj, rng)
            times.append(time.perf_counter() - t0)
        return float(np.median(times))

    def test_update_tick_cost_scales_quadratically(self):
        vig_ratio = self._vigpso_tick_time(200) / self._vigpso_tick_time(100)
        pso_ratio = self._pso_time(200) / self._pso_time(100)
        ok = 3.0 <= vig_ratio <= 5.0 and 1.5 <= pso_ratio <= 3.0
        _verdict("criterion 6 (complexity signature)", ok,
                 f"vigpso tick-time ratio d200/d100 = {vig_ratio:.2f} (in [3,5]); "
                 f"pso ratio = {pso_ratio:.2f} (in [1.5,3])")


class TestCriterion7InvariantSuite:
    def test_one_thousand_randomized_cases(self):
        rng = np.random.default_rng(7777)
        cases = 0

        # 250 cases: graph structure after learning
        for _ in range(250):
            s = int(rng.integers(2, 30))
            d = int(rng.integers(2, 10))
            tau1 = float(rng.uniform(0.3, 0.9))
            tau2 = float(rng.uniform(0.01, tau1))
            prior_u = np.triu(rng.uniform(0, 1, (d, d)) * (rng.random((d, d)) < 0.3), 1)
            graph = update_graph(
                InteractionGraph(d, prior_u + prior_u.T),
                rng.normal(size=(s, d)),
                VigLearnConfig(tau1, tau2, 5),
            )
            assert np.array_equal(graph.weights, graph.weights.T)
            assert np.all(np.diag(graph.weights) == 0.0)
            assert graph.weights.min() >= 0.0 and graph.weights.max() <= 1.0
            cases += 1

        # 150 cases: gbest monotone, bounds and velocity clamp after steps
        for _ in range(150):
            fname = str(rng.choice(benchmarks.names()))
            dim = int(rng.integers(2, 8))
            obj = benchmarks.make_objective(fname, dim)
            v_clamp = float(rng.uniform(0.5, 5.0))
            base = PsoConfig(
                omega=float(rng.uniform(0.1, 1.0)), c1=float(rng.uniform(0.2, 2.5)),
                c2=float(rng.uniform(0.2, 2.5)), swarm_size=int(rng.integers(3, 10)),
                max_iterations=5, v_clamp=v_clamp,
            )
            seed = int(rng.integers(0, 2**31))
            stream = RngStream(seed)
            state = init_swarm(obj.space, base.swarm_size, stream, obj, v_clamp)
            use_vig = bool(rng.random() < 0.5)
            vcfg = VigpsoConfig(base=base, learn=VigLearnConfig(0.5, 0.3, 2))
            graph = InteractionGraph(dim)
            for _ in range(5):
                prev = state.gbest_val
                if use_vig:
                    state, graph = vigpso_step(state, graph, vcfg, obj, stream)
                else:
                    pso_step(state, base, obj, stream)
                assert state.gbest_val <= prev
                assert state.gbest_val == state.pbest_val.min()
                assert np.all(np.abs(state.velocities) <= v_clamp)
                assert np.all(state.positions >= obj.space.lower)
                assert np.all(state.positions <= obj.space.upper)
            cases += 1

        # 200 cases: alpha schedule strictly increasing, capped
        for _ in range(200):
            t_max = int(rng.integers(2, 1000))
            t = int(rng.integers(0, t_max))
            cap = float(rng.uniform(0.05, 0.95))
            rate = float(rng.uniform(0.1, 5.0))
            a0 = alpha_schedule(t, t_max, cap, rate)
            a1 = alpha_schedule(t + 1, t_max, cap, rate)
            assert a1 > a0
            assert 0.0 <= a0 < cap and a1 < cap
            cases += 1

        # 150 cases: blend stays between standard and graph velocity
        for _ in range(150):
            d = int(rng.integers(2, 10))
            upper = np.triu((rng.random((d, d)) < 0.5) * rng.uniform(0, 1, (d, d)), 1)
            graph = InteractionGraph(d, upper + upper.T)
            v_std = rng.normal(scale=3.0, size=d)
            alpha = float(rng.uniform(0.0, 0.5))
            out = blend_velocity(v_std, graph, alpha, v_clamp=1e12)
            for j in range(d):
                row = graph.weights[j]
                if row.sum() > 0.0:
                    v_vig = float(row @ v_std / row.sum())
                    assert min(v_std[j], v_vig) - 1e-12 <= out[j] <= max(v_std[j], v_vig) + 1e-12
                else:
                    assert out[j] == v_std[j]
            cases += 1

        # 150 cases: U complement identity
        for _ in range(150):
            n = int(rng.integers(2, 20))
            m = int(rng.integers(2, 20))
            a = rng.normal(size=n)
            b = rng.normal(size=m)
            u_ab = mann_whitney_u(a, b).u_statistic
            u_ba = mann_whitney_u(b, a).u_statistic
            assert abs(u_ab + u_ba - n * m) <= 1e-9
            cases += 1

        # 100 cases: seed determinism of full runs
        for _ in range(100):
            fname = str(rng.choice(["sphere", "rastrigin", "rosenbrock"]))
            obj = benchmarks.make_objective(fname, int(rng.integers(2, 6)))
            seed = int(rng.integers(0, 2**31))
            base = PsoConfig(0.6, 1.5, 1.5, swarm_size=5, max_iterations=8)
            vcfg = VigpsoConfig(base=base, learn=VigLearnConfig(0.4, 0.3, 3))
            if rng.random() < 0.5:
                assert np.array_equal(pso_run(base, obj, seed).trace,
                                      pso_run(base, obj, seed).trace)
            else:
                assert np.array_equal(vigpso_run(vcfg, obj, seed).trace,
                                      vigpso_run(vcfg, obj, seed).trace)
            cases += 1

        _verdict("criterion 7 (invariant suite)", cases == 1000,
                 f"{cases}/1000 randomized cases passed")


class TestCriterion8GridSearchContract:
    def test_full_grids_complete_and_replicate(self):
        grid = TuningGrid()
        outcomes = {}
        for algorithm in ("pso", "vigpso"):
            first = tune(grid, algorithm, "sphere", 10, seed=TUNE_SEED)
            again = tune(grid, algorithm, "sphere", 10, seed=TUNE_SEED)
            scores = [s for _, s in first.scores]
            expected_count = 64 if algorithm == "pso" else 64 * 6 * 3
            assert len(scores) == expected_count
            assert first.best_score == min(scores)
            # documented tie-break: first index attaining the minimum in
            # lexicographic (omega, c1, c2, tau1, tau2, interval) order
            assert first.best_params == first.scores[scores.index(min(scores))][0]
            assert first.best_params == again.best_params
            assert [s for _, s in again.scores] == scores
            outcomes[algorithm] = first
        _verdict("criterion 8 (grid-search contract)", True,
                 f"pso best {outcomes['pso'].best_params}, "
                 f"vigpso best {outcomes['vigpso'].best_params}; reruns identical")


class TestCriterion5HighDimensionSpotCheck:
    def test_sphere_d1000(self):
        obj = benchmarks.make_objective("sphere", 1000)
        pcfg = default_pso_config(300)
        vcfg = default_vigpso_config(300)
        pso_finals = [pso_run(pcfg, obj, RUN_SEED + r).final_value for r in range(10)]
        vig_finals = [vigpso_run(vcfg, obj, RUN_SEED + r).final_value for r in range(10)]
        pso_med = float(np.median(pso_finals))
        vig_med = float(np.median(vig_finals))
        test = mann_whitney_u(pso_finals, vig_finals)
        _verdict("criterion 5 (sphere d=1000)", vig_med < pso_med,
                 f"vigpso median {vig_med:.4g} < pso median {pso_med:.4g} "
                 f"(p={test.p_value:.5f})")


class TestCriterion4DeskScaleComparison:
    FUNCTIONS = ["sphere", "sum_squares", "schwefel_2_22", "dixon_price", "rosenbrock"]
    DIMS = [10, 30, 50]

    def test_tuned_direction_matches_reported_results(self):
        grid = TuningGrid()
        wins = 0
        lines = []
        for fname in self.FUNCTIONS:
            for dim in self.DIMS:
                pso_t = tune(grid, "pso", fname, dim, seed=TUNE_SEED)
                vig_t = tune(grid, "vigpso", fname, dim, seed=TUNE_SEED)
                plan = ExperimentPlan(
                    functions=[fname],
                    dimensions=[dim],
                    runs=30,
                    base_seed=RUN_SEED,
                    pso_config=dataclasses.replace(
                        pso_t.best_config, max_iterations=300),
                    vigpso_config=dataclasses.replace(
                        vig_t.best_config,
                        base=dataclasses.replace(vig_t.best_config.base,
                                                 max_iterations=300),
                    ),
                )
                cell = compare(run_batch(plan, workers=1)).cell(fname, dim)
                won = cell.winner == "VIGPSO"
                wins += won
                lines.append(
                    f"  {fname:>14} d={dim:<3} p={cell.test.p_value:.5f} "
                    f"winner={cell.winner}"
                )
        print("\n" + "\n".join(lines))
        _verdict("criterion 4 (desk-scale comparison)", wins >= 12,
                 f"vigpso significantly better in {wins}/15 cells (need >= 12)")
