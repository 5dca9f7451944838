"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import random
import subprocess
import sys
import time

import pytest

from tcsum.algebra import connected_sum, iterated_sum, ring_new
from tcsum.zcl import (
    EXACT,
    FactorList,
    expand,
    family_product,
    verify_steps_s3,
    verify_theorem,
    zcl_search,
)
from tcsum.zerodiv import cup_map, kernel_basis

from test_zcl import oracle_max_nonzero_length

GRID = [(g, m, s) for g in (2, 3, 4) for m in range(2, 7) for s in (3, 4, 5)]


@pytest.mark.acceptance(1, "theorem sweep: TC_s = sm over g in 2..4, m in 2..6, s in 3..5 (< 60 s)")
def test_theorem_sweep():
    start = time.perf_counter()
    for g, m, s in GRID:
        cert = verify_theorem(g, m, s)
        assert cert.conclusion == EXACT, cert.render()
        assert cert.zcl_lower == cert.dim_upper == s * m
        assert cert.expanded == cert.ring.top_class()
        assert cert.check()
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"sweep took {elapsed:.1f} s"


@pytest.mark.acceptance(2, "s = 3 rewriting chain holds for g in 2..3, m in 2..6")
@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("m", range(2, 7))
def test_proof_chain(g, m):
    steps = verify_steps_s3(g, m)
    assert len(steps) == 5
    assert all(st.holds for st in steps), [st.name for st in steps if not st.holds]


@pytest.mark.acceptance(3, "Klein bottle s = 2: exhaustive degree-1 zcl is exactly 3 < 4")
def test_klein_contrast():
    expected, nforms = oracle_max_nonzero_length(2, 2, 2, 4)
    assert nforms == 3 and expected == 3
    pr = family_product(2, 2, 2)
    cert = zcl_search(pr, pool="std1", strategy="exhaustive", max_len=4)
    assert cert.search["complete"] and cert.search["pool_size"] == 3
    assert cert.zcl_lower == 3 < 4 == cert.dim_upper
    assert cert.check()
    full = zcl_search(pr, pool="kernel", strategy="exhaustive")
    assert full.search["complete"]
    assert full.zcl_lower <= full.dim_upper
    assert full.to_record()["zcl_lower"] == full.zcl_lower
    assert full.check()


@pytest.mark.acceptance(4, "ring invariants and iterated connected sums for g <= 4, m <= 6")
@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("m", range(2, 7))
def test_ring_invariants(g, m):
    r = ring_new(g, m)
    assert len(r) == g * (m - 1) + 2
    r.check_axioms()
    assert r.poincare() == [1] + [g] * (m - 1) + [1]
    if g >= 2:
        assert iterated_sum(ring_new(1, m), g) == r
        assert connected_sum(ring_new(1, m), ring_new(g - 1, m)) == r


@pytest.mark.acceptance(5, "degree-1 kernel dimension g(s-1); rank-nullity in every degree")
def test_kernel_dimensions():
    for g, m, s in GRID:
        assert kernel_basis(family_product(g, m, s), 1).dimension == g * (s - 1)
    for g, m, s in [(2, 2, 3), (2, 3, 3)]:
        pr = family_product(g, m, s)
        for d in range(s * m + 1):
            cm = cup_map(pr, d)
            kb = kernel_basis(pr, d, cm)
            assert cm.rank() + kb.dimension == len(pr.basis_in_degree(d)) == pr.poincare()[d]


def _random_zero_divisor(rng, kernels):
    d = 1 if rng.random() < 0.75 else rng.choice(sorted(kernels))
    basis = kernels[d]
    while True:
        picks = [v for v in basis if rng.random() < 0.5]
        if not picks:
            continue
        c = picks[0]
        for v in picks[1:]:
            c = c + v
        if c:
            return c


SMALL = [(2, 2, 3), (2, 3, 3), (3, 2, 3), (2, 2, 4)]


def _kernels(pr):
    return {d: kernel_basis(pr, d).vectors for d in (1, 2, 3) if kernel_basis(pr, d).vectors}


@pytest.mark.acceptance(6, "1000 random zero-divisor products of length sm+1 vanish")
def test_degree_bound_vanishing():
    rng = random.Random(20240601)
    kernels = {p: _kernels(family_product(*p)) for p in SMALL}
    for _ in range(1000):
        g, m, s = rng.choice(SMALL)
        pr = family_product(g, m, s)
        seq = [_random_zero_divisor(rng, kernels[(g, m, s)]) for _ in range(s * m + 1)]
        f = FactorList.from_sequence(seq)
        assert f.total_length == s * m + 1
        assert not expand(pr, f)


@pytest.mark.acceptance(7, "expansion is invariant under permutation of factors (100 lists)")
def test_permutation_invariance():
    rng = random.Random(8675309)
    kernels = {p: _kernels(family_product(*p)) for p in SMALL}
    nonzero = 0
    for _ in range(100):
        g, m, s = rng.choice(SMALL)
        pr = family_product(g, m, s)
        seq = [_random_zero_divisor(rng, kernels[(g, m, s)]) for _ in range(rng.randint(1, s * m))]
        shuffled = seq[:]
        rng.shuffle(shuffled)
        a = expand(pr, FactorList.from_sequence(seq))
        b = expand(pr, FactorList.from_sequence(shuffled))
        assert a == b
        nonzero += bool(a)
    assert nonzero > 0


@pytest.mark.acceptance(8, "sweep --format record is byte-identical across runs")
def test_determinism():
    cmd = [sys.executable, "-m", "tcsum", "sweep", "2..3", "2..3", "3..4", "--format", "record"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert len(first.splitlines()) == 8
