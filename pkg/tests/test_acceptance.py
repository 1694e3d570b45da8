"""Exit criteria.  Each test prints one PASS/FAIL line (shown in the summary)."""

import contextlib
import json
import random
import time
from math import gcd

import numpy as np
import pytest

from cubic_thue.certifier import Verdict, certify_thue
from cubic_thue.families import balady_form, simplest_disc_identity, simplest_form
from cubic_thue.field2adic import (
    MonicCubicModel,
    SplittingType2,
    is_common_index_divisor_2,
    monic_model,
    norm_linear,
    splitting_type_2,
)
from cubic_thue.forms import BinaryCubicForm, discriminant, evaluate, find_order3_automorphism, is_irreducible
from cubic_thue.oracle import (
    homogeneous_search,
    orbit_check,
    orbit_of,
    represented_values,
    solve_box,
    solve_box_naive,
    verify_valuation_invariant,
)

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []

AVANESOV = BinaryCubicForm(1, -2, -5, -1)


@contextlib.contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert limit is None or elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] AC{number} {title} ({elapsed:.2f}s" + (f" / {limit}s)" if limit else ")")
        RESULTS.append(line)
        print(line)


def test_ac1_discriminant_identity_paper_value():
    with criterion(1, "disc f_{1,n} = (n^2+3n+9)^2, n in [-50,50]", limit=1):
        for n in range(-50, 51):
            assert discriminant(simplest_form(1, n).form) == (n * n + 3 * n + 9) ** 2


def test_ac2_discriminant_identity_general_m():
    with criterion(2, "disc f_{m,n} = (n^2+3mn+9m^2)^2, m in [-9,9]\\0, n in [-30,30]", limit=1):
        for m in range(-9, 10):
            if m == 0:
                continue
            for n in range(-30, 31):
                assert discriminant(simplest_form(m, n).form) == simplest_disc_identity(m, n)


def _ac3_instances():
    out = [simplest_form(m, n).form for m in (1, 3, 5) for n in range(0, 21) if gcd(m, n) == 1]
    out += [balady_form(n).form for n in range(-5, 6) if is_irreducible(balady_form(n).form)]
    return out


def test_ac3_valuation_invariant_sweep():
    with criterion(3, "valuation sweep B=300 empty on simplest (m=1,3,5) + Balady", limit=120):
        instances = _ac3_instances()
        assert len(instances) == 21 + 14 + 16 + 11
        for f in instances:
            report = verify_valuation_invariant(f, 300)
            assert report.ok, (f, report.violations[:5])
            assert report.checked == 601 * 601 - 1


def test_ac4_avanesov_contrast_pair():
    with criterion(4, "Avanesov: k=1 orbit-closed solutions, k=2 certified and empty (B=500)", limit=10):
        S1 = solve_box(AVANESOV, 1, 500)
        assert {(1, 0), (0, -1), (-1, 1)} <= set(S1.solutions)
        M = find_order3_automorphism(AVANESOV, 3)
        images = {M.apply(x, y) for x, y in S1.solutions}
        assert images == set(S1.solutions)
        assert certify_thue(AVANESOV, 1).verdict is Verdict.NOT_APPLICABLE
        assert certify_thue(AVANESOV, 2).verdict is Verdict.NO_SOLUTIONS
        assert len(solve_box(AVANESOV, 2, 500)) == 0


def test_ac5_automorphisms_and_orbits():
    with criterion(5, "order-3 automorphisms of f_{1,n}, n in [-10,10]; orbits of size 3"):
        closed_sets = 0
        for n in range(-10, 11):
            f = simplest_form(1, n).form
            M = find_order3_automorphism(f, 4)
            assert M is not None, n
            ks = [k for k in sorted(represented_values(f, 4), key=abs) if k][:12]
            for k in ks:
                S = solve_box(f, k, 1000)
                assert orbit_check(f, M, S)
                closure = set()
                for xy in S.solutions:
                    orbit = orbit_of(M, xy)
                    assert len(orbit) == 3  # no fixed points
                    closure.update(orbit)
                assert len(closure) % 3 == 0
                if closure == set(S.solutions):
                    closed_sets += 1
                    assert len(S) % 3 == 0
        assert closed_sets >= 100
        # the classical k = 1 case with the full solution set inside the box
        assert len(solve_box(AVANESOV, 1, 10**4)) % 3 == 0


def test_ac6_common_index_divisor():
    with criterion(6, "conductor 31 TotallySplit, simplest (m odd) Inert; depths 20/40/64", limit=1):
        g = MonicCubicModel(1, -10, -8)
        for t in (20, 40, 64):
            assert splitting_type_2(g, t).kind is SplittingType2.TOTALLY_SPLIT
            assert is_common_index_divisor_2(g, t)
        count = 0
        for m in range(-9, 10, 2):
            for n in range(-30, 31):
                f = simplest_form(m, n).form
                if not is_irreducible(f):
                    continue
                h = monic_model(f)
                for t in (20, 40, 64):
                    assert splitting_type_2(h, t).kind is SplittingType2.INERT
                    assert not is_common_index_divisor_2(h, t)
                count += 1
        assert count > 500


def test_ac7_norm_identity():
    with criterion(7, "a^2 f(x,y) = N(ax - wy) on 10^4 random 128-bit instances"):
        rng = random.Random(128)
        r = lambda: rng.randint(-2**128, 2**128)
        for _ in range(10**4):
            f = BinaryCubicForm(r() or 1, r(), r(), r())
            x, y = r(), r()
            assert f.a**2 * evaluate(f, x, y) == norm_linear(monic_model(f), f.a * x, y)


def test_ac8_oracle_self_consistency():
    with criterion(8, "solve_box = naive on 200 random instances (B=50); jobs=4 byte-identical"):
        rng = random.Random(50)
        nonempty = 0
        for i in range(200):
            f = BinaryCubicForm(rng.choice([-1, 1]) * rng.randint(1, 20),
                                *(rng.randint(-20, 20) for _ in range(3)))
            k = evaluate(f, rng.randint(-50, 50), rng.randint(-50, 50)) if i % 4 else rng.randint(-999, 999)
            fast = solve_box(f, k, 50)
            assert fast == solve_box_naive(f, k, 50), (f, k)
            nonempty += bool(len(fast))
            if i % 10 == 0:
                par = solve_box(f, k, 50, jobs=4)
                assert json.dumps(par.to_json()) == json.dumps(fast.to_json())
        assert nonempty >= 150


def test_ac9_homogeneous_zero_only():
    with criterion(9, "f(x,y) = 2z^3 only (0,0,0) for |x|,|y|,|z| <= 60", limit=60):
        assert homogeneous_search(AVANESOV, 2, 60) == [(0, 0, 0)]
        # all 121^3 triples at once, independently of the lookup above
        r = np.arange(-60, 61, dtype=np.int64)
        x, y, z = np.meshgrid(r, r, r, indexing="ij")
        lhs = ((x - 2 * y) * x - 5 * y * y) * x - y**3
        hits = np.argwhere(lhs == 2 * z**3)
        assert hits.tolist() == [[60, 60, 60]]
