"""The eleven acceptance criteria, one test each.

Each test prints a single ``criterion N: PASS|FAIL`` line (with output
capture disabled, so it shows up in a plain ``pytest`` run) and then
asserts the same condition.
"""
import itertools
import time

import pytest

from fieldlab.codes import (channel_simulate, code_from_design, decode_message, is_perfect,
                            min_distance, repetition_code)
from fieldlab.designs import design_from_plane, find_resolution, k_equals_t_designs
from fieldlab.fingeo import (count_bases, one_dim_subspaces, projective_plane,
                             subspaces_of_dim, verify_plane_axioms)
from fieldlab.fixtures import load_fixture, nine_point_classes
from fieldlab.gfield import build_op_tables, field_of_order, make_field, prime_power
from fieldlab.modarith import product_ring_units, unit_group
from fieldlab.polyring import PrimePoly, factor_poly, monic_irreducibles, poly_divmod, poly_roots
from fieldlab.serialize import serialize
from fieldlab.tablesearch import enumerate_field_tables, tables_isomorphic


@pytest.fixture
def report(capsys):
    def _report(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return _report


def test_criterion_01_table_search(report):
    start = time.perf_counter()
    results = {n: enumerate_field_tables(n) for n in range(2, 8)}
    elapsed = time.perf_counter() - start
    ok = (results[3].raw_count == 1 and results[4].raw_count == 1
          and results[6].raw_count == 0
          and (results[5].raw_count, results[5].iso_classes) == (6, 1)
          and elapsed < 60)
    counts = ", ".join(f"n={n}: {r.raw_count}" for n, r in results.items())
    report(1, ok, f"{counts}; {elapsed:.1f}s for n in [2,7]")


def test_criterion_02_fundamental_theorem(report):
    checked = []
    ok = True
    for q in range(2, 50):
        try:
            p, r = prime_power(q)
        except ValueError:
            continue
        # prime fields only have the modulus z
        mods = monic_irreducibles(p, r) if r > 1 else []
        if len(mods) < 2:
            continue
        base = build_op_tables(make_field(p, mods[0]))
        for f in mods[1:]:
            other = build_op_tables(make_field(p, f))
            sigma = tables_isomorphic(base, other)
            ok &= sigma is not None and base.relabel(sigma) == other
        checked.append(q)
    empty = {n: enumerate_field_tables(n, allow_large=True).raw_count for n in (6, 10, 12)}
    ok &= checked == [8, 9, 16, 25, 27, 32, 49] and all(c == 0 for c in empty.values())
    report(2, ok, f"isomorphic across all moduli for q in {checked}; "
                  f"tables found for 6/10/12: {list(empty.values())}")


def test_criterion_03_quotient_arithmetic(report):
    f4 = make_field(2, PrimePoly(2, (1, 1, 1)))
    zp1 = f4.elem([1, 1])
    prod = zp1 * zp1
    q, r = poly_divmod(PrimePoly(2, (1, 0, 1)), PrimePoly(2, (1, 1, 1)))
    ok = prod == f4.elem([0, 1]) and q == PrimePoly(2, (1,)) and r == PrimePoly(2, (0, 1))
    report(3, ok, f"(z+1)^2 = {prod} in F_4; z^2+1 = {q}*(z^2+z+1) + {r}")


def test_criterion_04_counting(report):
    lines = {p: len(one_dim_subspaces(make_field(p), 2)) for p in (2, 3, 5, 7)}
    planes = len(subspaces_of_dim(make_field(5), 3, 2))
    dual = len(subspaces_of_dim(make_field(5), 3, 1))
    bases = {q: count_bases(make_field(q)) for q in (2, 3, 5)}
    ok = (all(lines[p] == p + 1 for p in lines) and planes == dual == 31
          and all(bases[q] == (q * q - 1) * (q * q - q) for q in bases))
    report(4, ok, f"lines {lines}; 2-dim in F_5^3: {planes} (dual {dual}); bases {bases}")


def test_criterion_05_projective_planes(report):
    ok = True
    parts = []
    for q in (2, 3, 4, 5):
        s = projective_plane(field_of_order(q))
        n = q * q + q + 1
        d = design_from_plane(s)
        ok &= (len(s.points) == len(s.lines) == n and all(len(l) == q + 1 for l in s.lines)
               and verify_plane_axioms(s) == [] and (d.t, d.lam) == (2, 1))
        parts.append(d.parameters())
    report(5, ok, "; ".join(parts))


def test_criterion_06_block_design(report):
    d = load_fixture("nine-point-design")
    res = find_resolution(d)
    want = sorted(sorted(map(tuple, c)) for c in nine_point_classes())
    got = sorted(sorted(c) for c in res.classes) if res else None
    ok = d.parameters() == "2-(9,3,1), b=12" and got == want
    report(6, ok, f"{d.parameters()}; resolution with "
                  f"{len(res.classes) if res else 0} classes matches the columns: {got == want}")


def test_criterion_07_k_equals_t(report):
    start = time.perf_counter()
    ok = True
    cases = 0
    for v in range(1, 7):
        for t in range(1, min(v, 3) + 1):
            found = k_equals_t_designs(v, t)
            complete = set(itertools.combinations(range(v), t))
            ok &= len(found) == 1 and found[0].lam == 1 and set(found[0].blocks) == complete
            cases += 1
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30
    report(7, ok, f"{cases} (v, t) cases each give only the complete design; {elapsed:.1f}s")


def test_criterion_08_coding(report):
    message = decode_message(repetition_code(3), "010 111 110 000")
    ext = code_from_design(design_from_plane(load_fixture("fano")), extended=True)
    d = min_distance(ext).d
    ok = (message == "0110" and len(ext) == 16 and d == 3 and is_perfect(ext)
          and is_perfect(repetition_code(3)))
    report(8, ok, f"decoded {message!r}; extended Fano code: {len(ext)} words, d = {d}, "
                  f"perfect = {is_perfect(ext)}; rep-3 perfect = {is_perfect(repetition_code(3))}")


def test_criterion_09_reducible_without_roots(report):
    f = PrimePoly(5, (4, 0, 1, 0, 1))
    roots = poly_roots(f)
    unit, factors = factor_poly(f)
    ok = (roots == [] and unit == 1 and len(factors) == 2 and factors[0] == factors[1]
          and factors[0].degree == 2)
    report(9, ok, f"roots {roots}; factors {[str(g) for g in factors]}")


def test_criterion_10_product_ring_units(report):
    ok = True
    for n1, n2 in itertools.product(range(2, 13), repeat=2):
        brute = {(a.value, b.value) for a, b in product_ring_units(n1, n2)}
        ok &= brute == {(a.value, b.value) for a in unit_group(n1) for b in unit_group(n2)}
    report(10, ok, "units of Z_n1 x Z_n2 = U(n1) x U(n2) for 2 <= n1, n2 <= 12")


def test_criterion_11_channel(report):
    p, n, seed = 0.01, 10 ** 5, 20261017
    start = time.perf_counter()
    rep = channel_simulate(repetition_code(3), p, n, seed)
    elapsed = time.perf_counter() - start
    again = channel_simulate(repetition_code(3), p, n, seed)
    want = 1 - 3 * p * p + 2 * p ** 3
    se = (want * (1 - want) / n) ** 0.5
    z = (rep.per_letter_success_rate - want) / se
    ok = (abs(z) <= 3 and serialize(rep, "json") == serialize(again, "json")
          and elapsed < 5)
    report(11, ok, f"rate {rep.per_letter_success_rate} vs {want:.6f} ({z:+.2f} SE); "
                   f"rerun byte-identical; {elapsed:.2f}s")
