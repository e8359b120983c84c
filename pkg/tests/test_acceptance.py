"""Exit criteria; each test records one PASS/FAIL line in the terminal summary."""

import hashlib
import json
import math
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from bezout_trees.bench import bench_generation
from bezout_trees.cli import run
from bezout_trees.conjecture import compare_forest
from bezout_trees.euclid import extended_gcd
from bezout_trees.forest import (
    DEFAULT_SEED,
    ROOT_MIXED,
    ROOT_ODD,
    ROOTS,
    enumerate as enumerate_tree,
    find_path,
    follow,
    iter_levels,
    node_count,
)
from bezout_trees.pair_core import CoprimePair, PythagoreanTriple, triple
from bezout_trees.ppm import encode_ppm
from bezout_trees.render import REFERENCE_CONFIG, RenderConfig, apply_map, build_terms, pixel_centers, render

GOLDEN = Path(__file__).parent / "data" / "reference_render.sha256"


def _check(tmp_path, depth, patched=False):
    out = tmp_path / f"report_{depth}_{patched}.json"
    argv = ["check", "--depth", str(depth), "--out", str(out)] + (["--patched"] if patched else [])
    start = time.perf_counter()
    code = run(argv)
    return code, json.loads(out.read_text()), time.perf_counter() - start


def _assert_unpatched_pattern(doc, depth):
    assert doc["total_nodes"] == node_count(depth, False, 2)
    assert doc["differed"] == (3**depth - 1) // 2
    frac = doc["differed_fraction"]
    assert Fraction(frac["numerator"], frac["denominator"]) == Fraction(1, 6)
    assert doc["differing_paths_summary"]["kind"] == "subtree"
    assert doc["differing_paths_summary"]["subtree"] == "(2,1):[A]"
    assert doc["matched"] + doc["differed"] == doc["total_nodes"]


@pytest.mark.slow
def test_c1_depth13_reproduction(tmp_path, criterion):
    code, doc, secs = _check(tmp_path, 13)
    assert code == 0
    assert doc["total_nodes"] == 4782966
    _assert_unpatched_pattern(doc, 13)
    assert secs < 60
    criterion(f"C1 depth 13: {doc['total_nodes']} nodes, {doc['differed']} differ, fraction 1/6, "
              f"subtree (2,1):[A], {secs:.1f}s < 60s")


def test_c1_depth8_ci(tmp_path, criterion):
    code, doc, secs = _check(tmp_path, 8)
    assert code == 0
    _assert_unpatched_pattern(doc, 8)
    assert (doc["differed"], doc["total_nodes"]) == (3280, 19680)
    assert secs < 1
    criterion(f"C1 depth 8 (CI): 3280 of 19680 differ, fraction 1/6, {secs:.3f}s < 1s")


@pytest.mark.slow
def test_c2_odd_tree_matches_oracle(criterion):
    report = compare_forest(13)
    odd = next(t for t in report.trees if t.root == "(3,1)")
    # Per-level counts cover every depth 1..13 at once.
    assert len(odd.per_level) == 13 and sum(odd.per_level) == 0
    for depth in range(1, 9):
        assert next(t for t in compare_forest(depth).trees if t.root == "(3,1)").differed == 0
    criterion("C2 (3,1) Bezout tree seeded (0,1): 0 differing nodes at depths 1..13 (and 1..8 individually)")


@pytest.mark.slow
def test_c3_patch(tmp_path, criterion):
    for depth in (8, 13):
        code, doc, _ = _check(tmp_path, depth, patched=True)
        assert code == 0
        assert doc["differed"] == 0 and doc["patched"] is True
    criterion("C3 patched (2,1):[A] -> (1,-1): 0 differing nodes at depth 8 and 13")


def test_c4_oracle_anchors(criterion):
    got = {ab: extended_gcd(*ab) for ab in [(2, 1), (3, 1), (3, 2)]}
    assert [(r.g, r.coeffs.u, r.coeffs.v) for r in got.values()] == [(1, 0, 1), (1, 0, 1), (1, 1, -1)]
    criterion("C4 extended_gcd anchors: (2,1)->(1,0,1) (3,1)->(1,0,1) (3,2)->(1,1,-1)")


def test_c5_bezout_sweep_depth10(criterion):
    failures = 0
    count = 0
    for root in ROOTS:
        for node in enumerate_tree(root, DEFAULT_SEED, 10):
            count += 1
            failures += node.pair.m * node.bezout.u + node.pair.n * node.bezout.v != 1
        for lvl in iter_levels(root, DEFAULT_SEED, 10):
            failures += int(np.count_nonzero(lvl.m * lvl.u + lvl.n * lvl.v != 1))
    assert count == node_count(10, True, 2)
    assert failures == 0
    criterion(f"C5 Bezout identity over {count} nodes to depth 10: 0 failures")


def test_c6_coverage(criterion):
    start = time.perf_counter()
    checked = 0
    for m in range(2, 501):
        for n in range(1, m):
            if math.gcd(m, n) != 1:
                continue
            path = find_path(CoprimePair(m, n))
            assert path.root == (ROOT_ODD if m % 2 and n % 2 else ROOT_MIXED)
            assert follow(path) == CoprimePair(m, n)
            checked += 1
    secs = time.perf_counter() - start
    assert secs < 5
    criterion(f"C6 coverage: {checked} coprime pairs with m<=500 resolved and reproduced, {secs:.2f}s < 5s")


def test_c7_figure_fidelity(criterion):
    fig_pairs = {
        1: [(5, 3), (7, 3), (5, 1)],
        2: [(7, 5), (13, 5), (11, 3), (11, 7), (17, 7), (13, 3), (9, 5), (11, 5), (7, 1)],
    }
    fig_coeffs = {
        1: [(-1, 2), (1, -2), (0, 1)],
        2: [(-2, 3), (2, -5), (-1, 4), (2, -3), (-2, 5), (1, -4), (-1, 2), (1, -2), (0, 1)],
    }
    mixed_pairs = {1: [(3, 2), (5, 2), (4, 1)]}
    for root in ROOTS:
        nodes = list(enumerate_tree(root, DEFAULT_SEED, 2, include_root=False))
        for level in (1, 2):
            row = [n for n in nodes if n.level == level]
            assert [(n.bezout.u, n.bezout.v) for n in row] == fig_coeffs[level]
            if root == ROOT_ODD:
                assert [(n.pair.m, n.pair.n) for n in row] == fig_pairs[level]
        assert [(n.pair.m, n.pair.n) for n in nodes if n.level == 1] == (
            fig_pairs[1] if root == ROOT_ODD else mixed_pairs[1]
        )
    criterion("C7 levels 1-2 of both trees match the example figures pair-for-pair in A,B,C order")


def test_c8_triples(criterion):
    assert triple(CoprimePair(2, 1)) == PythagoreanTriple(3, 4, 5)
    count = 0
    for root in ROOTS:
        for node in enumerate_tree(root, DEFAULT_SEED, 8):
            t = triple(node.pair)
            assert t.x * t.x + t.y * t.y == t.z * t.z
            count += 1
    criterion(f"C8 x^2+y^2=z^2 for all {count} nodes to depth 8; triple(2,1)=(3,4,5)")


def test_c9_render(criterion):
    cfg = REFERENCE_CONFIG
    assert (cfg.width, cfg.height, cfg.term_depth, cfg.motif, cfg.colormap_source) == (256, 256, 5, "exp", "builtin")
    first = encode_ppm(render(cfg, threads=1))
    assert first == encode_ppm(render(cfg, threads=1))
    assert first == encode_ppm(render(cfg, threads=4))
    digest = hashlib.sha256(first).hexdigest()
    assert digest == GOLDEN.read_text().split()[0]

    debug = RenderConfig(width=64, height=64, term_depth=5, include_base_terms=True, include_swapped=True)
    terms = build_terms(debug)
    assert all(t.a * t.d - t.b * t.c == 1 for t in terms)
    assert all(t.a * t.d - t.b * t.c == 1 for t in build_terms(cfg))
    z = pixel_centers(debug)
    assert all((apply_map(t, z).imag > 0).all() for t in terms)
    criterion(f"C9 reference render byte-identical across runs and 1 vs 4 threads, sha256 {digest[:16]}...; "
              f"{len(terms)} terms unimodular; im>0 on all 64x64 pixels")


@pytest.mark.slow
def test_c10_bench(capsys, criterion):
    assert run(["bench", "--depth", "13"]) == 0
    out = capsys.readouterr().out
    assert "ns/pair" in out and "pairs=4782966" in out
    report = bench_generation(1)
    assert report.rows[0].pairs == 6
    tree_ns = [line for line in out.splitlines() if line.startswith("numpy   tree")][0].split()[-1]
    oracle_ns = [line for line in out.splitlines() if line.startswith("numpy   oracle")][0].split()[-1]
    criterion(f"C10 bench depth 13: tree {tree_ns} ns/pair, oracle {oracle_ns} ns/pair (report only)")
