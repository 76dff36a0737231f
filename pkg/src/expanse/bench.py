"""Timing harness for the ``ednum`` family ``(a+b)*a(a+b)^n``.

Each run builds in a fresh :class:`Context`, so memo tables and the intern
table start empty and every timing includes the full construction.
"""

import csv
import gc
import io
import statistics
import sys
import time
from dataclasses import astuple, dataclass, fields

from .automaton import DEFAULT_STATE_CAP, build
from .oracle import automaton_via_derivation
from .syntax import Context

ALGORITHMS = ("expansion", "derivation")


def padded_alphabet(size):
    """``a``, ``b`` and then ``size - 2`` further single-character letters."""
    if size < 2:
        raise ValueError("the ednum family needs at least the letters a and b")
    extra = [c for c in "cdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"]
    cp = 0xC0
    while len(extra) < size - 2:
        c = chr(cp)
        if c.isalpha() and c.isprintable():
            extra.append(c)
        cp += 1
    return "ab" + "".join(extra[:size - 2])


def ednum(n, ctx):
    """``(a+b)* . (a . ((a+b) . ((a+b) ...)))`` with ``n`` trailing ``(a+b)``."""
    ab = ctx.sum(ctx.letter("a"), ctx.letter("b"))
    tail = ab
    for _ in range(n - 1):
        tail = ctx.prod(ab, tail)
    if n == 0:
        rest = ctx.letter("a")
    else:
        rest = ctx.prod(ctx.letter("a"), tail)
    return ctx.prod(ctx.star(ab), rest)


@dataclass
class BenchConfig:
    family: str = "ednum"
    ns: tuple = (100,)
    alphabet_sizes: tuple = (2, 254)
    algorithms: tuple = ALGORITHMS
    runs: int = 5
    weights: str = "b"


@dataclass
class BenchRow:
    algo: str
    alphabet_size: int
    n: int
    millis: float
    states: int


def time_build(algo, n, alphabet_size, runs=5, weights="b"):
    """Median wall-clock milliseconds over ``runs`` fresh builds, plus the state count."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    builder = build if algo == "expansion" else automaton_via_derivation
    alphabet = padded_alphabet(alphabet_size)
    times, states = [], None
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20 * n + 1000))
    try:
        # one discarded run so imports and allocator warm-up do not land in the first timing
        builder(ednum(n, Context(alphabet, weights)), state_cap=DEFAULT_STATE_CAP)
        for _ in range(runs):
            ctx = Context(alphabet, weights)
            e = ednum(n, ctx)
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                aut = builder(e, ctx, state_cap=DEFAULT_STATE_CAP)
                times.append((time.perf_counter() - t0) * 1000.0)
            finally:
                gc.enable()
            states = len(aut)
    finally:
        sys.setrecursionlimit(limit)
    return statistics.median(times), states


def run(cfg):
    if cfg.family != "ednum":
        raise ValueError(f"unknown family {cfg.family!r}")
    rows = []
    for algo in cfg.algorithms:
        for size in cfg.alphabet_sizes:
            for n in cfg.ns:
                ms, states = time_build(algo, n, size, cfg.runs, cfg.weights)
                rows.append(BenchRow(algo, size, n, round(ms, 3), states))
    return rows


def to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(BenchRow)])
    for r in rows:
        w.writerow(astuple(r))
    return buf.getvalue()
