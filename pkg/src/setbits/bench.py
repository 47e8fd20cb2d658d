"""Timing and memory comparison of bitwise sets against the naive oracle."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .big_set import word_count
from .bit_ops import WORD_BITS
from .oracle import NaiveSet, default_bitwise

BYTES_PER_WORD = WORD_BITS // 8

BENCH_OPS = (
    "intersect", "union", "difference", "insert", "remove",
    "member", "is_subset", "equals", "cardinality", "complement",
)


@dataclass(frozen=True)
class BenchRow:
    op: str
    impl: str
    ns_per_op: float
    words_per_set: float

    @property
    def bytes_per_set(self) -> int:
        return round(self.words_per_set * BYTES_PER_WORD)


@dataclass(frozen=True)
class BenchReport:
    universe_size: int
    iterations: int
    seed: int
    rows: tuple[BenchRow, ...]

    def memory(self, impl: str) -> float:
        """Words per set for ``impl`` (identical across ops)."""
        return next(r.words_per_set for r in self.rows if r.impl == impl)

    def to_lines(self) -> str:
        """Machine-readable form, one ``op,impl,ns_per_op,bytes_per_set`` line per row."""
        lines = ["op,impl,ns_per_op,bytes_per_set"]
        lines += [f"{r.op},{r.impl},{r.ns_per_op:.1f},{r.bytes_per_set}" for r in self.rows]
        return "\n".join(lines)

    def to_table(self) -> str:
        header = ("op", "impl", "ns/op", "memory")
        body = [
            (r.op, r.impl, f"{r.ns_per_op:.1f}", _words(r.words_per_set))
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(4)]

        def fmt(row):
            return "  ".join(
                cell.ljust(w) if i < 2 else cell.rjust(w)
                for i, (cell, w) in enumerate(zip(row, widths))
            ).rstrip()

        title = (f"universe {self.universe_size}, "
                 f"{self.iterations} iterations, seed {self.seed}")
        return "\n".join([title, fmt(header)] + [fmt(row) for row in body])


def _words(n: float) -> str:
    if n == int(n):
        n = int(n)
        return f"{n} word" if n == 1 else f"{n} words"
    return f"{n:.1f} words"


def _time_op(op: str, sets: list, elements: list[int], iterations: int) -> float:
    count = len(sets)
    if op in ("intersect", "union", "difference", "is_subset", "equals"):
        calls = [(getattr(sets[i % count], op), (sets[(i + 1) % count],))
                 for i in range(iterations)]
    elif op in ("insert", "remove", "member"):
        calls = [(getattr(sets[i % count], op), (elements[i % len(elements)],))
                 for i in range(iterations)]
    else:
        calls = [(getattr(sets[i % count], op), ()) for i in range(iterations)]
    start = time.perf_counter_ns()
    for fn, args in calls:
        fn(*args)
    return (time.perf_counter_ns() - start) / iterations


def bench(universe_size: int, iterations: int, seed: int = 0) -> BenchReport:
    """Time each operation for the bitwise type and :class:`NaiveSet`.

    Both implementations receive identical random operands.  Memory is the
    storage per set: ``ceil(m / 32)`` words for the bitwise type, and the
    mean element-list length (one word per element) for the naive type.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    m = universe_size
    rng = random.Random(seed)
    pool = [[e for e in range(1, m + 1) if rng.random() < 0.5] for _ in range(64)]
    elements = [rng.randint(1, m) for _ in range(256)]

    bitwise = default_bitwise(m)
    impls = {
        "bitwise": [bitwise.encode(p, m) for p in pool],
        "naive": [NaiveSet.encode(p, m) for p in pool],
    }
    memory = {
        "bitwise": float(word_count(m)),
        "naive": sum(len(p) for p in pool) / len(pool),
    }
    rows = []
    for op in BENCH_OPS:
        for name, sets in impls.items():
            rows.append(BenchRow(op, name, _time_op(op, sets, elements, iterations),
                                 memory[name]))
    return BenchReport(m, iterations, seed, tuple(rows))
