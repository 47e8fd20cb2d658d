"""Reference sets built on sorted element lists, and a differential harness.

``NaiveSet`` deliberately avoids every bitwise operator so that it fails in
different ways from the word-encoded types.  ``run_differential`` replays a
seeded program of operations against a bitwise implementation and the naive
one and reports the first observable divergence.
"""
from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import (
    CodeRangeError,
    ElementRangeError,
    UniverseMismatchError,
    UniverseSizeError,
)
from .small_set import format_elements


def _check_element(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ElementRangeError(f"element {k} outside universe [1, {n}]")


class NaiveSet:
    """A subset of ``{1, ..., universe_size}`` kept as an ascending tuple."""

    __slots__ = ("elements", "universe_size")

    def __init__(self, elements: Iterable[int], universe_size: int) -> None:
        if universe_size < 1:
            raise UniverseSizeError(f"universe size must be >= 1, got {universe_size}")
        elems = sorted(set(elements))
        for e in elems:
            _check_element(e, universe_size)
        self.elements = tuple(elems)
        self.universe_size = universe_size

    @classmethod
    def empty(cls, n: int) -> NaiveSet:
        return cls((), n)

    @classmethod
    def full(cls, n: int) -> NaiveSet:
        return cls(range(1, n + 1), n)

    @classmethod
    def singleton(cls, a: int, n: int) -> NaiveSet:
        _check_element(a, n)
        return cls((a,), n)

    @classmethod
    def encode(cls, elements: Iterable[int], n: int) -> NaiveSet:
        return cls(elements, n)

    @classmethod
    def from_code(cls, k: int, n: int) -> NaiveSet:
        if k < 0 or k >= 2**n:
            raise CodeRangeError(f"code {k} outside [0, 2**{n} - 1]")
        elems = []
        i = 1
        while k > 0:
            k, r = divmod(k, 2)
            if r == 1:
                elems.append(i)
            i += 1
        return cls(elems, n)

    @property
    def code(self) -> int:
        return sum(2 ** (e - 1) for e in self.elements)

    def decode(self) -> tuple[int, ...]:
        return self.elements

    def cardinality(self) -> int:
        return len(self.elements)

    def member(self, k: int) -> bool:
        _check_element(k, self.universe_size)
        return k in self.elements

    def _same_universe(self, other: NaiveSet) -> None:
        if self.universe_size != other.universe_size:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.universe_size} vs {other.universe_size}"
            )

    def intersect(self, other: NaiveSet) -> NaiveSet:
        self._same_universe(other)
        return NaiveSet([e for e in self.elements if e in other.elements], self.universe_size)

    def union(self, other: NaiveSet) -> NaiveSet:
        self._same_universe(other)
        return NaiveSet(list(self.elements) + list(other.elements), self.universe_size)

    def difference(self, other: NaiveSet) -> NaiveSet:
        self._same_universe(other)
        return NaiveSet(
            [e for e in self.elements if e not in other.elements], self.universe_size
        )

    def insert(self, k: int) -> NaiveSet:
        _check_element(k, self.universe_size)
        return NaiveSet(self.elements + (k,), self.universe_size)

    def remove(self, k: int) -> NaiveSet:
        _check_element(k, self.universe_size)
        return NaiveSet([e for e in self.elements if e != k], self.universe_size)

    def complement(self) -> NaiveSet:
        return NaiveSet(
            [e for e in range(1, self.universe_size + 1) if e not in self.elements],
            self.universe_size,
        )

    def is_superset(self, other: NaiveSet) -> bool:
        self._same_universe(other)
        return all(e in self.elements for e in other.elements)

    def is_subset(self, other: NaiveSet) -> bool:
        self._same_universe(other)
        return all(e in other.elements for e in self.elements)

    def equals(self, other: NaiveSet) -> bool:
        self._same_universe(other)
        return self.elements == other.elements

    def __eq__(self, other):
        if isinstance(other, NaiveSet):
            return self.equals(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return format_elements(self.elements)

    def __repr__(self) -> str:
        return f"NaiveSet({list(self.elements)}, universe_size={self.universe_size})"


# -- op programs --------------------------------------------------------------

REGISTERS = 4

# tag -> kind of observation the step yields
SET_OPS = ("empty", "full", "singleton", "encode", "insert", "remove",
           "intersect", "union", "difference", "complement")
BOOL_OPS = ("member", "is_subset", "is_superset", "equals")
INT_OPS = ("cardinality",)
SEQ_OPS = ("decode",)
ALL_OPS = SET_OPS + BOOL_OPS + INT_OPS + SEQ_OPS


@dataclass(frozen=True)
class Step:
    """One operation.  ``dst`` names the register receiving a set result."""

    op: str
    dst: int = 0
    args: tuple = ()

    def __str__(self) -> str:
        return f"{self.op}(dst=r{self.dst}, args={self.args})"


@dataclass(frozen=True)
class OpProgram:
    seed: int
    universe_size: int
    steps: tuple[Step, ...] = field(default_factory=tuple)


def generate_program(seed: int, n_steps: int, universe_size: int) -> OpProgram:
    """Draw ``n_steps`` random steps; identical arguments give identical programs."""
    rng = random.Random(seed)
    m = universe_size
    steps = []
    for _ in range(n_steps):
        op = rng.choice(ALL_OPS)
        dst = rng.randrange(REGISTERS)
        r1, r2 = rng.randrange(REGISTERS), rng.randrange(REGISTERS)
        k = rng.randint(1, m)
        if op in ("empty", "full"):
            args: tuple = ()
        elif op == "singleton":
            args = (k,)
        elif op == "encode":
            args = tuple(rng.randint(1, m) for _ in range(rng.randint(0, m)))
        elif op in ("insert", "remove", "member"):
            args = (r1, k)
        elif op in ("complement", "cardinality", "decode"):
            args = (r1,)
        else:
            args = (r1, r2)
        steps.append(Step(op, dst, args))
    return OpProgram(seed, universe_size, tuple(steps))


def execute_step(impl, regs: list, step: Step, universe_size: int):
    """Apply ``step`` with set type ``impl``; returns a comparable observation.

    Set results are written back into ``regs`` and observed as decoded
    element tuples.
    """
    op, a = step.op, step.args
    m = universe_size
    if op == "empty":
        result = impl.empty(m)
    elif op == "full":
        result = impl.full(m)
    elif op == "singleton":
        result = impl.singleton(a[0], m)
    elif op == "encode":
        result = impl.encode(a, m)
    elif op in ("insert", "remove"):
        result = getattr(regs[a[0]], op)(a[1])
    elif op == "complement":
        result = regs[a[0]].complement()
    elif op in ("intersect", "union", "difference"):
        result = getattr(regs[a[0]], op)(regs[a[1]])
    elif op == "member":
        return regs[a[0]].member(a[1])
    elif op in ("is_subset", "is_superset", "equals"):
        return getattr(regs[a[0]], op)(regs[a[1]])
    elif op == "cardinality":
        return regs[a[0]].cardinality()
    elif op == "decode":
        return tuple(regs[a[0]].decode())
    else:
        raise ValueError(f"unknown op {op!r}")
    regs[step.dst] = result
    return tuple(result.decode())


def run_program(impl, program: OpProgram) -> list:
    """Execute every step with ``impl`` and return the list of observations."""
    regs = [impl.empty(program.universe_size) for _ in range(REGISTERS)]
    return [execute_step(impl, regs, s, program.universe_size) for s in program.steps]


def default_bitwise(universe_size: int):
    from .big_set import BigSet
    from .bit_ops import WORD_BITS
    from .small_set import SmallSet

    return SmallSet if universe_size <= WORD_BITS else BigSet


@dataclass(frozen=True)
class DiffReport:
    ok: bool
    seed: int
    universe_size: int
    steps_run: int
    step_index: int | None = None
    step: Step | None = None
    bitwise: object = None
    naive: object = None

    def describe(self) -> str:
        if self.ok:
            return f"ok: {self.steps_run} steps (seed {self.seed}, universe {self.universe_size})"
        return (
            f"divergence at step {self.step_index} (seed {self.seed}, "
            f"universe {self.universe_size}): {self.step}\n"
            f"  bitwise: {_show(self.bitwise)}\n"
            f"  naive:   {_show(self.naive)}"
        )


def _show(obs) -> str:
    if isinstance(obs, tuple):
        return format_elements(obs)
    return str(obs).lower() if isinstance(obs, bool) else str(obs)


def run_differential(program: OpProgram, universe_size: int | None = None,
                     bitwise=None) -> DiffReport:
    """Run ``program`` on a bitwise set type and on :class:`NaiveSet` in lockstep.

    Stops at the first step whose membership, boolean or cardinality result
    differs.  ``bitwise`` defaults to ``SmallSet`` for universes up to 32
    elements and ``BigSet`` above that.
    """
    m = program.universe_size if universe_size is None else universe_size
    if bitwise is None:
        bitwise = default_bitwise(m)
    fast = [bitwise.empty(m) for _ in range(REGISTERS)]
    slow = [NaiveSet.empty(m) for _ in range(REGISTERS)]
    for idx, step in enumerate(program.steps):
        got = execute_step(bitwise, fast, step, m)
        want = execute_step(NaiveSet, slow, step, m)
        if got != want or type(got) is not type(want):
            return DiffReport(False, program.seed, m, idx + 1, idx, step, got, want)
    return DiffReport(True, program.seed, m, len(program.steps))
