"""Monomials, squarefree monomial ideals and symbolic-power membership."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .simplicial import SimplicialComplex, VertexSet, minimal_nonfaces, vertex_set


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector over variables ``0..N-1``.

    Ordering is lexicographic on the exponent tuple.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, num_variables: int) -> "Monomial":
        return cls((0,) * num_variables)

    @classmethod
    def from_support(cls, num_variables: int, support: Iterable[int], power: int = 1) -> "Monomial":
        exps = [0] * num_variables
        for i in support:
            exps[i] += power
        return cls(tuple(exps))

    @classmethod
    def parse(cls, text: str, num_variables: int) -> "Monomial":
        """Read the ``idx:exp idx:exp ...`` form; ``1`` or an empty string is the unit."""
        exps = [0] * num_variables
        text = text.strip()
        if text in ("", "1"):
            return cls(tuple(exps))
        for tok in text.replace(",", " ").split():
            idx, sep, exp = tok.partition(":")
            i = int(idx)
            e = int(exp) if sep else 1
            if not 0 <= i < num_variables:
                raise ValueError(f"variable index {i} out of range 0..{num_variables - 1}")
            exps[i] += e
        return cls(tuple(exps))

    @property
    def num_variables(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> VertexSet:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.num_variables != other.num_variables:
            raise ValueError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * a for a in self.exponents))

    def __str__(self) -> str:
        terms = [f"{i}:{e}" for i, e in enumerate(self.exponents) if e]
        return " ".join(terms) if terms else "1"


class SquarefreeMonomialIdeal:
    """A squarefree monomial ideal given by the supports of its generators.

    Non-minimal supports are dropped on construction.  The zero ideal (no
    generators) and the unit ideal (an empty support) are rejected.
    """

    def __init__(self, num_variables: int, generator_supports: Iterable[Iterable[int]]):
        if num_variables < 1:
            raise ValueError("need at least one variable")
        supports = {vertex_set(s) for s in generator_supports}
        if not supports:
            raise ValueError("the zero ideal is not supported")
        if () in supports:
            raise ValueError("the unit ideal is not supported")
        for s in supports:
            if s[-1] >= num_variables:
                raise ValueError(f"generator {s} uses a variable >= {num_variables}")
        self.num_variables = num_variables
        self.generator_supports: tuple[VertexSet, ...] = tuple(
            sorted(vertex_set(s) for s in _minimal_sets(supports))
        )

    def __eq__(self, other):
        if not isinstance(other, SquarefreeMonomialIdeal):
            return NotImplemented
        return (self.num_variables, self.generator_supports) == (
            other.num_variables,
            other.generator_supports,
        )

    def __hash__(self):
        return hash((self.num_variables, self.generator_supports))

    def __repr__(self):
        return f"SquarefreeMonomialIdeal({self.num_variables}, {list(self.generator_supports)})"

    @cached_property
    def minimal_primes(self) -> tuple[VertexSet, ...]:
        return tuple(minimal_transversals(self.generator_supports))

    def generators(self) -> list[Monomial]:
        return [Monomial.from_support(self.num_variables, s) for s in self.generator_supports]

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "SquarefreeMonomialIdeal":
        return cls(complex_.num_vertices, minimal_nonfaces(complex_))

    def to_text(self) -> str:
        lines = [f"variables {self.num_variables}"]
        lines += [" ".join(map(str, s)) for s in self.generator_supports]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SquarefreeMonomialIdeal":
        rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        rows = [r for r in rows if r]
        if not rows or not rows[0].startswith("variables"):
            raise ValueError("ideal file must start with 'variables N'")
        head = rows[0].split()
        if len(head) != 2:
            raise ValueError(f"malformed header {rows[0]!r}")
        return cls(int(head[1]), [[int(t) for t in r.split()] for r in rows[1:]])


def _minimal_sets(sets: Iterable[Iterable[int]]) -> list[frozenset]:
    # by size, so anything already kept can only be a subset of later sets
    out: list[frozenset] = []
    for s in sorted({frozenset(s) for s in sets}, key=len):
        if not any(t <= s for t in out):
            out.append(s)
    return out


def minimal_transversals(supports: Sequence[Iterable[int]]) -> list[VertexSet]:
    """Minimal vertex sets meeting every support (Berge's incremental scheme)."""
    supports = [frozenset(s) for s in supports]
    if not supports:
        raise ValueError("no generator supports")
    partial: list[frozenset] = [frozenset()]
    for edge in supports:
        grown = set()
        for t in partial:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        partial = _minimal_sets(grown)
    return sorted(vertex_set(t) for t in partial)


def minimal_primes(ideal: SquarefreeMonomialIdeal) -> list[VertexSet]:
    return list(ideal.minimal_primes)


def bipyramid_ideal(n: int) -> SquarefreeMonomialIdeal:
    """Stanley-Reisner ideal of the bipyramid, straight from its quadratic generators.

    The generators are the apex pair and every pair of base vertices that are
    not neighbours on the n-cycle.  For n = 3 there are no such base pairs and
    the base triangle itself is a non-face instead.
    """
    if n < 3:
        raise ValueError(f"bipyramid needs n >= 3, got {n}")
    gens: list[VertexSet] = [(0, n + 1)]
    if n == 3:
        gens.append((1, 2, 3))
    else:
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                if not (i == 1 and j == n):
                    gens.append((i, j))
    return SquarefreeMonomialIdeal(n + 2, gens)


def bipyramid_order(ideal: SquarefreeMonomialIdeal) -> int | None:
    """Return n if ``ideal`` is exactly the bipyramid ideal on n+2 variables."""
    n = ideal.num_variables - 2
    if n < 3:
        return None
    return n if ideal == bipyramid_ideal(n) else None


def weight(f: Monomial, prime: Iterable[int]) -> int:
    total = 0
    for i in prime:
        if not 0 <= i < f.num_variables:
            raise IndexError(f"variable {i} out of range for {f.num_variables} variables")
        total += f.exponents[i]
    return total


def _check_ring(f: Monomial, ideal: SquarefreeMonomialIdeal) -> None:
    if f.num_variables != ideal.num_variables:
        raise ValueError(
            f"monomial has {f.num_variables} variables, ideal has {ideal.num_variables}"
        )


def lightest_prime(f: Monomial, ideal: SquarefreeMonomialIdeal) -> tuple[VertexSet, int]:
    """The minimal prime of smallest weight (last in sorted order on ties)."""
    _check_ring(f, ideal)
    return min(((p, weight(f, p)) for p in reversed(ideal.minimal_primes)), key=lambda pw: pw[1])


def symbolic_membership(f: Monomial, ideal: SquarefreeMonomialIdeal, m: int) -> bool:
    """Whether f lies in the m-th symbolic power of ``ideal``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    _check_ring(f, ideal)
    exps = f.exponents
    return all(sum(exps[i] for i in p) >= m for p in ideal.minimal_primes)


def _check_bipyramid_ring(f: Monomial, n: int) -> None:
    if f.num_variables != n + 2:
        raise ValueError(f"expected {n + 2} variables for the bipyramid over an {n}-gon")


def symmetrize_apexes(f: Monomial, n: int) -> Monomial:
    _check_bipyramid_ring(f, n)
    exps = list(f.exponents)
    t = min(exps[0], exps[n + 1])
    exps[0] = exps[n + 1] = t
    return Monomial(tuple(exps))


def reduce_base(f: Monomial, n: int) -> Monomial:
    _check_bipyramid_ring(f, n)
    exps = list(f.exponents)
    for i in range(1, n + 1):
        exps[i] = max(exps[i] - 1, 0)
    return Monomial(tuple(exps))


def rotate_base(f: Monomial, n: int, shift: int) -> Monomial:
    """Move the exponent of base vertex i to vertex i + shift (cyclically)."""
    _check_bipyramid_ring(f, n)
    exps = list(f.exponents)
    for i in range(1, n + 1):
        exps[(i - 1 + shift) % n + 1] = f.exponents[i]
    return Monomial(tuple(exps))
