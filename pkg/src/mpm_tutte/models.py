"""Domain models for mpm-tutte. All frozen dataclasses -- no mutation after creation."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum

from mpm_tutte.errors import DiagramError, DomainError, InvalidElementError

EAST = "E"
NORTH = "N"

# ─── Enumerations ─────────────────────────────────────────────


class ElementKind(StrEnum):
    LOOP = "loop"
    ISTHMUS = "isthmus"
    ORDINARY = "ordinary"


class EdgeLabel(StrEnum):
    CONTRACT = "c"
    DELETE = "d"


class DocumentKind(StrEnum):
    PRESENTATION = "presentation"
    DIAGRAM = "diagram"


class PolyStep(StrEnum):
    TIMES_X = "times_x"
    TIMES_Y = "times_y"
    ADD = "add"


class Algorithm(StrEnum):
    DP = "dp"
    ACTIVITIES = "activities"
    BRUTEFORCE = "bruteforce"


# ─── Cyclic Ground Sets ───────────────────────────────────────


@dataclass(frozen=True, slots=True)
class CyclicOrder:
    """A cyclic permutation with a single cycle.

    ``elements`` lists every element once; the successor of ``elements[j]`` is
    ``elements[j + 1]``, wrapping around. Subset views keep the parent's sequence
    with the missing elements skipped, so the induced successor needs no search.
    """

    elements: tuple[int, ...]
    _positions: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.elements:
            raise DomainError("A cyclic order needs at least one element.")
        positions = {element: index for index, element in enumerate(self.elements)}
        if len(positions) != len(self.elements):
            raise DomainError(f"Repeated element in cyclic order {self.elements}.")
        object.__setattr__(self, "_positions", positions)

    @classmethod
    def canonical(cls, n: int) -> CyclicOrder:
        """The cycle (1, 2, ..., n)."""
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._positions

    def position(self, x: int) -> int:
        try:
            return self._positions[x]
        except KeyError:
            raise InvalidElementError(f"Element {x} is not in the ground set.") from None

    def successor(self, x: int) -> int:
        return self.elements[(self.position(x) + 1) % self.size]

    def predecessor(self, x: int) -> int:
        return self.elements[(self.position(x) - 1) % self.size]

    def offset(self, a: int, b: int) -> int:
        """Number of successor steps from ``a`` to ``b``."""
        return (self.position(b) - self.position(a)) % self.size


@dataclass(frozen=True, slots=True)
class SigmaInterval:
    """The cyclic interval [first, last] = {first, σ(first), ..., last}."""

    first: int
    last: int


# ─── Presentations ────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class SigmaIntervalSystem:
    """A multiset of σ-intervals on the canonical ground set 1..n.

    Interval identity is the position in ``intervals``. ``labels`` keeps the
    user's element names (``labels[e - 1]`` names element ``e``) for I/O only.
    """

    n: int
    intervals: tuple[SigmaInterval, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    order: CyclicOrder = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("A presentation needs a nonempty ground set.")
        for index, interval in enumerate(self.intervals):
            for endpoint in (interval.first, interval.last):
                if not 1 <= endpoint <= self.n:
                    raise InvalidElementError(
                        f"Interval {index + 1} endpoint {endpoint} is outside 1..{self.n}."
                    )
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError(f"Expected {self.n} element labels, got {len(self.labels)}.")
        object.__setattr__(self, "order", CyclicOrder.canonical(self.n))

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> SigmaIntervalSystem:
        return cls(n, tuple(SigmaInterval(first, last) for first, last in pairs), labels)

    @property
    def rank(self) -> int:
        return len(self.intervals)

    @property
    def nullity(self) -> int:
        return self.n - self.rank

    def label(self, element: int) -> str:
        if self.labels is None:
            return str(element)
        return self.labels[element - 1]


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Structural flags of a presentation as given."""

    is_antichain: bool
    satisfies_c: bool
    loops: frozenset[int]
    is_lattice_path: bool


@dataclass(frozen=True, slots=True)
class SetSystem:
    """A general set system on 1..n; its partial transversals are the independent sets."""

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for index, members in enumerate(self.sets):
            stray = [e for e in members if not 1 <= e <= self.n]
            if stray:
                raise InvalidElementError(
                    f"Set {index + 1} contains {sorted(stray)} outside 1..{self.n}."
                )


# ─── Diagrams ─────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class LatticePoint:
    x: int
    y: int


@dataclass(frozen=True, slots=True)
class LatticePath:
    """A word over {E, N} placed in the plane at ``start``."""

    word: str
    start: LatticePoint

    def points(self) -> tuple[LatticePoint, ...]:
        x, y = self.start.x, self.start.y
        points = [self.start]
        for step in self.word:
            if step == EAST:
                x += 1
            else:
                y += 1
            points.append(LatticePoint(x, y))
        return tuple(points)

    @property
    def end(self) -> LatticePoint:
        north = self.word.count(NORTH)
        return LatticePoint(self.start.x + len(self.word) - north, self.start.y + north)


@dataclass(frozen=True, slots=True)
class Diagram:
    """The 5-tuple (k, m, r, P, Q).

    Points are addressed by antidiagonal ``d`` (0 on L, m + r on L') and height ``y``;
    the plane point is ``(k - 1 + d - y, y)``. ``lower[d]`` and ``upper[d]`` are the
    heights of P and Q on antidiagonal ``d``, so the region on that antidiagonal is
    every height between them, inclusive. A unit step ending on antidiagonal ``d``
    carries label ``d``.
    """

    k: int
    m: int
    r: int
    p_word: str
    q_word: str
    lower: tuple[int, ...] = field(init=False, repr=False, compare=False)
    upper: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 0 or self.r < 0:
            raise DiagramError(f"Need k >= 1 and m, r >= 0; got k={self.k} m={self.m} r={self.r}.")
        for name, word in (("P", self.p_word), ("Q", self.q_word)):
            if len(word) != self.m + self.r:
                raise DiagramError(f"{name} has {len(word)} steps, expected {self.m + self.r}.")
            if set(word) - {EAST, NORTH}:
                raise DiagramError(f"{name} contains steps other than E and N: {word!r}.")
            if word.count(NORTH) != self.r:
                raise DiagramError(f"{name} has {word.count(NORTH)} N steps, expected {self.r}.")
        lower = _heights(self.p_word, 0)
        upper = _heights(self.q_word, self.k - 1)
        for d, (low, high) in enumerate(zip(lower, upper, strict=True)):
            if high < low:
                raise DiagramError(
                    f"Q passes below P at ({self.k - 1 + d - high}, {high})."
                )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def from_words(cls, k: int, p_word: str, q_word: str) -> Diagram:
        """Read m and r off the bottom border."""
        return cls(k, p_word.count(EAST), p_word.count(NORTH), p_word, q_word)

    @property
    def n(self) -> int:
        return self.m + self.r

    @property
    def key(self) -> tuple[int, int, int, str, str]:
        return (self.k, self.m, self.r, self.p_word, self.q_word)

    @property
    def bottom(self) -> LatticePath:
        return LatticePath(self.p_word, LatticePoint(self.k - 1, 0))

    @property
    def top(self) -> LatticePath:
        return LatticePath(self.q_word, LatticePoint(0, self.k - 1))

    def start_point(self, i: int) -> LatticePoint:
        return LatticePoint(self.k - i, i - 1)

    def end_point(self, i: int) -> LatticePoint:
        return LatticePoint(self.k - i + self.m, i - 1 + self.r)

    def point(self, d: int, y: int) -> LatticePoint:
        return LatticePoint(self.k - 1 + d - y, y)

    def antidiagonal(self, point: LatticePoint) -> int:
        return point.x + point.y - (self.k - 1)

    def in_region(self, d: int, y: int) -> bool:
        return 0 <= d <= self.n and self.lower[d] <= y <= self.upper[d]

    def on_bottom(self, d: int, y: int) -> bool:
        return self.lower[d] == y

    def on_top(self, d: int, y: int) -> bool:
        return self.upper[d] == y


def _heights(word: str, base: int) -> tuple[int, ...]:
    heights = [base]
    for step in word:
        heights.append(heights[-1] + (step == NORTH))
    return tuple(heights)


@dataclass(frozen=True, slots=True)
class PathRepresentation:
    """The path Π(X, p_i): step u is N exactly when u is in X.

    ``heights[d]`` is the path's height on antidiagonal ``d``.
    """

    subject: frozenset[int]
    start: int
    word: str
    heights: tuple[int, ...]
    valid: bool

    def segment(
        self, v: int, u: int, *, open_start: bool = False, open_end: bool = False
    ) -> tuple[tuple[int, int], ...]:
        """Lattice points of [v,u], (v,u], [v,u) or (v,u) as (antidiagonal, height).

        [v,u] runs from the start of step v to the end of step u.
        """
        first = v if open_start else v - 1
        last = u - 1 if open_end else u
        return tuple((d, self.heights[d]) for d in range(max(first, 0), last + 1))


# ─── Input Documents ──────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class InputDocument:
    """A parsed presentation or diagram file."""

    kind: DocumentKind
    payload: SigmaIntervalSystem | Diagram
    labels: tuple[str, ...] = ()


# ─── Settings ─────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class GuardSettings:
    bruteforce_max_n: int = 20
    connectivity_max_n: int = 16
    minimality_max_n: int = 12
    label_sets_max_n: int = 40
    cocircuit_max_n: int = 20


@dataclass(frozen=True, slots=True)
class BenchSettings:
    family: str = "whirl"
    sizes: tuple[int, ...] = (20, 40, 80, 160)
    repeats: int = 1


@dataclass(frozen=True, slots=True)
class CorpusSettings:
    exhaustive_max_n: int = 5
    slow_exhaustive_max_n: int = 7
    random_min_n: int = 8
    random_max_n: int = 12
    random_count: int = 40
    slow_random_count: int = 500
    seed: int = 20240917


@dataclass(frozen=True, slots=True)
class Settings:
    """Resolved configuration: packaged defaults merged with an optional override file."""

    guards: GuardSettings = field(default_factory=GuardSettings)
    bench: BenchSettings = field(default_factory=BenchSettings)
    corpus: CorpusSettings = field(default_factory=CorpusSettings)


# ─── Benchmarks ───────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class BenchRow:
    """One timed Tutte computation: size, engine, whole milliseconds and work measure."""

    n: int
    algo: Algorithm
    millis: int
    nu: int
