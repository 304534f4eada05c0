"""Random (k,m)-list-assignments with a reproducible sampling contract.

Each vertex independently receives a uniform k-subset of {1..m}. Subsets are
drawn by a partial Fisher-Yates shuffle over 1..m (first k entries), which is
uniform over all C(m,k) subsets and byte-reproducible across implementations
that fix the generator. Lists are stored sorted so intersection tests are
linear merges.
"""

from __future__ import annotations

from .errors import AssignmentParseError
from .rng import Seed, SplitMix64, rng_for_seed


class ListAssignment:
    """Per-vertex sorted k-subsets of the palette {1..m}."""

    __slots__ = ("n", "k", "m", "lists")

    def __init__(self, k: int, m: int, lists: tuple[tuple[int, ...], ...]):
        if not 1 <= k <= m:
            raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
        for v, lst in enumerate(lists):
            if len(lst) != k:
                raise ValueError(f"list of vertex {v} has size {len(lst)}, not {k}")
            if any(c < 1 or c > m for c in lst):
                raise ValueError(f"list of vertex {v} leaves the palette 1..{m}")
            if any(lst[i] >= lst[i + 1] for i in range(len(lst) - 1)):
                raise ValueError(f"list of vertex {v} is not sorted/duplicate-free")
        self.n = len(lists)
        self.k = k
        self.m = m
        self.lists = lists

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ListAssignment)
            and (self.k, self.m, self.lists) == (other.k, other.m, other.lists)
        )

    def __hash__(self) -> int:
        return hash((self.k, self.m, self.lists))

    def __repr__(self) -> str:
        return f"ListAssignment(n={self.n}, k={self.k}, m={self.m})"

    def dump(self) -> str:
        """Fixture format: one line per vertex, ``v: c1 c2 ... ck``."""
        return "\n".join(
            f"{v}: " + " ".join(str(c) for c in lst)
            for v, lst in enumerate(self.lists)
        ) + "\n"

    @classmethod
    def parse(cls, text: str, k: int, m: int) -> "ListAssignment":
        rows: dict[int, tuple[int, ...]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            head, _, tail = line.partition(":")
            if not tail:
                raise AssignmentParseError(f"line {lineno}: expected 'v: c1 ... ck'")
            try:
                v = int(head)
                colours = tuple(int(c) for c in tail.split())
            except ValueError as exc:
                raise AssignmentParseError(f"line {lineno}: {exc}") from exc
            if v in rows:
                raise AssignmentParseError(f"line {lineno}: duplicate vertex {v}")
            rows[v] = colours
        if sorted(rows) != list(range(len(rows))):
            raise AssignmentParseError("vertex indices are not dense 0..n-1")
        lists = tuple(rows[v] for v in range(len(rows)))
        try:
            return cls(k, m, lists)
        except ValueError as exc:
            raise AssignmentParseError(str(exc)) from exc


class KSubsetSampler:
    """Reusable partial Fisher-Yates sampler over the palette 1..m.

    The pool is restored to ascending order after each draw (the k swaps are
    undone in reverse), so every draw starts from the canonical state and is
    a pure function of the generator state.
    """

    __slots__ = ("m", "_pool")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("palette size must be >= 1")
        self.m = m
        self._pool = list(range(1, m + 1))

    def draw(self, k: int, rng: SplitMix64) -> tuple[int, ...]:
        if not 1 <= k <= self.m:
            raise ValueError(f"need 1 <= k <= m, got k={k}, m={self.m}")
        pool = self._pool
        swaps = []
        for i in range(k):
            j = i + rng.randbelow(self.m - i)
            if j != i:
                pool[i], pool[j] = pool[j], pool[i]
            swaps.append(j)
        out = tuple(sorted(pool[:k]))
        for i in range(k - 1, -1, -1):
            j = swaps[i]
            if j != i:
                pool[i], pool[j] = pool[j], pool[i]
        return out


def sample_k_subset(k: int, m: int, rng: SplitMix64) -> tuple[int, ...]:
    """One uniform sorted k-subset of {1..m} drawn from ``rng``."""
    return KSubsetSampler(m).draw(k, rng)


def sample_assignment(n: int, k: int, m: int, seed: Seed) -> ListAssignment:
    """n independent uniform k-subsets; identical seeds give identical output."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = rng_for_seed(seed)
    sampler = KSubsetSampler(m)
    lists = tuple(sampler.draw(k, rng) for _ in range(n))
    return ListAssignment(k, m, lists)


def lists_intersect(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Linear merge intersection test for two sorted lists."""
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return True
        if a[i] < b[j]:
            i += 1
        else:
            j += 1
    return False
