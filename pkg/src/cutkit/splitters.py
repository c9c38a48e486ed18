"""Deterministic splitter families and the isolator set families built on them.

A (n, k)-splitter family is a set of functions on [n] such that every
k-subset of [n] is mapped injectively by at least one function. We use
residue maps f_p(x) = x mod p over a pool of small primes p >= k.

Counting argument for the pool size: f_p fails on a k-subset S only if p
divides some difference x - y of distinct elements of S. The product of all
C(k, 2) such differences is below n^C(k,2) <= 2^(C(k,2) * ceil(lg n)), so at
most C(k, 2) * ceil(lg n) distinct primes divide it. A pool of one more
prime than that always contains a prime with no collision on S. As a safety
net the property is checked exhaustively for every n <= 16; a failure there
raises rather than returning a family without the guarantee.
"""

import itertools
from dataclasses import dataclass

from .errors import ContractViolation, InputError
from .graph import VertexSet

EXHAUSTIVE_LIMIT = 16


@dataclass(frozen=True)
class SplitterFunction:
    """One hash in the family: x -> x mod prime, or constant 0 for k = 1."""

    n: int
    k: int
    prime: int | None

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise InputError(f"argument {x} outside universe of size {self.n}")
        if self.prime is None:
            return 0
        return x % self.prime

    @property
    def range_size(self) -> int:
        return 1 if self.prime is None else self.prime


def _primes_from(start: int, count: int) -> list[int]:
    """First `count` primes that are >= start."""
    primes: list[int] = []
    sieve: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in sieve if p * p <= candidate):
            sieve.append(candidate)
            if candidate >= start:
                primes.append(candidate)
        candidate += 1
    return primes


def _pool_size(n: int, k: int) -> int:
    log_term = max(1, (max(n, 2) - 1).bit_length())
    return k * (k - 1) // 2 * log_term + 1


def splitter_family(n: int, k: int) -> list[SplitterFunction]:
    """Residue functions on [n], at least one injective on every k-subset."""
    if n < 1:
        raise InputError("universe must be nonempty")
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={n}")
    if k == 1:
        return [SplitterFunction(n, 1, None)]
    fns = [SplitterFunction(n, k, p) for p in _primes_from(k, _pool_size(n, k))]
    if n <= EXHAUSTIVE_LIMIT:
        bad = _find_unsplit_subset(n, k, fns)
        if bad is not None:
            raise ContractViolation(
                f"splitter family for n={n}, k={k} misses subset {bad}"
            )
    return fns


def _find_unsplit_subset(
    n: int, k: int, fns: list[SplitterFunction]
) -> tuple[int, ...] | None:
    """First k-subset of [n] no function splits injectively, if any."""
    tables = [[f(x) for x in range(n)] for f in fns]
    for subset in itertools.combinations(range(n), k):
        for table in tables:
            values = [table[x] for x in subset]
            if len(set(values)) == k:
                break
        else:
            return subset
    return None


@dataclass(frozen=True)
class SetFamily:
    """Family of vertex subsets with a recorded worst-case size bound.

    The guarantee depends on the variant. For "isolator": every nonempty
    S with |S| <= k has some member R with |R cap S| = {one element}. For
    "isolator_min2": the same, with every member of size at least two.
    """

    universe: int
    k: int
    sets: tuple[VertexSet, ...]
    size_bound: int
    variant: str

    def __post_init__(self) -> None:
        if len(self.sets) > self.size_bound:
            raise ContractViolation(
                f"family has {len(self.sets)} sets, recorded bound {self.size_bound}"
            )
        for s in self.sets:
            if not s:
                raise ContractViolation("family contains an empty set")
            if s.n != self.universe:
                raise ContractViolation("family set universe mismatch")

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def family_size_bound(n: int, k: int, min2: bool = False) -> int:
    """Cap on the family size, computable without building the sets.

    Each residue function x -> x mod p contributes at most min(p, n)
    nonempty preimage cells; level one contributes the whole universe.
    The min2 variant replaces each cell with at most k padded sets.
    """
    base = 0
    for kp in range(1, k + 1):
        if kp == 1:
            base += 1
        else:
            base += sum(min(p, n) for p in _primes_from(kp, _pool_size(n, kp)))
    return base * k if min2 else base


def isolator_family(n: int, k: int) -> SetFamily:
    """Preimage sets of splitter families for every level k' <= k.

    If 1 <= |S| <= k, the level k' = |S| has a function injective on S, and
    each of its preimage cells meets S in exactly one element.
    """
    if n < 1:
        raise InputError("universe must be nonempty")
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={n}")
    seen: dict[int, VertexSet] = {}
    for kp in range(1, k + 1):
        for fn in splitter_family(n, kp):
            cells: dict[int, int] = {}
            for x in range(n):
                cells.setdefault(fn(x), 0)
                cells[fn(x)] |= 1 << x
            for j in sorted(cells):
                mask = cells[j]
                if mask and mask not in seen:
                    seen[mask] = VertexSet(n, mask)
    return SetFamily(
        universe=n,
        k=k,
        sets=tuple(seen.values()),
        size_bound=family_size_bound(n, k),
        variant="isolator",
    )


def isolator_family_min2(n: int, k: int) -> SetFamily:
    """Isolator family with singletons padded out to pairs.

    Each singleton {x} is replaced by the pairs {x, y} for the k smallest
    ids y != x. A set S with |S| <= k and x in S rules out at most k - 1
    of those pairs, so some replacement still meets S exactly in x. Needs
    k < n so that k distinct partners exist.
    """
    if not 1 <= k < n:
        raise InputError(f"padding needs 1 <= k < n, got k={k}, n={n}")
    base = isolator_family(n, k)
    seen: dict[int, VertexSet] = {}
    for s in base.sets:
        if len(s) >= 2:
            if s.mask not in seen:
                seen[s.mask] = s
            continue
        x = s.smallest()
        partners = [y for y in range(n) if y != x][:k]
        for y in partners:
            mask = (1 << x) | (1 << y)
            if mask not in seen:
                seen[mask] = VertexSet(n, mask)
    return SetFamily(
        universe=n,
        k=k,
        sets=tuple(seen.values()),
        size_bound=family_size_bound(n, k, min2=True),
        variant="isolator_min2",
    )


def verify_isolator(family: SetFamily, k: int | None = None) -> None:
    """Exhaustively check the isolation guarantee; raises on any miss.

    Cost grows as C(n, k), so keep this to small universes.
    """
    kk = family.k if k is None else k
    n = family.universe
    masks = [s.mask for s in family.sets]
    min2 = family.variant == "isolator_min2"
    for size in range(1, kk + 1):
        for subset in itertools.combinations(range(n), size):
            smask = 0
            for x in subset:
                smask |= 1 << x
            for mask in masks:
                if (mask & smask).bit_count() == 1 and (not min2 or mask.bit_count() >= 2):
                    break
            else:
                raise ContractViolation(
                    f"no family set isolates one element of {subset}"
                )
