"""Finite groups as explicit multiplication tables, abelian characters,
and the subset predicates used by the graph constructions.

Groups are immutable after construction.  Elements are integers
0..order-1; the table fixes the operation, and every constructor
validates the axioms exhaustively for orders up to 512 (sampled above).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import permutations as _permutations

import numpy as np

MAX_GROUP_ORDER = 10_000
EXHAUSTIVE_ASSOC_BOUND = 512
ORTHOGONALITY_TOL = 1e-9


class GroupError(ValueError):
    """Invalid group parameter or malformed table."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``abelian_decomposition`` is the invariant-factor chain d1 | d2 | ...
    (empty for the trivial group) and is present exactly when the table
    is commutative.  ``coords`` maps each element to its exponent tuple
    with respect to that chain; both are None for non-abelian groups.
    """

    order: int
    op_table: np.ndarray
    inv_table: np.ndarray
    identity: int
    label: str
    abelian_decomposition: tuple[int, ...] | None = None
    coords: np.ndarray | None = field(default=None, repr=False)

    @property
    def is_abelian(self) -> bool:
        return self.abelian_decomposition is not None

    def combine(self, g: int, h: int) -> int:
        if not (0 <= g < self.order and 0 <= h < self.order):
            raise GroupError(f"element index out of range for {self.label}")
        return int(self.op_table[g, h])

    def invert(self, g: int) -> int:
        if not (0 <= g < self.order):
            raise GroupError(f"element index out of range for {self.label}")
        return int(self.inv_table[g])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.invert(g), -k)
        acc = self.identity
        for _ in range(k):
            acc = int(self.op_table[acc, g])
        return acc

    def element_order(self, g: int) -> int:
        acc = int(self.op_table[self.identity, g])
        k = 1
        while acc != self.identity:
            acc = int(self.op_table[acc, g])
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other: object) -> bool:
        return self is other or (
            isinstance(other, FiniteGroup)
            and self.order == other.order
            and np.array_equal(self.op_table, other.op_table)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.label))


@dataclass(frozen=True)
class GroupSubset:
    """A subset of a group, stored as a sorted tuple of element indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(int(m) for m in self.members)))
        if mem and not (0 <= mem[0] and mem[-1] < self.parent.order):
            raise GroupError("subset contains invalid element indices")
        object.__setattr__(self, "members", mem)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        if self.members:
            m[list(self.members)] = True
        return m

    def union(self, other: "GroupSubset") -> "GroupSubset":
        if other.parent is not self.parent and other.parent != self.parent:
            raise GroupError("subsets over different groups")
        return GroupSubset(self.parent, self.members + other.members)

    def with_identity(self) -> "GroupSubset":
        return GroupSubset(self.parent, self.members + (self.parent.identity,))


def subset(group: FiniteGroup, members) -> GroupSubset:
    return GroupSubset(group, tuple(int(m) for m in members))


# ---------------------------------------------------------------------------
# table validation and abelian structure


def _validate_table(op: np.ndarray, label: str) -> tuple[np.ndarray, int]:
    """Check identity/inverse/associativity axioms; return (inv_table, identity)."""
    n = op.shape[0]
    if op.shape != (n, n) or n == 0:
        raise GroupError(f"{label}: table must be square and non-empty")
    if op.min() < 0 or op.max() >= n:
        raise GroupError(f"{label}: table entries out of range")

    idx = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(op[e], idx) and np.array_equal(op[:, e], idx):
            identity = e
            break
    if identity is None:
        raise GroupError(f"{label}: no two-sided identity")

    inv = np.full(n, -1, dtype=np.int64)
    for g in range(n):
        hits = np.nonzero(op[g] == identity)[0]
        if len(hits) != 1 or op[hits[0], g] != identity:
            raise GroupError(f"{label}: element {g} lacks a two-sided inverse")
        inv[g] = hits[0]

    if n <= EXHAUSTIVE_ASSOC_BOUND:
        chunk = max(1, (1 << 22) // (n * n))
        for a0 in range(0, n, chunk):
            blk = np.arange(a0, min(a0 + chunk, n))
            left = op[op[blk], :]
            right = op[blk][:, op]
            if not np.array_equal(left, right):
                raise GroupError(f"{label}: operation is not associative")
    else:
        rng = np.random.default_rng(0)
        a, b, c = (rng.integers(0, n, 20_000) for _ in range(3))
        if not np.array_equal(op[op[a, b], c], op[a, op[b, c]]):
            raise GroupError(f"{label}: operation is not associative (sampled)")
    return inv, identity


def _element_orders(op: np.ndarray, identity: int) -> np.ndarray:
    n = op.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    cur = op[identity].copy()     # cur[g] = g^1
    k = 1
    pending = orders == 0
    while pending.any():
        done = pending & (cur == identity)
        orders[done] = k
        pending &= ~done
        if not pending.any():
            break
        cur[pending] = op[cur[pending], np.nonzero(pending)[0]]
        k += 1
        if k > n:
            raise GroupError("order computation did not terminate")
    return orders


def _abelian_basis(op: np.ndarray, identity: int) -> list[tuple[int, int]]:
    """Basis [(generator, order), ...] with orders descending, G = direct sum.

    Greedy choice of a maximal-order element extends a partial direct sum
    (a maximal-order element of an abelian group generates a summand);
    backtracking covers unlucky picks within an order class.
    """
    n = op.shape[0]
    orders = _element_orders(op, identity)
    by_order = sorted(range(n), key=lambda g: -orders[g])

    def powers(g: int) -> list[int]:
        out = [identity]
        acc = int(op[identity, g])
        while acc != identity:
            out.append(acc)
            acc = int(op[acc, g])
        return out

    def extend(span: set[int], basis: list[tuple[int, int]]):
        if len(span) == n:
            return basis
        limit = basis[-1][1] if basis else n
        for g in by_order:
            d = int(orders[g])
            if d > limit or g in span:
                continue
            pg = powers(g)
            if any(p in span for p in pg[1:]):
                continue
            new_span = {int(op[s, p]) for s in span for p in pg}
            if len(new_span) != len(span) * d:
                continue
            result = extend(new_span, basis + [(g, d)])
            if result is not None:
                return result
        return None

    basis = extend({identity}, [])
    if basis is None:
        raise GroupError("abelian basis search failed")
    return basis


def _canonical_chain(op: np.ndarray, identity: int) -> tuple[tuple[int, ...], np.ndarray]:
    """Invariant factors d1 | d2 | ... (ascending) plus per-element coordinates."""
    n = op.shape[0]
    if n == 1:
        return (), np.zeros((1, 0), dtype=np.int64)
    basis = _abelian_basis(op, identity)

    # refine each basis element into prime-power generators
    pp: list[tuple[int, int, int]] = []   # (generator, prime, p^e)
    for g, d in basis:
        fac = _factorize(d)
        for p, e in fac.items():
            q = p**e
            pp.append((_pow(op, identity, g, d // q), p, q))

    # canonical chain: repeatedly take the largest remaining power of each prime
    pools: dict[int, list[tuple[int, int]]] = {}
    for g, p, q in pp:
        pools.setdefault(p, []).append((q, g))
    for p in pools:
        pools[p].sort()
    chain: list[tuple[int, int]] = []     # (d_j, generator) built largest-first
    while any(pools.values()):
        d, gen = 1, identity
        for p in sorted(pools):
            if pools[p]:
                q, g = pools[p].pop()
                gen = int(op[gen, g])
                d *= q
        chain.append((d, gen))
    chain.reverse()                       # ascending so d1 | d2 | ...

    dims = tuple(d for d, _ in chain)
    gens = [g for _, g in chain]
    coords = np.zeros((n, len(dims)), dtype=np.int64)
    coords_map: dict[int, tuple[int, ...]] = {}

    def rec(j: int, elt: int, vec: list[int]):
        if j == len(dims):
            coords_map[elt] = tuple(vec)
            return
        acc = elt
        for a in range(dims[j]):
            rec(j + 1, acc, vec + [a])
            acc = int(op[acc, gens[j]])

    rec(0, identity, [])
    if len(coords_map) != n:
        raise GroupError("abelian coordinates do not cover the group")
    for e, vec in coords_map.items():
        coords[e] = vec
    return dims, coords


def _pow(op: np.ndarray, identity: int, g: int, k: int) -> int:
    acc = identity
    for _ in range(k):
        acc = int(op[acc, g])
    return acc


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def group_from_table(op: np.ndarray, label: str) -> FiniteGroup:
    """Validate a raw table and build the group, detecting abelian structure."""
    op = np.asarray(op, dtype=np.int64)
    n = op.shape[0]
    if n > MAX_GROUP_ORDER:
        raise GroupError(f"group order {n} exceeds cap {MAX_GROUP_ORDER}")
    inv, identity = _validate_table(op, label)
    decomposition = None
    coords = None
    if np.array_equal(op, op.T):
        decomposition, coords = _canonical_chain(op, identity)
        if reduce(lambda a, b: a * b, decomposition, 1) != n:
            raise GroupError(f"{label}: invariant factor product != order")
    return FiniteGroup(n, op, inv, identity, label, decomposition, coords)


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    a = np.arange(n)
    op = (a[:, None] + a[None, :]) % n
    return group_from_table(op, f"Z{n}")


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; mixed-radix order with the first factor most significant."""
    if not groups:
        raise GroupError("direct product needs at least one factor")
    if len(groups) == 1:
        return groups[0]
    n = 1
    for g in groups:
        n *= g.order
    if n > MAX_GROUP_ORDER:
        raise GroupError(f"group order {n} exceeds cap {MAX_GROUP_ORDER}")
    op = np.zeros((1, 1), dtype=np.int64)
    size = 1
    for g in groups:
        m = g.order
        # block-compose: new[(a1,a2),(b1,b2)] = op1[a1,b1]*m + op2[a2,b2]
        op = (op[:, None, :, None] * m + g.op_table[None, :, None, :]).reshape(
            size * m, size * m
        )
        size *= m
    label = "x".join(g.label for g in groups)
    return group_from_table(op, label)


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n; element (k, j) is a^k b^j, stored at index 2k + j."""
    if n < 2:
        raise GroupError("dihedral group needs n >= 2")
    order = 2 * n

    def idx(k, j):
        return 2 * (k % n) + j

    op = np.zeros((order, order), dtype=np.int64)
    for k in range(n):
        for j in (0, 1):
            for l in range(n):
                for m in (0, 1):
                    if j == 0:
                        op[idx(k, j), idx(l, m)] = idx(k + l, m)
                    else:
                        op[idx(k, j), idx(l, m)] = idx(k - l, 1 - m)
    return group_from_table(op, f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n of order 4n: a^(2n)=1, b^2=a^n, b a b^-1 = a^-1; index 2k + j."""
    if n < 2:
        raise GroupError("dicyclic group needs n >= 2")
    two_n = 2 * n
    order = 4 * n

    def idx(k, j):
        return 2 * (k % two_n) + j

    op = np.zeros((order, order), dtype=np.int64)
    for k in range(two_n):
        for j in (0, 1):
            for l in range(two_n):
                for m in (0, 1):
                    if j == 0:
                        op[idx(k, j), idx(l, m)] = idx(k + l, m)
                    elif m == 0:
                        op[idx(k, j), idx(l, m)] = idx(k - l, 1)
                    else:
                        op[idx(k, j), idx(l, m)] = idx(k - l + n, 0)
    return group_from_table(op, f"Dic{n}")


def symmetric(n: int) -> FiniteGroup:
    """S_n for n <= 6, elements enumerated in lexicographic permutation order."""
    if not (1 <= n <= 6):
        raise GroupError("symmetric group supported for 1 <= n <= 6")
    perms = list(_permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    op = np.zeros((order, order), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            op[i, j] = index[tuple(p[q[k]] for k in range(n))]
    return group_from_table(op, f"S{n}")


def make_group(descriptor: str) -> FiniteGroup:
    """Build a group from the descriptor grammar.

    ``cyclic:n``, ``prod:(spec,spec,...)``, ``dihedral:n``, ``dicyclic:n``,
    ``sym:n``.
    """
    d = descriptor.strip()
    if d.startswith("prod:"):
        inner = d[len("prod:"):].strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise GroupError(f"bad product descriptor: {descriptor}")
        parts = _split_top_level(inner[1:-1])
        return direct_product(*(make_group(p) for p in parts))
    if ":" not in d:
        raise GroupError(f"bad group descriptor: {descriptor}")
    kind, _, arg = d.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise GroupError(f"bad group parameter in: {descriptor}") from None
    builders = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "dicyclic": dicyclic,
        "sym": symmetric,
    }
    if kind not in builders:
        raise GroupError(f"unknown group kind: {kind}")
    return builders[kind](n)


def _split_top_level(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class AbelianCharacter:
    """Character of an abelian group, one exponent per invariant factor."""

    group: FiniteGroup
    exponent_vector: tuple[int, ...]

    def __call__(self, g: int) -> complex:
        coords = self.group.coords[g]
        dims = self.group.abelian_decomposition
        phase = sum(a * int(x) / d for a, x, d in zip(self.exponent_vector, coords, dims))
        return cmath.exp(2j * cmath.pi * phase)

    @property
    def is_real(self) -> bool:
        dims = self.group.abelian_decomposition
        return all((2 * a) % d == 0 for a, d in zip(self.exponent_vector, dims))

    def conjugate(self) -> "AbelianCharacter":
        dims = self.group.abelian_decomposition
        return AbelianCharacter(
            self.group, tuple((-a) % d for a, d in zip(self.exponent_vector, dims))
        )


def characters(group: FiniteGroup) -> list[AbelianCharacter]:
    if not group.is_abelian:
        raise GroupError("characters require an abelian group")
    dims = group.abelian_decomposition
    chars: list[AbelianCharacter] = []

    def rec(j: int, vec: list[int]):
        if j == len(dims):
            chars.append(AbelianCharacter(group, tuple(vec)))
            return
        for a in range(dims[j]):
            rec(j + 1, vec + [a])

    rec(0, [])
    return chars


def character_exponents(group: FiniteGroup) -> np.ndarray:
    """Exponent vectors of all characters in lexicographic order, one row each."""
    if not group.is_abelian:
        raise GroupError("character table requires an abelian group")
    dims = group.abelian_decomposition
    n = group.order
    exps = np.zeros((n, len(dims)), dtype=np.int64)
    rep = n
    for j, d in enumerate(dims):
        rep //= d
        exps[:, j] = (np.arange(n) // rep) % d
    return exps


def character_value_table(group: FiniteGroup) -> np.ndarray:
    """Matrix W[a, g] = chi_a(g) with characters in lexicographic exponent order."""
    exps = character_exponents(group)
    dims = group.abelian_decomposition
    if not dims:
        return np.ones((1, 1), dtype=complex)
    coords = group.coords.astype(float) / np.asarray(dims, dtype=float)
    return np.exp(2j * np.pi * (exps @ coords.T))


def character_sum(chi: AbelianCharacter, S: GroupSubset) -> complex:
    if S.parent != chi.group:
        raise GroupError("character and subset over different groups")
    return sum((chi(s) for s in S.members), 0j)


def character_sums_over(group: FiniteGroup, S: GroupSubset) -> np.ndarray:
    """chi(S) for every character, in the order of character_exponents.

    Chunked over characters so large groups never materialize the full
    n x n character table.
    """
    if S.parent != group:
        raise GroupError("subset over a different group")
    n = group.order
    if not S.members:
        return np.zeros(n, dtype=complex)
    dims = group.abelian_decomposition
    if not dims:
        return np.full(1, len(S.members), dtype=complex)
    exps = character_exponents(group)
    coords = group.coords[list(S.members)].astype(float) / np.asarray(dims, dtype=float)
    out = np.empty(n, dtype=complex)
    chunk = max(1, (1 << 21) // max(1, len(S.members)))
    for a0 in range(0, n, chunk):
        blk = exps[a0:a0 + chunk]
        out[a0:a0 + chunk] = np.exp(2j * np.pi * (blk @ coords.T)).sum(axis=1)
    return out


# ---------------------------------------------------------------------------
# subset predicates


@dataclass(frozen=True)
class SubsetPredicates:
    symmetric: bool
    antisymmetric: bool
    normal: bool
    antinormal: bool
    eulerian: bool
    contains_identity: bool


def subset_predicates(S: GroupSubset) -> SubsetPredicates:
    G = S.parent
    mem = set(S.members)
    inv_mem = {G.invert(g) for g in mem}
    symmetric = mem == inv_mem
    antisymmetric = not (mem & inv_mem)

    normal = True
    for g in G.elements():
        gi = G.invert(g)
        conj = {G.combine(G.combine(g, s), gi) for s in mem}
        if conj != mem:
            normal = False
            break

    normalizer = set()
    for g in G.elements():
        gi = G.invert(g)
        if {G.combine(G.combine(g, s), gi) for s in mem} == mem:
            normalizer.add(g)
    antinormal = not (mem & normalizer)

    eulerian = True
    for x in mem:
        d = G.element_order(x)
        for j in range(1, d):
            if math.gcd(j, d) == 1 and G.power(x, j) not in mem:
                eulerian = False
                break
        if not eulerian:
            break

    return SubsetPredicates(
        symmetric=symmetric,
        antisymmetric=antisymmetric,
        normal=normal,
        antinormal=antinormal,
        eulerian=eulerian,
        contains_identity=G.identity in mem,
    )


# ---------------------------------------------------------------------------
# gcd classes, Boolean algebra membership, Ramanujan sums


def gcd_class_indices(n: int, d: int) -> tuple[int, ...]:
    if d < 1 or d >= n or n % d != 0:
        raise GroupError(f"{d} is not a proper divisor of {n}")
    return tuple(a for a in range(n) if math.gcd(a, n) == d)


def gcd_class(group: FiniteGroup, d: int) -> GroupSubset:
    """S_n(d) = {a in Z_n : gcd(a, n) = d} as a subset of a cyclic group."""
    if group.abelian_decomposition is None or len(group.abelian_decomposition) > 1:
        raise GroupError("gcd classes live in cyclic groups")
    n = group.order
    members = gcd_class_indices(n, d)
    if len(group.abelian_decomposition) == 1:
        # the group's canonical generator may not be element 1; map through coords
        coord = group.coords[:, 0]
        lookup = {int(c): g for g, c in enumerate(coord)}
        members = tuple(sorted(lookup[a] for a in members))
    return GroupSubset(group, members)


def is_union_of_gcd_classes(S: GroupSubset) -> tuple[bool, object]:
    """Decide S = union of S_n(d); return (True, D) or (False, witness element)."""
    G = S.parent
    if G.abelian_decomposition is None or len(G.abelian_decomposition) > 1:
        raise GroupError("gcd classes live in cyclic groups")
    n = G.order
    coord = G.coords[:, 0] if n > 1 else np.zeros(1, dtype=np.int64)
    mem_res = {int(coord[g]) for g in S.members}
    divisors = sorted({math.gcd(a, n) for a in mem_res})
    D = []
    for d in divisors:
        if d == n:
            return False, G.identity   # identity never lies in a proper class
        cls = set(gcd_class_indices(n, d))
        if cls <= mem_res:
            D.append(d)
        else:
            inside = next(iter(cls & mem_res))
            outside = next(iter(cls - mem_res))
            return False, (inside, outside)
    covered = set()
    for d in D:
        covered |= set(gcd_class_indices(n, d))
    if covered != mem_res:
        return False, next(iter(mem_res - covered))
    return True, tuple(D)


def boolean_algebra_member(group: FiniteGroup, S: GroupSubset) -> bool:
    """Membership in the Boolean algebra generated by subgroups of abelian G.

    The atoms are the generator classes {h : <h> = <g>}, so membership is
    closure under co-generation.
    """
    if not group.is_abelian:
        raise GroupError("Boolean algebra test requires an abelian group")
    if S.parent != group:
        raise GroupError("subset over a different group")
    mem = set(S.members)
    for g in mem:
        cyc = _cyclic_subgroup(group, g)
        gens = {h for h in cyc if _cyclic_subgroup(group, h) == cyc}
        if not gens <= mem:
            return False
    return True


def _cyclic_subgroup(group: FiniteGroup, g: int) -> frozenset[int]:
    out = [group.identity]
    acc = group.combine(group.identity, g)
    while acc != group.identity:
        out.append(acc)
        acc = group.combine(acc, g)
    return frozenset(out)


def ramanujan_sum(r: int, n: int) -> int:
    """c(r, n), computed by direct summation over the units of Z_n.

    The sum runs over 1 <= j <= n with gcd(j, n) = 1, so c(r, 1) = 1.
    """
    if n < 1:
        raise GroupError("modulus must be positive")
    total = 0j
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            total += cmath.exp(2j * cmath.pi * r * j / n)
    if abs(total.imag) >= 1e-9:
        raise ArithmeticError(f"ramanujan sum c({r},{n}) failed to cancel: {total}")
    return round(total.real)
