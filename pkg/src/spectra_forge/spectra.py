"""Spectra: exact character formulas, a dense Jacobi eigensolver as the
independent numeric oracle, power-trace moment checks for directed
graphs, the closed-form spectrum families, and classification.

Numeric policy: complex eigenvalues merge within 1e-8; integer snapping
uses 1e-6; the Jacobi sweep stops at off-diagonal Frobenius norm 1e-12
(relative to the matrix norm) with a 100-sweep cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra
from .algebra import FiniteGroup, GroupSubset
from .graphs import Graph, cayley

MERGE_TOL = 1e-8
SNAP_TOL = 1e-6
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
MOMENT_REL_TOL = 1e-6


class SpectrumError(ValueError):
    """Invalid spectrum operation."""


# ---------------------------------------------------------------------------
# the Spectrum value type


@dataclass(frozen=True)
class Spectrum:
    """Multiset of complex eigenvalues, canonically sorted and merged.

    Entries are (value, multiplicity) pairs sorted by real part then
    imaginary part, both descending; no two entries lie within the merge
    tolerance of each other.
    """

    entries: tuple[tuple[complex, int], ...]
    tolerance: float = MERGE_TOL

    @staticmethod
    def from_values(values, tolerance: float = MERGE_TOL) -> "Spectrum":
        vals = [complex(v) for v in values]
        if not vals:
            raise SpectrumError("empty spectrum")
        return Spectrum.from_pairs([(v, 1) for v in vals], tolerance)

    @staticmethod
    def from_pairs(pairs, tolerance: float = MERGE_TOL) -> "Spectrum":
        items = [(complex(v), int(m)) for v, m in pairs if m]
        if not items:
            raise SpectrumError("empty spectrum")
        if any(m < 0 for _, m in items):
            raise SpectrumError("negative multiplicity")
        # exact pre-merge, then union-find clustering within tolerance
        exact: dict[complex, int] = {}
        for v, m in items:
            exact[v] = exact.get(v, 0) + m
        vals = list(exact)
        parent = list(range(len(vals)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        order = sorted(range(len(vals)), key=lambda i: (vals[i].real, vals[i].imag))
        for a in range(len(order)):
            i = order[a]
            for b in range(a + 1, len(order)):
                j = order[b]
                if vals[j].real - vals[i].real > tolerance:
                    break
                if abs(vals[i] - vals[j]) <= tolerance:
                    parent[find(i)] = find(j)
        clusters: dict[int, list] = {}
        for i, v in enumerate(vals):
            root = find(i)
            if root not in clusters:
                clusters[root] = [0j, 0]
            clusters[root][0] += v * exact[v]
            clusters[root][1] += exact[v]
        merged = [(acc / m, m) for acc, m in clusters.values()]
        merged.sort(key=lambda e: (-e[0].real, -e[0].imag))
        cleaned = []
        for v, m in merged:
            re = 0.0 if abs(v.real) < 1e-12 else v.real
            im = 0.0 if abs(v.imag) < 1e-12 else v.imag
            cleaned.append((complex(re, im), m))
        return Spectrum(tuple(cleaned), tolerance)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[complex]:
        out = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    def multiplicity_of(self, value: complex, tol: float | None = None) -> int:
        tol = self.tolerance if tol is None else tol
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def shifted(self, c: complex) -> "Spectrum":
        return Spectrum.from_pairs([(v + c, m) for v, m in self.entries], self.tolerance)

    def scaled(self, c: complex) -> "Spectrum":
        return Spectrum.from_pairs([(v * c, m) for v, m in self.entries], self.tolerance)

    def negated(self) -> "Spectrum":
        return Spectrum.from_pairs([(-v, m) for v, m in self.entries], self.tolerance)

    def union(self, other: "Spectrum") -> "Spectrum":
        return Spectrum.from_pairs(
            list(self.entries) + list(other.entries), self.tolerance
        )

    def snapped(self, tol: float = SNAP_TOL) -> "Spectrum":
        out = []
        for v, m in self.entries:
            re = round(v.real) if abs(v.real - round(v.real)) <= tol else v.real
            im = round(v.imag) if abs(v.imag - round(v.imag)) <= tol else v.imag
            out.append((complex(re, im), m))
        return Spectrum.from_pairs(out, self.tolerance)

    def to_string(self) -> str:
        return ", ".join(f"[{_fmt_value(v)}]^{m}" for v, m in self.entries)

    def to_csv(self) -> str:
        lines = ["re,im,multiplicity"]
        for v, m in self.entries:
            lines.append(f"{v.real:.12g},{v.imag:.12g},{m}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "{" + self.to_string() + "}"


def _fmt_value(v: complex) -> str:
    def fmt_real(x: float) -> str:
        if abs(x - round(x)) < SNAP_TOL:
            return str(int(round(x)))
        return f"{x:.6g}"

    if abs(v.imag) < SNAP_TOL:
        return fmt_real(v.real)
    im = fmt_real(abs(v.imag))
    im = "" if im == "1" else im
    sign = "-" if v.imag < 0 else ""
    if abs(v.real) < SNAP_TOL:
        return f"{sign}{im}i"
    return f"{fmt_real(v.real)}{'-' if v.imag < 0 else '+'}{im}i"


def isospectral(s1: Spectrum, s2: Spectrum, tol: float = MERGE_TOL) -> bool:
    """Multiset equality by greedy nearest pairing within the tolerance.

    Candidates are restricted to a real-part window so the pairing is
    stable even when distinct values share a real part to rounding error.
    """
    if s1.size != s2.size:
        return False
    a = sorted(s1.values(), key=lambda z: (z.real, z.imag))
    b = sorted(s2.values(), key=lambda z: (z.real, z.imag))
    n = len(a)
    used = [False] * n
    lo = 0
    for x in a:
        while lo < n and (used[lo] or b[lo].real < x.real - tol):
            lo += 1
        best, best_d = -1, None
        j = lo
        while j < n and b[j].real <= x.real + tol:
            if not used[j]:
                d = abs(x - b[j])
                if d <= tol and (best_d is None or d < best_d):
                    best, best_d = j, d
            j += 1
        if best < 0:
            return False
        used[best] = True
    return True


@dataclass(frozen=True)
class SpectrumClass:
    integral: bool
    parity: str                 # "even" | "odd" | "mixed" | "non-integral"
    symmetric: bool
    almost_symmetric: bool
    principal_eigenvalue: float
    bipartite_criterion: bool


def classify(spec: Spectrum, snap_tol: float = SNAP_TOL) -> SpectrumClass:
    integral = all(
        abs(v.imag) <= snap_tol and abs(v.real - round(v.real)) <= snap_tol
        for v, _ in spec.entries
    )
    if integral:
        ints = {int(round(v.real)) for v, _ in spec.entries}
        if all(x % 2 == 0 for x in ints):
            parity = "even"
        elif all(x % 2 == 1 for x in ints):
            parity = "odd"
        else:
            parity = "mixed"
    else:
        parity = "non-integral"

    symmetric = isospectral(spec, spec.negated(), spec.tolerance)
    principal = max(spec.entries, key=lambda e: (e[0].real, e[0].imag))[0]
    almost = all(
        spec.multiplicity_of(v) == spec.multiplicity_of(-v)
        for v, _ in spec.entries
        if abs(v - principal) > spec.tolerance
    )
    bipartite_criterion = spec.multiplicity_of(-principal) > 0

    return SpectrumClass(
        integral=integral,
        parity=parity,
        symmetric=symmetric,
        almost_symmetric=almost,
        principal_eigenvalue=principal.real,
        bipartite_criterion=bipartite_criterion,
    )


# ---------------------------------------------------------------------------
# dense symmetric eigensolver (cyclic Jacobi), the independent oracle


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    A = np.array(matrix, dtype=float)
    n = A.shape[0]
    if n == 0 or not np.array_equal(A, A.T):
        raise SpectrumError("jacobi needs a non-empty symmetric matrix")
    scale = max(1.0, float(np.linalg.norm(A)))
    skip = tol * scale / (2 * max(1, n))
    for _ in range(max_sweeps):
        off = A - np.diag(np.diag(A))
        if float(np.linalg.norm(off)) <= tol * scale:
            return np.sort(np.diag(A))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
    raise SpectrumError(f"jacobi did not converge within {max_sweeps} sweeps")


def spectrum_dense_symmetric(graph: Graph) -> Spectrum:
    if not graph.undirected:
        raise SpectrumError("dense route requires a symmetric adjacency")
    vals = jacobi_eigenvalues(graph.adjacency)
    return Spectrum.from_values(vals)


# ---------------------------------------------------------------------------
# power-trace moments, the oracle for directed spectra


def moments(graph: Graph, K: int) -> list[float]:
    """tr(A^k) for k = 1..K."""
    if K > graph.n:
        raise SpectrumError("K must not exceed the vertex count")
    A = graph.adjacency.astype(float)
    out = []
    P = A
    for _ in range(K):
        out.append(float(np.trace(P)))
        P = P @ A
    return out


def moment_check(spec: Spectrum, trace_moments: list[float], max_degree: int, n: int) -> bool:
    d = max(1, max_degree)
    for k, tr in enumerate(trace_moments, start=1):
        total = sum(m * v**k for v, m in spec.entries)
        if abs(total.imag) > MOMENT_REL_TOL * n * d**k:
            return False
        if abs(total.real - tr) > MOMENT_REL_TOL * n * d**k:
            return False
    return True


# ---------------------------------------------------------------------------
# exact spectra via abelian characters


def _character_reality_and_pairs(group: FiniteGroup):
    """Classify characters as real or into conjugate pairs (i < j)."""
    dims = np.asarray(group.abelian_decomposition, dtype=np.int64)
    exps = algebra.character_exponents(group)
    n = group.order
    if len(dims) == 0:
        return np.array([True]), []
    real = ((2 * exps) % dims == 0).all(axis=1)
    rep = np.ones(len(dims), dtype=np.int64)
    acc = 1
    for j in range(len(dims) - 1, -1, -1):
        rep[j] = acc
        acc *= dims[j]
    conj_idx = ((-exps) % dims) @ rep
    pairs = [(i, int(conj_idx[i])) for i in range(n) if i < conj_idx[i]]
    return real, pairs


def spectrum_exact_abelian(
    group: FiniteGroup,
    S: GroupSubset,
    kind: str,
    validate: bool = True,
) -> Spectrum:
    """Spectrum of X(G,S) (difference) or X^+(G,S) (sum) for abelian G.

    Difference: the multiset {chi(S)}.  Sum: real characters contribute
    chi(S) once; each conjugate pair contributes +|chi(S)| and -|chi(S)|.
    Validated against power traces of the actual adjacency (small n).
    """
    if not group.is_abelian:
        raise SpectrumError("character route requires an abelian group")
    if kind not in ("difference", "sum"):
        raise SpectrumError(f"bad kind {kind!r}")
    vals = algebra.character_sums_over(group, S)
    if kind == "difference":
        spec = Spectrum.from_values(vals)
    else:
        real, pairs = _character_reality_and_pairs(group)
        out: list[complex] = []
        for i in np.nonzero(real)[0]:
            v = vals[i]
            if abs(v.imag) > 1e-7:
                raise SpectrumError("real character produced a complex value")
            out.append(complex(v.real))
        for i, j in pairs:
            r = abs(vals[i])
            out.extend([complex(r), complex(-r)])
        spec = Spectrum.from_values(out)
    if validate and group.order <= 512:
        graph = cayley(group, S, kind)
        K = min(12, group.order)
        if not moment_check(spec, moments(graph, K), max(1, len(S)), group.order):
            raise SpectrumError(
                f"character spectrum failed the moment check for {group.label}"
            )
    return spec


# ---------------------------------------------------------------------------
# closed-form spectrum families


def mdcg_spectrum_formula(base: Spectrum, t_kind: str, group_order: int) -> Spectrum:
    """Mirror di-Cayley spectrum from the base Cayley spectrum.

    identity: {l ± 1}; S: {2l} and n zeros; S_and_identity: {2l + 1} and
    n copies of -1.  Output multiplicity is 2n.
    """
    if base.size != group_order:
        raise SpectrumError(
            f"base multiplicities sum to {base.size}, expected {group_order}"
        )
    pairs = list(base.entries)
    if t_kind == "identity":
        out = [(v + 1, m) for v, m in pairs] + [(v - 1, m) for v, m in pairs]
    elif t_kind == "S":
        out = [(2 * v, m) for v, m in pairs] + [(0j, group_order)]
    elif t_kind == "S_and_identity":
        out = [(2 * v + 1, m) for v, m in pairs] + [(-1 + 0j, group_order)]
    else:
        raise SpectrumError(f"bad T kind {t_kind!r}")
    return Spectrum.from_pairs(out, base.tolerance)


def product_spectrum_formula(s1: Spectrum, s2: Spectrum, kind: str) -> Spectrum:
    rules = {
        "cartesian": lambda a, b: a + b,
        "direct": lambda a, b: a * b,
        "strong": lambda a, b: a + b + a * b,
        "strong_sum": lambda a, b: a + a * b,
    }
    if kind not in rules:
        raise SpectrumError(f"bad product kind {kind!r}")
    rule = rules[kind]
    out = [
        (rule(v1, v2), m1 * m2)
        for v1, m1 in s1.entries
        for v2, m2 in s2.entries
    ]
    return Spectrum.from_pairs(out, max(s1.tolerance, s2.tolerance))


def looped_spectrum(spec: Spectrum) -> Spectrum:
    return spec.shifted(1)


def local_ring_unitary_spectrum(r: int, m: int, kind: str) -> Spectrum:
    """Spectrum of the unitary Cayley (sum) graph of a local ring (r, m).

    The sum formula is stated for odd r; for even r the difference
    formula applies to both kinds.
    """
    if r < 2 or m < 1 or r % m != 0:
        raise SpectrumError(f"invalid local parameters r={r}, m={m}")
    q = r // m
    if not _is_prime_power(q):
        raise SpectrumError(f"residue field size {q} is not a prime power")
    if kind not in ("difference", "sum"):
        raise SpectrumError(f"bad kind {kind!r}")
    if kind == "difference" or r % 2 == 0:
        if m >= 2:
            return Spectrum.from_pairs(
                [(r - m, 1), (0, (r // m) * (m - 1)), (-m, r // m - 1)]
            )
        return Spectrum.from_pairs([(r - 1, 1), (-1, r - 1)])
    if m >= 2:
        return Spectrum.from_pairs(
            [
                (r - m, 1),
                (m, (r - m) // (2 * m)),
                (0, (r // m) * (m - 1)),
                (-m, (r - m) // (2 * m)),
            ]
        )
    return Spectrum.from_pairs([(r - 1, 1), (1, (r - 1) // 2), (-1, (r - 1) // 2)])


def mdcg_local_ring_spectrum(r: int, m: int, t_kind: str, kind: str) -> Spectrum:
    """The printed closed forms for the six mirror graphs of an odd local ring.

    Note: the published closed forms for the S-and-identity case disagree
    with the actual spectra in both kinds (see the errata tests); they are
    returned verbatim here because this function implements the printed
    corollary.  The actual values follow from mdcg_spectrum_formula
    (difference kind) or the character route over the doubled group.
    """
    if r % 2 == 0:
        raise SpectrumError("the closed forms require odd local size r")
    if r < 3 or m < 1 or r % m != 0 or not _is_prime_power(r // m):
        raise SpectrumError(f"invalid local parameters r={r}, m={m}")
    if kind not in ("difference", "sum"):
        raise SpectrumError(f"bad kind {kind!r}")
    if t_kind not in ("identity", "S", "S_and_identity"):
        raise SpectrumError(f"bad T kind {t_kind!r}")

    q = r // m
    if t_kind == "identity":
        if m >= 2:
            diff = [
                (r - m + 1, 1), (r - m - 1, 1),
                (1, q * (m - 1)), (-1, q * (m - 1)),
                (-m + 1, (r - m) // m), (-m - 1, (r - m) // m),
            ]
            if kind == "difference":
                return Spectrum.from_pairs(diff)
            return Spectrum.from_pairs(
                [
                    (r - m + 1, 1), (r - m - 1, 1),
                    (m + 1, (r - m) // (2 * m)), (m - 1, (r - m) // (2 * m)),
                    (1, q * (m - 1)), (-1, q * (m - 1)),
                    (-m + 1, (r - m) // (2 * m)), (-m - 1, (r - m) // (2 * m)),
                ]
            )
        if kind == "difference":
            return Spectrum.from_pairs([(r, 1), (r - 2, 1), (0, r - 1), (-2, r - 1)])
        return Spectrum.from_pairs(
            [(r, 1), (r - 2, 1), (0, r - 1), (2, (r - 1) // 2), (-2, (r - 1) // 2)]
        )
    if t_kind == "S":
        if m >= 2:
            if kind == "difference":
                return Spectrum.from_pairs(
                    [(2 * (r - m), 1), (0, 2 * r - q), (-2 * m, (r - m) // m)]
                )
            return Spectrum.from_pairs(
                [
                    (2 * (r - m), 1), (0, 2 * r - q),
                    (2 * m, (r - m) // (2 * m)), (-2 * m, (r - m) // (2 * m)),
                ]
            )
        if kind == "difference":
            return Spectrum.from_pairs([(2 * (r - 1), 1), (-2, r - 1), (0, r)])
        return Spectrum.from_pairs(
            [(2 * (r - 1), 1), (0, r), (2, (r - 1) // 2), (-2, (r - 1) // 2)]
        )
    # S_and_identity
    if m >= 2:
        if kind == "difference":
            return Spectrum.from_pairs(
                [(2 * (r - m) + 1, 1), (1, 2 * r - q), (-2 * m + 1, (r - m) // m)]
            )
        return Spectrum.from_pairs(
            [
                (2 * (r - m) + 1, 1), (1, 2 * r - q),
                (2 * m + 1, (r - m) // (2 * m)), (-2 * m + 1, (r - m) // (2 * m)),
            ]
        )
    if kind == "difference":
        return Spectrum.from_pairs([(2 * r - 1, 1), (-1, r - 1), (1, r)])
    return Spectrum.from_pairs(
        [(2 * r - 1, 1), (1, r), (3, (r - 1) // 2), (-1, (r - 1) // 2)]
    )


def semiprimitive_gp_spectrum(k: int, q: int, kind: str = "difference") -> Spectrum:
    """Three-eigenvalue spectrum of a semiprimitive power-residue graph."""
    from .finring import semiprimitive_check, _prime_power

    ok, t = semiprimitive_check(k, q)
    if not ok or t is None:
        raise SpectrumError(f"(k={k}, q={q}) is not a semiprimitive pair")
    if kind not in ("difference", "sum"):
        raise SpectrumError(f"bad kind {kind!r}")
    p, m = _prime_power(q)
    n = (q - 1) // k
    sign = (-1) ** (m // (2 * t) + 1)
    root = p ** (m // 2)
    lam1 = (sign * (k - 1) * root - 1) // k
    lam2 = -(sign * root + 1) // k
    assert (sign * (k - 1) * root - 1) % k == 0 and (sign * root + 1) % k == 0
    if kind == "difference" or q % 2 == 0:
        return Spectrum.from_pairs([(n, 1), (lam1, n), (lam2, (k - 1) * n)])
    return Spectrum.from_pairs(
        [
            (n, 1),
            (lam1, n // 2), (-lam1, n // 2),
            (lam2, (k - 1) * n // 2), (-lam2, (k - 1) * n // 2),
        ]
    )


def hamming_spectrum(b: int, q: int) -> Spectrum:
    if b < 1 or q < 2:
        raise SpectrumError("hamming spectrum needs b >= 1 and q >= 2")
    pairs = [
        (ell * q - b, math.comb(b, ell) * (q - 1) ** (b - ell)) for ell in range(b + 1)
    ]
    return Spectrum.from_pairs(pairs)


def gcd_graph_spectrum(n: int, D) -> Spectrum:
    """Integer eigenvalues of the gcd graph X(Z_n, union of S_n(d), d in D)."""
    D = sorted(set(int(d) for d in D))
    for d in D:
        if d < 1 or d >= n or n % d != 0:
            raise SpectrumError(f"{d} is not a proper divisor of {n}")
    vals = [
        sum(algebra.ramanujan_sum(r, n // d) for d in D) for r in range(n)
    ]
    return Spectrum.from_values(vals)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            while q % d == 0:
                q //= d
            return q == 1
        d += 1
    return True


def spectrum_to_json(spec: Spectrum) -> str:
    import json

    cls = classify(spec)
    return json.dumps(
        {
            "entries": [
                {"re": v.real, "im": v.imag, "mult": m} for v, m in spec.entries
            ],
            "class": {
                "integral": cls.integral,
                "parity": cls.parity,
                "symmetric": cls.symmetric,
                "almost_symmetric": cls.almost_symmetric,
            },
        },
        separators=(",", ":"),
    )
