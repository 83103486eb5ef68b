"""Root systems of finite Coxeter groups in the simple-root coefficient basis.

A vector is a tuple of exact scalars: its coefficients over the simple roots.
Crystallographic types use ``int`` coefficients, H3/H4/I2(5) use
:class:`~coxorbit.scalar.GoldenInt`.  Roots are stored in lexicographic order
of their coefficient tuples.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence, Union

from . import catalog
from .catalog import CoxeterDatum, UnknownTypeError
from .linalg import det
from .scalar import (
    GoldenInt,
    TAU,
    exact_div,
    from_field,
    from_json as scalar_from_json,
    is_integral,
    sign,
    sort_key,
    to_field,
    to_json as scalar_to_json,
)

Vector = tuple

CLOSURE_CAP = 10 * 10 ** 4


class ClosureError(RuntimeError):
    """Root closure did not terminate; the Gram matrix is not of finite type."""


def vec_key(v: Sequence) -> tuple:
    return tuple(sort_key(x) for x in v)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def unit(n: int, i: int, golden: bool = False) -> Vector:
    one, zero = (GoldenInt(1, 0), GoldenInt(0, 0)) if golden else (1, 0)
    return tuple(one if k == i else zero for k in range(n))


# -- Gram matrices ------------------------------------------------------------


def _component_gram(label: str) -> list[list]:
    fam, n = catalog.parse_irreducible(label)
    r, edges = catalog.irreducible_edges(fam, n)
    g: list[list] = [[0] * r for _ in range(r)]
    if fam in "HI":
        for i in range(r):
            g[i][i] = GoldenInt(2, 0)
            for j in range(r):
                if i != j:
                    g[i][j] = GoldenInt(0, 0)
        for (i, j), m in edges.items():
            g[i][j] = g[j][i] = GoldenInt(-1, 0) if m == 3 else -TAU
        return g
    if fam in "ADE":
        diag = [2] * r
    elif fam == "B":
        diag = [4] * (r - 1) + [2]
    elif fam == "C":
        diag = [2] * (r - 1) + [4]
    elif fam == "F":
        diag = [4, 4, 2, 2]
    else:  # G2
        diag = [2, 6]
    for i in range(r):
        g[i][i] = diag[i]
    for (i, j), m in edges.items():
        # <a,b> = -|a||b| cos(pi/m), which is integral in these normalisations
        lo, hi = sorted((diag[i], diag[j]))
        if m == 3:
            val = -lo // 2
        elif m == 4:
            val = -lo
        else:  # m == 6, G2
            val = -3
        g[i][j] = g[j][i] = val
    return g


def build_gram(d: Union[CoxeterDatum, str]) -> tuple[tuple, ...]:
    """Gram matrix of the simple roots in the package's normalisation.

    Simply laced and golden types have squared length 2 and off-diagonal
    0, -1 or -tau.  B, C, F4 use lengths 2 (short) and 4 (long); G2 uses 2 and 6.
    """
    if isinstance(d, str):
        d = catalog.datum(d)
    blocks = [_component_gram(p) for p in d.components]
    golden = any(isinstance(x, GoldenInt) for b in blocks for row in b for x in row)
    zero = GoldenInt(0, 0) if golden else 0
    n = d.rank
    g = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                g[off + i][off + j] = GoldenInt.coerce(x) if golden else x
        off += len(b)
    gram = tuple(tuple(row) for row in g)
    check_gram(gram)
    return gram


def check_gram(gram: Sequence[Sequence]) -> None:
    """Raise ``ValueError`` unless the Gram matrix is symmetric positive definite."""
    n = len(gram)
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise ValueError("Gram matrix is not symmetric")
    for k in range(1, n + 1):
        minor = det([list(row[:k]) for row in gram[:k]])
        if sign(minor) <= 0:
            raise ValueError(f"Gram matrix is not positive definite (minor {k} = {minor})")


_COS2 = {2: 0, 3: Fraction(1, 4), 4: Fraction(1, 2), 6: Fraction(3, 4)}


def coxeter_matrix_from_gram(gram: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Recover m_ij from 4<a,b>^2 = 4 cos^2(pi/m) <a,a><b,b>."""
    n = len(gram)
    out = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lhs = 4 * gram[i][j] * gram[i][j]
            prod = gram[i][i] * gram[j][j]
            found = None
            for m, c in _COS2.items():
                if lhs == from_field(to_field(prod) * to_field(4 * c)):
                    found = m
                    break
            # m = 5: 4cos^2(pi/5) = tau^2 = 1 + tau
            if found is None and isinstance(lhs, GoldenInt) and lhs == prod * GoldenInt(1, 1):
                found = 5
            if found is None:
                raise ValueError(f"Gram entry ({i},{j}) gives no supported bond")
            out[i][j] = found
    return tuple(tuple(r) for r in out)


def datum_from_gram(gram: Sequence[Sequence]) -> CoxeterDatum:
    """Coxeter datum in the node order of ``gram``, labelled via the catalog."""
    cm = coxeter_matrix_from_gram(gram)
    n = len(gram)
    g = catalog.make_graph(range(n), {(i, j): cm[i][j] for i in range(n) for j in range(i + 1, n) if cm[i][j] > 2})
    label, parts = catalog.identify(g)
    return CoxeterDatum(label=label, rank=n, coxeter_matrix=cm, components=tuple(p for p, _ in parts))


# -- the root system ----------------------------------------------------------


class RootSystem:
    """Root system with its simple system, Gram data and index tables.

    Instances are immutable after construction.  ``roots`` is sorted
    canonically and every table is indexed by position in ``roots``.
    """

    def __init__(self, datum: CoxeterDatum, gram: Sequence[Sequence], roots: Iterable[Sequence]) -> None:
        self.datum = datum
        self.label = datum.label
        self.rank = n = datum.rank
        self.gram = tuple(tuple(r) for r in gram)
        self.golden = any(isinstance(x, GoldenInt) for r in self.gram for x in r)
        self.roots: tuple[Vector, ...] = tuple(sorted((tuple(r) for r in roots), key=vec_key))
        self.index: dict[Vector, int] = {r: i for i, r in enumerate(self.roots)}
        if len(self.index) != len(self.roots):
            raise ValueError("duplicate roots")
        pos = []
        for i, r in enumerate(self.roots):
            signs = {sign(x) for x in r} - {0}
            if not signs:
                raise ValueError("zero vector in root set")
            if len(signs) > 1:
                raise ValueError(f"root {r} is not sign-coherent")
            if signs == {1}:
                pos.append(i)
        self.positive = frozenset(pos)
        self.negative_of = tuple(self.index[neg(r)] for r in self.roots)
        # cartan[j][k] = 2 <a_k, a_j> / <a_j, a_j>, so s_j(v)_j = v_j - sum_k v_k cartan[j][k]
        self.cartan = tuple(
            tuple(exact_div(2 * self.gram[k][j], self.gram[j][j]) for k in range(n)) for j in range(n)
        )
        self.simple_index = tuple(self.index[unit(n, i, self.golden)] for i in range(n))
        self.simple_perm = tuple(
            tuple(self.index[self.reflect_simple(j, r)] for r in self.roots) for j in range(n)
        )
        self.norms = tuple(self.norm(r) for r in self.roots)

    # -- basic forms ----------------------------------------------------------

    def zero(self) -> Vector:
        z = GoldenInt(0, 0) if self.golden else 0
        return (z,) * self.rank

    def pair(self, u: Sequence, v: Sequence):
        """<u, v> for vectors given by coefficients over the simple roots."""
        g = self.gram
        total = 0
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = g[i]
            for j, vj in enumerate(v):
                if vj != 0:
                    total = total + ui * row[j] * vj
        return total

    def pair_simple(self, v: Sequence, j: int):
        """<v, alpha_j>."""
        total = 0
        for k, vk in enumerate(v):
            if vk != 0:
                total = total + vk * self.gram[k][j]
        return total

    def norm(self, v: Sequence):
        return self.pair(v, v)

    def reflect_simple(self, j: int, v: Sequence) -> Vector:
        """s_j(v): only coordinate j changes."""
        row = self.cartan[j]
        c = 0
        for k, vk in enumerate(v):
            if vk != 0:
                c = c + vk * row[k]
        if c == 0:
            return tuple(v)
        out = list(v)
        out[j] = v[j] - c
        return tuple(out)

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self.index

    # -- derived tables ---------------------------------------------------------

    @cached_property
    def orbit_class(self) -> tuple[int, ...]:
        """W-orbit id of every root (BFS under the simple reflections)."""
        cls = [-1] * len(self.roots)
        next_id = 0
        for start in range(len(self.roots)):
            if cls[start] >= 0:
                continue
            cls[start] = next_id
            stack = [start]
            while stack:
                k = stack.pop()
                for perm in self.simple_perm:
                    t = perm[k]
                    if cls[t] < 0:
                        cls[t] = next_id
                        stack.append(t)
            next_id += 1
        return tuple(cls)

    @cached_property
    def orbit_classes(self) -> tuple[frozenset, ...]:
        groups: dict[int, set] = {}
        for k, c in enumerate(self.orbit_class):
            groups.setdefault(c, set()).add(k)
        return tuple(frozenset(groups[c]) for c in sorted(groups))

    @cached_property
    def length_classes(self) -> dict:
        """Partition of root indices by squared length."""
        out: dict = {}
        for k, nrm in enumerate(self.norms):
            out.setdefault(nrm, set()).add(k)
        return {nrm: frozenset(ks) for nrm, ks in out.items()}

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(self.roots[k] for k in sorted(self.positive))

    @cached_property
    def simple_pair_signs(self) -> tuple[tuple[int, ...], ...]:
        """sign <root_k, alpha_j> for every root k and simple j."""
        return tuple(tuple(sign(self.pair_simple(r, j)) for j in range(self.rank)) for r in self.roots)

    @cached_property
    def coxeter_graph(self) -> dict[int, dict[int, int]]:
        return catalog.make_graph(range(self.rank), self.datum.edges())

    def root_perm(self, k: int) -> tuple[int, ...]:
        """Permutation of root indices induced by the reflection in root k."""
        cache = self.__dict__.setdefault("_root_perm_cache", {})
        if k not in cache:
            alpha = self.roots[k]
            cache[k] = tuple(self.index[reflect(self, alpha, r)] for r in self.roots)
        return cache[k]

    def support_mask(self, k: int) -> int:
        m = 0
        for i, x in enumerate(self.roots[k]):
            if x != 0:
                m |= 1 << i
        return m

    def parabolic_roots(self, J: Iterable[int]) -> frozenset:
        """Indices of Phi_J: roots supported on J."""
        jm = 0
        for j in J:
            jm |= 1 << j
        return frozenset(k for k in range(len(self.roots)) if self.support_mask(k) & ~jm == 0)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r}, {len(self.roots)} roots)"

    # -- serialisation ----------------------------------------------------------

    def to_json(self) -> dict:
        ser = _ser_golden if self.golden else scalar_to_json
        return {
            "label": self.label,
            "rank": self.rank,
            "gram": [[ser(x) for x in row] for row in self.gram],
            "roots": [[ser(x) for x in r] for r in self.roots],
            "positive": sorted(self.positive),
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "RootSystem":
        gram = [[scalar_from_json(x) for x in row] for row in doc["gram"]]
        roots = [tuple(scalar_from_json(x) for x in r) for r in doc["roots"]]
        try:
            d = catalog.datum(doc["label"])
            if d.rank != len(gram) or d.coxeter_matrix != coxeter_matrix_from_gram(gram):
                raise UnknownTypeError(doc["label"])
        except UnknownTypeError:
            d = datum_from_gram(gram)
        return cls(d, gram, roots)


def _ser_golden(x):
    return scalar_to_json(GoldenInt.coerce(x)) if not isinstance(x, Fraction) else scalar_to_json(x)


# -- construction -------------------------------------------------------------


def generate_roots(d: Union[CoxeterDatum, str], gram: Sequence[Sequence] | None = None) -> RootSystem:
    """Close the simple roots under the simple reflections (breadth first)."""
    if isinstance(d, str):
        d = catalog.datum(d)
    if gram is None:
        gram = build_gram(d)
    else:
        check_gram(gram)
    gram = tuple(tuple(r) for r in gram)
    n = d.rank
    golden = any(isinstance(x, GoldenInt) for r in gram for x in r)
    cartan = [[exact_div(2 * gram[k][j], gram[j][j]) for k in range(n)] for j in range(n)]
    seen = {unit(n, i, golden) for i in range(n)}
    frontier = list(seen)
    steps = 0
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(n):
                steps += 1
                if steps > CLOSURE_CAP:
                    raise ClosureError(f"root closure for {d.label} exceeded {CLOSURE_CAP} steps")
                c = sum((v[k] * cartan[j][k] for k in range(n) if v[k] != 0), 0)
                if c == 0:
                    continue
                w = list(v)
                w[j] = v[j] - c
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return RootSystem(d, gram, seen)


_CACHE: dict[str, RootSystem] = {}


def get(label: str) -> RootSystem:
    """Cached catalog root system for a label."""
    d = catalog.datum(label)
    if d.label not in _CACHE:
        _CACHE[d.label] = generate_roots(d)
    return _CACHE[d.label]


def from_gram(gram: Sequence[Sequence]) -> RootSystem:
    """Root system generated by an arbitrary finite-type Gram matrix."""
    return generate_roots(datum_from_gram(gram), gram)


# -- operations ---------------------------------------------------------------


def reflect(s: RootSystem, alpha: Sequence, v: Sequence) -> Vector:
    """s_alpha(v) = v - <v, alpha^vee> alpha, for a root alpha of s."""
    alpha = tuple(alpha)
    if alpha not in s.index:
        raise ValueError(f"{alpha} is not a root of {s.label}")
    c = exact_div(2 * s.pair(v, alpha), s.norms[s.index[alpha]])
    if c == 0:
        return tuple(v)
    return tuple(x - c * a for x, a in zip(v, alpha))


def coroot(s: RootSystem, alpha: Sequence) -> Vector:
    """2 alpha / <alpha, alpha>, over the fraction field when necessary."""
    nrm = s.norm(alpha)
    f = to_field(2) / to_field(nrm)
    return tuple(from_field(to_field(a) * f) for a in alpha)


def support(alpha: Sequence) -> frozenset:
    """Indices of the simple roots with non-zero coefficient."""
    supp = frozenset(i for i, x in enumerate(alpha) if x != 0)
    if not supp:
        raise ValueError("support of the zero vector")
    return supp


def non_integral_pairing(s: RootSystem):
    """A pair (alpha, beta) with <alpha, beta^vee> not in Z, or None."""
    gcols = [tuple(s.pair_simple(b, j) for j in range(s.rank)) for b in s.roots]
    for bi, beta in enumerate(s.roots):
        nb = s.norms[bi]
        gb = gcols[bi]
        for alpha in s.roots:
            p = sum((a * x for a, x in zip(alpha, gb) if a != 0), 0)
            q = from_field(to_field(2 * p) / to_field(nb))
            if not is_integral(q):
                return alpha, beta
    return None


def is_crystallographic(s: RootSystem) -> bool:
    """True iff <alpha, beta^vee> is an integer for all roots alpha, beta."""
    return non_integral_pairing(s) is None


def _component_of(s: RootSystem) -> list[int]:
    comp = [0] * s.rank
    for c, (_, rng) in enumerate(catalog.component_blocks(s.datum)):
        for i in rng:
            comp[i] = c
    return comp


def rescale(s: RootSystem, d: Union[Mapping, Callable]) -> RootSystem:
    """Replace every root gamma by d_gamma * gamma.

    ``d`` maps a root (coefficient tuple) to a positive rational, either as a
    mapping or a callable; it must be constant on W-orbits.  The result keeps
    the Coxeter datum and has simple roots d_alpha * alpha.
    """
    get_d = d if callable(d) else (lambda r: d[tuple(r)])
    factors = []
    for r in s.roots:
        f = get_d(r)
        if sign(f) <= 0:
            raise ValueError("rescaling factors must be positive")
        factors.append(Fraction(f))
    cls = s.orbit_class
    by_class: dict[int, Fraction] = {}
    for k, f in enumerate(factors):
        c = cls[k]
        if by_class.setdefault(c, f) != f:
            raise ValueError("rescaling factors are not constant on W-orbits")
    dsimple = [factors[s.simple_index[i]] for i in range(s.rank)]
    n = s.rank
    gram = [[from_field(to_field(s.gram[i][j]) * to_field(dsimple[i] * dsimple[j])) for j in range(n)] for i in range(n)]
    roots = []
    for k, r in enumerate(s.roots):
        dg = factors[k]
        roots.append(tuple(from_field(to_field(a) * to_field(dg / dsimple[i])) for i, a in enumerate(r)))
    for x in [x for row in gram for x in row] + [x for r in roots for x in r]:
        if s.golden and not isinstance(x, (GoldenInt, int)):
            raise ValueError("rescaling a golden system must keep coefficients in Z[tau]")
    return RootSystem(s.datum, gram, roots)


def _dual_label(label: str) -> str:
    out = []
    for p in catalog.split_label(label):
        fam, n = catalog.parse_irreducible(p)
        if fam == "B" and n >= 3:
            p = f"C{n}"
        elif fam == "C":
            p = f"B{n}"
        out.append(p)
    return "x".join(out)


def dual_system(s: RootSystem) -> RootSystem:
    """The coroots, as a root system over the simple coroots.

    Obtained by rescaling with d = 2/<gamma, gamma>, then multiplying the form
    by one global positive rational so the shortest simple root has squared
    length 2.  Root i of the result need not be the coroot of root i of ``s``;
    use :func:`dual_map` for the correspondence.
    """
    r = rescale(s, lambda g: Fraction(2) / Fraction(_as_rational(s.norm(g))))
    diag = [_as_rational(r.gram[i][i]) for i in range(r.rank)]
    c = Fraction(2) / min(diag)
    gram = [[from_field(to_field(x) * to_field(c)) for x in row] for row in r.gram]
    lab = _dual_label(s.label)
    d = catalog.datum(lab)
    d = CoxeterDatum(lab, d.rank, s.datum.coxeter_matrix, d.components)
    return RootSystem(d, gram, r.roots)


def _as_rational(x) -> Fraction:
    if isinstance(x, GoldenInt):
        if x.b:
            raise ValueError(f"{x} is not rational")
        return Fraction(x.a)
    return Fraction(x)


def dual_map(s: RootSystem, dual: RootSystem) -> dict[int, int]:
    """Root index in ``s`` -> index of its coroot in ``dual``."""
    out = {}
    for k, r in enumerate(s.roots):
        nrm = s.norms[k]
        v = tuple(from_field(to_field(a) * to_field(s.gram[i][i]) / to_field(nrm)) for i, a in enumerate(r))
        out[k] = dual.index[v]
    return out


def parabolic_subsystem(s: RootSystem, K: Sequence[int]) -> RootSystem:
    """Phi_K as a root system in its own right, with coordinates restricted to K.

    Node ``i`` of the result is ``K[i]`` of ``s``.
    """
    K = list(K)
    gram = [[s.gram[i][j] for j in K] for i in K]
    ks = s.parabolic_roots(K)
    roots = [tuple(s.roots[k][i] for i in K) for k in sorted(ks)]
    return RootSystem(datum_from_gram(gram), gram, roots)
