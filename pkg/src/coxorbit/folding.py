"""Folding of H3, H4 and I2(5) into simply-laced integer root systems.

A Z[tau]-vector with coefficients a_i + b_i tau over the simple roots becomes
the integer vector (a_1, ..., a_n, b_1, ..., b_n) over the doubled basis
Pi followed by tau Pi.  The integer form is (x, y) = theta(<x, y>), where
theta(a + b tau) = a.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import catalog
from .certificate import FAIL, PASS, Certificate
from .linalg import rank
from .rootsystem import RootSystem, Vector, from_gram, generate_roots, get, unit
from .scalar import TAU, GoldenInt, sign, theta
from .weyl import enumerate_group, perm_length

FOLD_TARGET = {"H4": "E8", "H3": "D6", "I2(5)": "A4"}

# <alpha, beta> -> ((a,b), (a,tb), (ta,b), (ta,tb))
IP_TABLE = {
    GoldenInt(0, 0): (0, 0, 0, 0),
    GoldenInt(1, 0): (1, 0, 0, 1),
    GoldenInt(-1, 1): (-1, 1, 1, 0),
    GoldenInt(0, 1): (0, 1, 1, 1),
    GoldenInt(2, 0): (2, 0, 0, 2),
}
IP_TABLE.update({GoldenInt(-k.a, -k.b): tuple(-x for x in v) for k, v in list(IP_TABLE.items())})

# <alpha, beta> values allowed between distinct members of a simple system
_SIMPLE_PAIRINGS = {GoldenInt(0, 0), GoldenInt(-1, 0), GoldenInt(0, -1)}


def to_u(v: Sequence) -> tuple[int, ...]:
    """Z[tau]-coefficients to integer coordinates over Pi and tau Pi."""
    g = [GoldenInt.coerce(x) for x in v]
    return tuple(x.a for x in g) + tuple(x.b for x in g)


def from_u(x: Sequence[int]) -> Vector:
    n = len(x) // 2
    return tuple(GoldenInt(x[i], x[n + i]) for i in range(n))


def tau_u(x: Sequence[int]) -> tuple[int, ...]:
    """Multiplication by tau: (a, b) -> (b, a + b) in each coordinate."""
    n = len(x) // 2
    return tuple(x[n:]) + tuple(x[i] + x[n + i] for i in range(n))


def dot(F: Sequence[Sequence[int]], x: Sequence[int], y: Sequence[int]) -> int:
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = F[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
    return total


def int_reflect(F: Sequence[Sequence[int]], delta: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """r_delta(x) = x - (x, delta) delta, for (delta, delta) = 2."""
    c = dot(F, x, delta)
    if c == 0:
        return tuple(x)
    return tuple(a - c * d for a, d in zip(x, delta))


@dataclass(frozen=True)
class Bundle:
    base: int  # index of alpha in the source root list
    pair: tuple[int, int]  # indices of alpha and tau alpha in psi


class FoldedSystem:
    """Psi = Phi disjoint-union tau Phi with its integer form.

    ``psi[k]`` is root k of the source and ``psi[N + k]`` is tau times it.
    """

    def __init__(self, source: RootSystem) -> None:
        if source.label not in FOLD_TARGET:
            raise ValueError(f"cannot fold {source.label}: only H3, H4 and I2(5)")
        n = source.rank
        if any(source.gram[i][i] != 2 for i in range(n)):
            raise ValueError("source must have <alpha, alpha> = 2 for simple roots")
        self.source = source
        self.rank = n
        self.lattice_rank = 2 * n
        self.delta = tuple(unit(2 * n, i) for i in range(2 * n))
        tp = (GoldenInt(1, 0), TAU)
        self.form = tuple(
            tuple(theta(tp[p] * tp[q] * GoldenInt.coerce(source.gram[i][j])) for q in (0, 1) for j in range(n))
            for p in (0, 1)
            for i in range(n)
        )
        N = len(source.roots)
        base = [to_u(r) for r in source.roots]
        scaled = [to_u(tuple(TAU * x for x in r)) for r in source.roots]
        self.psi: tuple[tuple[int, ...], ...] = tuple(base + scaled)
        self.index = {x: k for k, x in enumerate(self.psi)}
        if len(self.index) != 2 * N:
            raise ValueError("Phi and tau Phi overlap")
        self.bundles = tuple(Bundle(k, (k, N + k)) for k in range(N))
        self.N = N

    # -- tables ---------------------------------------------------------------

    def ip(self, k: int, l: int) -> int:
        return dot(self.form, self.psi[k], self.psi[l])

    @cached_property
    def form_rows(self) -> list[tuple[int, ...]]:
        """F psi_k for every k, so (psi_k, x) is a plain dot product."""
        F = self.form
        m = self.lattice_rank
        return [tuple(sum(F[i][j] * x[j] for j in range(m) if x[j]) for i in range(m)) for x in self.psi]

    def ip_fast(self, k: int, l: int) -> int:
        return sum(a * b for a, b in zip(self.form_rows[k], self.psi[l]))

    @cached_property
    def reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        """Permutation of psi induced by the integer reflection in each psi_k."""
        out = []
        for k, d in enumerate(self.psi):
            Fd = self.form_rows[k]
            perm = []
            for x in self.psi:
                c = sum(a * b for a, b in zip(Fd, x))
                perm.append(self.index[tuple(a - c * b for a, b in zip(x, d))] if c else self.index[x])
            out.append(tuple(perm))
        return tuple(out)

    @cached_property
    def positive(self) -> frozenset:
        return frozenset(k for k, x in enumerate(self.psi) if max(x) > 0 and min(x) >= 0)

    @cached_property
    def source_pairs(self) -> tuple[tuple[GoldenInt, ...], ...]:
        """<alpha_k, alpha_l> for all source roots."""
        s = self.source
        return tuple(tuple(GoldenInt.coerce(s.pair(a, b)) for b in s.roots) for a in s.roots)

    @cached_property
    def psi_pairs(self) -> tuple[tuple[int, ...], ...]:
        """(psi_k, psi_l) for all k, l."""
        return tuple(tuple(sum(a * b for a, b in zip(row, y)) for y in self.psi) for row in self.form_rows)

    def partner(self, k: int) -> int:
        return k + self.N if k < self.N else k - self.N

    @cached_property
    def identified(self) -> tuple[str, list]:
        return identify_type(self.delta, self.form)

    def as_root_system(self) -> RootSystem:
        """Psi regenerated from the integer form as an ordinary root system."""
        return from_gram(self.form)

    def to_json(self) -> dict:
        return {
            "label": f"fold({self.source.label})",
            "rank": self.lattice_rank,
            "gram": [list(r) for r in self.form],
            "roots": [list(x) for x in self.psi],
            "positive": sorted(self.positive),
            "bundles": [list(b.pair) for b in self.bundles],
            "identified": self.identified[0],
        }


def fold(s: RootSystem) -> FoldedSystem:
    return FoldedSystem(s)


def identify_type(simple_system: Sequence[Sequence[int]], form: Sequence[Sequence[int]]) -> tuple[str, list]:
    """Catalog label of the simply-laced system with the given simple roots.

    Returns the product label and the per-component ``(label, node map)`` list
    of :func:`catalog.identify`.
    """
    vs = [tuple(v) for v in simple_system]
    for a, b in combinations(range(len(vs)), 2):
        if dot(form, vs[a], vs[b]) not in (0, -1):
            raise ValueError("simple roots must pair to 0 or -1")
    if rank(vs) != len(vs):
        raise ValueError("simple roots are not independent")
    edges = {(a, b): 3 for a, b in combinations(range(len(vs)), 2) if dot(form, vs[a], vs[b]) == -1}
    return catalog.identify(catalog.make_graph(range(len(vs)), edges))


def replaced_label(label: str) -> str:
    """The folded type: H4 -> E8, H3 -> D6, I2(5) -> A4, simply laced X -> X x X."""
    parts = []
    for p in catalog.split_label(label):
        if p in FOLD_TARGET:
            parts.append(FOLD_TARGET[p])
        else:
            fam, _ = catalog.parse_irreducible(p)
            if fam not in "ADE":
                raise ValueError(f"{p} has no folding")
            parts.extend([p, p])
    parts.sort(key=catalog.label_sort_key)
    return "x".join(parts)


# -- checks ---------------------------------------------------------------


def _label(f: FoldedSystem) -> str:
    return f.source.label


def check_ip_table(f: FoldedSystem) -> Certificate:
    """The four integer products of every pair match the table row of <alpha, beta>."""
    s = f.source
    N = f.N
    for k in range(N):
        for l in range(N):
            g = GoldenInt.coerce(s.pair(s.roots[k], s.roots[l]))
            row = IP_TABLE.get(g)
            got = (f.ip_fast(k, l), f.ip_fast(k, N + l), f.ip_fast(N + k, l), f.ip_fast(N + k, N + l))
            if row is None or got != row:
                return Certificate(
                    _label(f), "fold-table", FAIL, alpha=(s.roots[k], s.roots[l]),
                    witness={"pairing": g, "products": got, "expected": row},
                )
    return Certificate(_label(f), "fold-table", PASS, detail={"pairs": N * N})


def _check_component_rule(f: FoldedSystem, subsystems: Iterable[frozenset]) -> dict | None:
    """Each phi(Gamma) has the type of Gamma with components replaced."""
    from .rootsystem import datum_from_gram

    s = f.source
    N = f.N
    seen: dict[tuple, str] = {}
    seen_psi: dict[tuple, str] = {}
    for gamma in sorted(sorted(g) for g in subsystems):
        gp = f.source_pairs
        gram = tuple(tuple(gp[a][b] for b in gamma) for a in gamma)
        if gram not in seen:
            seen[gram] = datum_from_gram(gram).label
        members = list(gamma) + [N + k for k in gamma]
        pp = f.psi_pairs
        prods = tuple(tuple(pp[a][b] for b in members) for a in members)
        if prods not in seen_psi:
            seen_psi[prods] = identify_type([f.psi[k] for k in members], f.form)[0]
        if replaced_label(seen[gram]) != seen_psi[prods]:
            return {"gamma": [s.roots[k] for k in gamma], "type": seen[gram], "folded": seen_psi[prods]}
    return None


def check_fold_type(f: FoldedSystem, subsystems: Iterable[frozenset] | None = None) -> Certificate:
    """Identified type, root count, and Psi against an independent closure of Delta.

    With ``subsystems`` also checks the component replacement rule on each of them.
    """
    label, parts = f.identified
    expected = replaced_label(f.source.label)
    problems = {}
    if label != expected:
        problems["label"] = label
    if len(f.psi) != 2 * len(f.source.roots):
        problems["size"] = len(f.psi)
    if any(f.ip_fast(k, k) != 2 for k in range(len(f.psi))):
        problems["norm"] = "some (alpha, alpha) != 2"
    # regenerate the identified type and carry it over with the node map
    ref = generate_roots(label)
    glob = {}
    off = 0
    for lab, node_map in parts:
        for u, t in node_map.items():
            glob[u] = off + t
        fam, n = catalog.parse_irreducible(lab)
        off += n
    m = f.lattice_rank
    for u in range(m):
        for v in range(m):
            if f.form[u][v] != ref.gram[glob[u]][glob[v]]:
                problems["gram"] = (u, v)
    carried = {tuple(r[glob[u]] for u in range(m)) for r in ref.roots}
    if carried != set(f.psi):
        problems["roots"] = sorted(carried ^ set(f.psi))[:4]
    detail = {"identified": label, "psi": len(f.psi)}
    if subsystems is not None:
        bad = _check_component_rule(f, subsystems)
        detail["subsystems"] = len(subsystems)
        if bad is not None:
            problems["subsystem"] = bad
    if problems:
        return Certificate(_label(f), "fold-type", FAIL, witness=problems, detail=detail)
    return Certificate(_label(f), "fold-type", PASS, detail=detail)


def check_reflection_factorization(f: FoldedSystem) -> Certificate:
    """s_alpha = r_alpha r_{tau alpha} = r_{tau alpha} r_alpha on every basis vector of U."""
    s = f.source
    F = f.form
    N = f.N
    m = f.lattice_rank
    for k, alpha in enumerate(s.roots):
        a, ta = f.psi[k], f.psi[N + k]
        for u in range(m):
            e = unit(m, u)
            gv = from_u(e)
            c = s.pair(gv, alpha)  # <alpha, alpha> = 2, so this is <v, alpha^vee>
            sv = to_u(tuple(GoldenInt.coerce(x) - c * y for x, y in zip(gv, alpha)))
            one = int_reflect(F, ta, int_reflect(F, a, e))
            other = int_reflect(F, a, int_reflect(F, ta, e))
            if not (one == other == sv):
                return Certificate(
                    _label(f), "fold-reflections", FAIL, alpha=alpha,
                    witness={"u": u + 1, "s_alpha": sv, "r_a_then_r_ta": one, "r_ta_then_r_a": other},
                )
    return Certificate(_label(f), "fold-reflections", PASS, detail={"roots": N, "basis": m})


def psi_generator_perms(f: FoldedSystem) -> list[tuple[int, ...]]:
    """s_i on Psi computed as r_{alpha_i} after r_{tau alpha_i}."""
    N = f.N
    out = []
    for i in f.source.simple_index:
        ra, rta = f.reflection_perms[i], f.reflection_perms[N + i]
        out.append(tuple(rta[ra[k]] for k in range(len(f.psi))))
    return out


def check_length_doubling(f: FoldedSystem, limit: int = 20000) -> Certificate:
    """l'(w) = 2 l(w) for every w in W, with w acting on Psi through integer reflections."""
    s = f.source
    gens = psi_generator_perms(f)
    elements = enumerate_group(s, limit)
    # words come out of a breadth-first search, so their length is l(w)
    psi_perm = {(): tuple(range(len(f.psi)))}
    pos = f.positive
    worst = 0
    for p, word in elements:
        if word:
            q = psi_perm[word[:-1]]
            g = gens[word[-1]]
            psi_perm[word] = tuple(q[t] for t in g)
        pp = psi_perm[word]
        l = perm_length(s, p)
        l2 = sum(1 for k in pos if pp[k] not in pos)
        worst = max(worst, l)
        if l != len(word) or l2 != 2 * l:
            return Certificate(
                _label(f), "fold-length", FAIL,
                witness={"word": [j + 1 for j in word], "l": l, "l_prime": l2, "depth": len(word)},
            )
    return Certificate(_label(f), "fold-length", PASS, detail={"elements": len(elements), "max_length": worst})


def _cliques(n: int, adj: Sequence[int], max_size: int) -> Iterable[tuple[int, ...]]:
    """All cliques of size 1..max_size of a graph given by neighbour bitmasks."""

    def grow(clique: tuple[int, ...], cand: int):
        yield clique
        if len(clique) == max_size:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from grow(clique + (v,), cand & adj[v])

    for v in range(n):
        higher = adj[v] & ~((1 << (v + 1)) - 1)
        yield from grow((v,), higher)


def phi_simple_subsystems(f: FoldedSystem, max_size: int) -> set[frozenset]:
    """Simple subsystems of Phi: pairings in {0, -1, -tau}, then Q(tau)-independent."""
    s = f.source
    N = f.N
    adj = [0] * N
    for k in range(N):
        for l in range(N):
            if k != l and f.source_pairs[k][l] in _SIMPLE_PAIRINGS:
                adj[k] |= 1 << l
    out = set()
    for c in _cliques(N, adj, max_size):
        if rank([s.roots[k] for k in c]) == len(c):
            out.add(frozenset(c))
    return out


def psi_bundle_subsystems(f: FoldedSystem, max_bundles: int) -> set[frozenset]:
    """Simple subsystems of Psi made of whole bundles, as sets of bundle bases."""
    N = f.N
    adj = [0] * N
    for k in range(N):
        for l in range(N):
            if k == l:
                continue
            prods = (f.ip_fast(k, l), f.ip_fast(k, N + l), f.ip_fast(N + k, l), f.ip_fast(N + k, N + l))
            if all(p in (0, -1) for p in prods):
                adj[k] |= 1 << l
    out = set()
    for c in _cliques(N, adj, max_bundles):
        vecs = [f.psi[k] for k in c] + [f.psi[N + k] for k in c]
        if all(f.ip_fast(k, N + k) == 0 for k in c) and rank(vecs) == len(vecs):
            out.add(frozenset(c))
    return out


def default_max_size(f: FoldedSystem) -> int:
    return 3 if f.source.label == "H4" else f.rank


def _random_word(rng: random.Random, n: int, max_len: int) -> list[int]:
    return [rng.randrange(n) for _ in range(rng.randint(0, max_len))]


def check_phi_bijection(
    f: FoldedSystem, max_size: int | None = None, samples: int = 200, rng: random.Random | None = None,
    subsystems: set[frozenset] | None = None,
) -> Certificate:
    """Gamma -> Gamma u tau Gamma is a bijection onto bundle-union simple subsystems, W-equivariantly."""
    max_size = default_max_size(f) if max_size is None else max_size
    if max_size > f.rank:
        raise ValueError("max_size exceeds the rank of the source")
    rng = rng or random.Random(0)
    phi_side = subsystems if subsystems is not None else phi_simple_subsystems(f, max_size)
    psi_side = psi_bundle_subsystems(f, max_size)
    detail = {"max_size": max_size, "subsystems": len(phi_side)}
    if phi_side != psi_side:
        diff = sorted(sorted(g) for g in phi_side ^ psi_side)[:4]
        return Certificate(
            _label(f), "fold-phi", FAIL,
            witness={"mismatch": [[f.source.roots[k] for k in g] for g in diff]}, detail=detail,
        )
    # equivariance on sampled (w, Gamma)
    s = f.source
    gens = psi_generator_perms(f)
    ordered = sorted(sorted(g) for g in phi_side)
    N = f.N
    for _ in range(samples):
        word = _random_word(rng, s.rank, 2 * s.rank + 4)
        gamma = ordered[rng.randrange(len(ordered))]
        img_phi = list(gamma)
        img_psi = list(gamma) + [N + k for k in gamma]
        for j in reversed(word):
            img_phi = [s.simple_perm[j][k] for k in img_phi]
            img_psi = [gens[j][k] for k in img_psi]
        expect = set(img_phi) | {N + k for k in img_phi}
        if frozenset(img_phi) not in phi_side or set(img_psi) != expect:
            return Certificate(
                _label(f), "fold-phi", FAIL,
                witness={"word": [j + 1 for j in word], "gamma": [s.roots[k] for k in gamma]}, detail=detail,
            )
    detail["equivariance_samples"] = samples
    return Certificate(_label(f), "fold-phi", PASS, detail=detail)


def check_chamber_equivalence(f: FoldedSystem, max_size: int | None = None, subsystems: set[frozenset] | None = None) -> Certificate:
    """alpha in C_{W_Gamma} iff tau alpha in C_{W'_Gamma'} for every Gamma and alpha."""
    s = f.source
    N = f.N
    max_size = default_max_size(f) if max_size is None else max_size
    gammas = subsystems if subsystems is not None else phi_simple_subsystems(f, max_size)
    # bit k set iff root k passes the test against the given root
    phi_mask = []
    psi_mask = []
    for g in range(N):
        m = 0
        for k in range(N):
            if sign(f.source_pairs[k][g]) >= 0:
                m |= 1 << k
        phi_mask.append(m)
    for d in range(2 * N):
        m = 0
        for k in range(N):
            if f.ip_fast(N + k, d) >= 0:
                m |= 1 << k
        psi_mask.append(m)
    full = (1 << N) - 1
    for gamma in sorted(sorted(g) for g in gammas):
        a = full
        b = full
        for g in gamma:
            a &= phi_mask[g]
            b &= psi_mask[g] & psi_mask[N + g]
        if a != b:
            bad = (a ^ b).bit_length() - 1
            return Certificate(
                _label(f), "fold-chamber", FAIL, alpha=s.roots[bad],
                witness={"gamma": [s.roots[k] for k in gamma], "root": s.roots[bad]},
            )
    return Certificate(_label(f), "fold-chamber", PASS, detail={"subsystems": len(gammas), "roots": N})


def check_slice_transfer(f: FoldedSystem, J: Iterable[int], folded: RootSystem | None = None) -> Certificate:
    """Chamber roots of W_J pass to chamber roots of W'_{J'} outside Psi_{J'}.

    J' indexes Pi_J and tau Pi_J in the doubled basis.  The standard-parabolic
    uniqueness statement is then checked on the regenerated simply-laced system
    for J', giving a second route to the same conclusion for H-types.
    """
    from .oshima import check_prop_b

    s = f.source
    n, N = f.rank, f.N
    J = tuple(sorted(set(J)))
    Jp = tuple(sorted(J + tuple(n + j for j in J)))
    jm = sum(1 << j for j in J)
    jpm = sum(1 << j for j in Jp)
    cands = [
        k for k, r in enumerate(s.roots)
        if s.support_mask(k) & ~jm and all(s.simple_pair_signs[k][j] >= 0 for j in J)
    ]
    for k in cands:
        tk = N + k
        x = f.psi[tk]
        supp = sum(1 << i for i, c in enumerate(x) if c)
        if not supp & ~jpm or any(dot(f.form, x, f.delta[j]) < 0 for j in Jp):
            return Certificate(_label(f), "fold-chamber", FAIL, J, s.roots[k], witness={"tau_alpha": x})
    # pairs alpha, beta with beta in alpha + R Pi_J must coincide on both sides
    outside = lambda k: tuple(c for i, c in enumerate(s.roots[k]) if i not in J)
    seen = {}
    for k in cands:
        key = (s.orbit_class[k], outside(k))
        if key in seen:
            return Certificate(
                _label(f), "fold-chamber", FAIL, J, s.roots[k], witness={"pair": [s.roots[seen[key]], s.roots[k]]}
            )
        seen[key] = k
    folded = folded or f.as_root_system()
    b = check_prop_b(folded, Jp)
    detail = {"J_prime": [j + 1 for j in Jp], "chamber_roots": len(cands), "folded_prop_b": b.status}
    if b.status == FAIL:
        return Certificate(_label(f), "fold-chamber", FAIL, J, witness={"folded": b.witness}, detail=detail)
    return Certificate(_label(f), "fold-chamber", PASS, J, detail=detail)


def _close(gens: Iterable[int], perms) -> frozenset:
    """Smallest set containing gens and closed under the reflections in its members."""
    members = set(gens)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in list(members):
            p = perms(a)
            for b in list(members):
                c = p[b]
                if c not in members:
                    members.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(members)


def check_phi_prime(f: FoldedSystem, samples: int = 200, rng: random.Random | None = None) -> Certificate:
    """Lambda -> Lambda u tau Lambda matches root subsystems with closed bundle unions."""
    s = f.source
    N = f.N
    rng = rng or random.Random(0)
    rp = f.reflection_perms
    for _ in range(samples):
        size = rng.randint(1, s.rank)
        gens = rng.sample(range(N), size)
        lam = _close(gens, s.root_perm)
        image = lam | {N + k for k in lam}
        closure = _close(list(gens) + [N + k for k in gens], lambda d: rp[d])
        if closure != image:
            return Certificate(
                _label(f), "fold-phi-prime", FAIL,
                witness={"generators": [s.roots[k] for k in sorted(gens)], "direction": "forward"},
            )
    converse = 0
    for _ in range(samples):
        size = rng.randint(1, f.lattice_rank)
        gens = rng.sample(range(2 * N), size)
        lam_p = _close(gens, lambda d: rp[d])
        if any(f.partner(k) not in lam_p for k in lam_p):
            continue  # not a bundle union
        converse += 1
        lam = frozenset(k for k in lam_p if k < N)
        closed = all(s.root_perm(a)[b] in lam for a in lam for b in lam)
        if not closed or lam | {N + k for k in lam} != lam_p:
            return Certificate(
                _label(f), "fold-phi-prime", FAIL,
                witness={"generators": [list(f.psi[k]) for k in sorted(gens)], "direction": "converse"},
            )
    detail = {"forward": samples, "converse": converse}
    if converse < samples:
        # top up with bundle unions generated from whole bundles
        while converse < samples:
            size = rng.randint(1, s.rank)
            base = rng.sample(range(N), size)
            lam_p = _close(list(base) + [N + k for k in base], lambda d: rp[d])
            if any(f.partner(k) not in lam_p for k in lam_p):
                return Certificate(
                    _label(f), "fold-phi-prime", FAIL,
                    witness={"bundles": [s.roots[k] for k in sorted(base)], "direction": "bundle closure"},
                )
            lam = frozenset(k for k in lam_p if k < N)
            closed = all(s.root_perm(a)[b] in lam for a in lam for b in lam)
            if not closed or lam | {N + k for k in lam} != lam_p:
                return Certificate(
                    _label(f), "fold-phi-prime", FAIL,
                    witness={"bundles": [s.roots[k] for k in sorted(base)], "direction": "converse"},
                )
            converse += 1
        detail["converse"] = converse
    return Certificate(_label(f), "fold-phi-prime", PASS, detail=detail)


def fold_label(label: str) -> FoldedSystem:
    return fold(get(label))


__all__ = [
    "Bundle",
    "FoldedSystem",
    "IP_TABLE",
    "check_chamber_equivalence",
    "check_fold_type",
    "check_ip_table",
    "check_length_doubling",
    "check_phi_bijection",
    "check_phi_prime",
    "check_reflection_factorization",
    "check_slice_transfer",
    "fold",
    "identify_type",
    "replaced_label",
    "to_u",
    "from_u",
    "tau_u",
]
