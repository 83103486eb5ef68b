"""Registry of verification suites: which checks apply to which types, and how to run them.

Each suite yields certificates for one (type, check) pair in a fixed order.
Randomised suites draw from ``random.Random(f"{seed}:{label}:{check}")`` so a
run is reproducible and independent of scheduling.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import catalog, folding, oshima
from .certificate import FAIL, PASS, Certificate
from .rootsystem import RootSystem, dual_map, dual_system, get
from .weyl import GroupElt, enumerate_group, stabilizer_datum

DEFAULT_TYPES = (
    "A1", "A2", "A3", "A4", "A5", "A6",
    "B2", "B3", "B4", "B5", "B6",
    "C3", "C4", "C5", "C6",
    "D4", "D5", "D6",
    "E6", "E7",
    "F4", "G2",
    "H3", "H4", "I2(5)",
    "A1xA1",
)
DEEP_TYPES = ("E8",)

PROP_C_SAMPLES = 500
CHAMBER_SAMPLES = 100
CHAMBER_MAX_ORBIT = 5040
ROOTSTRING_MAX_RANK = 4
FOLD_SAMPLES = 200


@dataclass(frozen=True)
class Options:
    seed: int = 0
    prop_c_samples: int = PROP_C_SAMPLES
    chamber_samples: int = CHAMBER_SAMPLES
    chamber_max_orbit: int = CHAMBER_MAX_ORBIT
    fold_samples: int = FOLD_SAMPLES

    def rng(self, label: str, check: str) -> random.Random:
        return random.Random(f"{self.seed}:{label}:{check}")


def _families(label: str) -> set[str]:
    return {catalog.parse_irreducible(p)[0] for p in catalog.split_label(label)}


def crystallographic(label: str) -> bool:
    return not _families(label) & {"H", "I"}


def irreducible(label: str) -> bool:
    return len(catalog.split_label(label)) == 1


def rank_of(label: str) -> int:
    return catalog.datum(label).rank


# -- suite bodies ------------------------------------------------------------


def run_prop_a(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for J in oshima.all_subsets(s.rank):
        yield from oshima.sweep_prop_a(s, J)


def run_prop_b(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for J in oshima.all_subsets(s.rank):
        yield oshima.check_prop_b(s, J)


def _random_word(rng: random.Random, n: int, max_len: int) -> tuple[int, ...]:
    return tuple(rng.randrange(n) for _ in range(rng.randint(0, max_len)))


def run_prop_c(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    rng = opts.rng(s.label, "prop-c")
    n = s.rank
    subsets = oshima.all_subsets(n)
    max_len = max(8, 2 * n)
    for _ in range(opts.prop_c_samples):
        w = GroupElt.from_word(s, _random_word(rng, n, max_len))
        J = subsets[rng.randrange(len(subsets))]
        beta = s.roots[rng.randrange(len(s.roots))]
        yield oshima.check_prop_c(s, J, w, beta)
    if s.label == "H3":
        # exhaustive: every w, every J, every beta
        for _, word in enumerate_group(s):
            w = GroupElt.from_word(s, word)
            for J in subsets:
                ctx = oshima.ConjugateParabolic(s, J, w)
                for beta in s.roots:
                    yield oshima.check_prop_c(s, J, w, beta, ctx)


def run_oshima_x(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for spec in oshima.xspecs_from_roots(s):
        yield oshima.check_oshima_X(s, spec, validate=False)


def dihedral_vectors(s: RootSystem) -> list[tuple]:
    """Every root plus every lattice vector with coefficients in [-2, 2]."""
    zero = s.zero()[0]
    lattice = [tuple(zero + c for c in cs) for cs in product(range(-2, 3), repeat=s.rank)]
    out = list(s.roots)
    seen = set(out)
    for v in lattice:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def run_dihedral(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    elements = oshima.group_elements(s)
    for v in dihedral_vectors(s):
        for alpha in s.roots:
            yield oshima.check_dihedral(s, v, alpha, elements=elements)


def run_rootstring_b(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for a1, a2, a3 in oshima.qualifying_triples(s):
        yield oshima.check_rootstring_b(s, a1, a2, a3)


def _decomposition_pairs(s: RootSystem, J: tuple[int, ...]):
    """(alpha, beta) in Phi minus Phi_J with alpha <=_J beta."""
    jm = sum(1 << j for j in J)
    outside = [k for k in range(len(s.roots)) if s.support_mask(k) & ~jm]
    for a in outside:
        for b in outside:
            if oshima.dominates(s, J, s.roots[a], s.roots[b]):
                yield s.roots[a], s.roots[b]


def run_rootstring_a(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    # qualifying triples, then the sequences built from minimal decompositions
    for triple in oshima.qualifying_triples(s):
        yield oshima.check_rootstring_a(s, triple)
    for J in oshima.all_subsets(s.rank):
        dec = oshima._Decomposer(s, J)
        for alpha, beta in _decomposition_pairs(s, J):
            seq = (alpha,) + oshima.minimal_decomposition(s, J, alpha, beta, dec)
            yield oshima.check_rootstring_a(s, seq, J)


def run_rootstring_c(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for J in oshima.all_subsets(s.rank):
        dec = oshima._Decomposer(s, J)
        for alpha, beta in _decomposition_pairs(s, J):
            seq = (alpha,) + oshima.minimal_decomposition(s, J, alpha, beta, dec)
            yield oshima.check_rootstring_c(s, seq, J)


def run_decomposition(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    for J in oshima.all_subsets(s.rank):
        dec = oshima._Decomposer(s, J)
        for alpha, beta in _decomposition_pairs(s, J):
            yield oshima.check_decomposition(s, J, alpha, beta, dec)[0]
        # dominance adjustment for every pair with beta in alpha + R Pi_J
        jset = set(J)
        for a, alpha in enumerate(s.roots):
            for beta in s.roots:
                if all(x == y for i, (x, y) in enumerate(zip(alpha, beta)) if i not in jset):
                    yield oshima.check_dominance(s, J, alpha, beta)


def run_chamber_vector(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    rng = opts.rng(s.label, "chamber-vector")
    order = catalog.group_order(s.label)
    for v, I in oshima.sample_chamber_vectors(s, opts.chamber_samples, rng, opts.chamber_max_orbit):
        stab = stabilizer_datum(s, v)
        if stab != I:
            yield Certificate(s.label, "chamber-vector", FAIL, None, v, witness={"stabilizer": sorted(stab), "intended": sorted(I)})
            continue
        expected = order // oshima._parabolic_order(s, sorted(I))
        yield from oshima.check_chamber_vector(s, v, expected_orbit=expected)


def run_rescale(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    dual = dual_system(s)
    corr = dual_map(s, dual)
    for J in oshima.all_subsets(s.rank):
        yield from oshima.check_rescale_invariance(s, J, dual, corr)
    # the dual of B_n is the catalog C_n form, and dualising twice returns s
    expect = get(dual.label) if dual.label in catalog_labels_with_gram() else None
    twice = dual_system(dual)
    detail = {"dual": dual.label}
    problems = {}
    if expect is not None and expect.gram != dual.gram:
        problems["dual_gram"] = [list(r) for r in dual.gram]
    if twice.gram != s.gram or set(twice.roots) != set(s.roots):
        problems["double_dual"] = [list(r) for r in twice.gram]
    if problems:
        yield Certificate(s.label, "rescale-invariance", FAIL, witness=problems, detail=detail)
    else:
        yield Certificate(s.label, "rescale-invariance", PASS, detail=detail)


def catalog_labels_with_gram() -> set[str]:
    """Labels whose catalog Gram is the canonical dual realisation."""
    return {f"B{n}" for n in range(3, 17)} | {f"C{n}" for n in range(3, 17)}


def run_counterexample(s: RootSystem, opts: Options) -> Iterator[Certificate]:
    yield oshima.check_counterexample_a3(s)


# folding suites share one FoldedSystem per process
_FOLD_CACHE: dict[str, folding.FoldedSystem] = {}
_SUBSYSTEMS: dict[str, set] = {}


def _folded(s: RootSystem) -> folding.FoldedSystem:
    if s.label not in _FOLD_CACHE:
        _FOLD_CACHE[s.label] = folding.fold(s)
    return _FOLD_CACHE[s.label]


def _subsystems(f: folding.FoldedSystem) -> set:
    lab = f.source.label
    if lab not in _SUBSYSTEMS:
        _SUBSYSTEMS[lab] = folding.phi_simple_subsystems(f, folding.default_max_size(f))
    return _SUBSYSTEMS[lab]


def run_fold_table(s, opts):
    yield folding.check_ip_table(_folded(s))


def run_fold_type(s, opts):
    f = _folded(s)
    yield folding.check_fold_type(f, _subsystems(f))


def run_fold_reflections(s, opts):
    yield folding.check_reflection_factorization(_folded(s))


def run_fold_length(s, opts):
    yield folding.check_length_doubling(_folded(s))


def run_fold_phi(s, opts):
    f = _folded(s)
    yield folding.check_phi_bijection(f, samples=opts.fold_samples, rng=opts.rng(s.label, "fold-phi"), subsystems=_subsystems(f))


def run_fold_chamber(s, opts):
    f = _folded(s)
    yield folding.check_chamber_equivalence(f, subsystems=_subsystems(f))
    folded = f.as_root_system()
    for J in oshima.all_subsets(s.rank):
        yield folding.check_slice_transfer(f, J, folded)


def run_fold_phi_prime(s, opts):
    yield folding.check_phi_prime(_folded(s), samples=opts.fold_samples, rng=opts.rng(s.label, "fold-phi-prime"))


@dataclass(frozen=True)
class Suite:
    name: str
    applies: Callable[[str], bool]
    run: Callable[[RootSystem, Options], Iterator[Certificate]]


def _small_crystallographic(label: str) -> bool:
    return crystallographic(label) and rank_of(label) <= ROOTSTRING_MAX_RANK


_FOLDABLE = set(folding.FOLD_TARGET)
_TWO_LENGTHS = {"B", "C", "F", "G"}

SUITES: tuple[Suite, ...] = (
    Suite("prop-a", lambda lab: True, run_prop_a),
    Suite("prop-b", lambda lab: True, run_prop_b),
    Suite("prop-c", lambda lab: True, run_prop_c),
    Suite("oshima-x", lambda lab: crystallographic(lab) and irreducible(lab), run_oshima_x),
    Suite("dihedral", lambda lab: rank_of(lab) <= 2, run_dihedral),
    Suite("rootstring-a", _small_crystallographic, run_rootstring_a),
    Suite("rootstring-b", _small_crystallographic, run_rootstring_b),
    Suite("rootstring-c", _small_crystallographic, run_rootstring_c),
    Suite("decomposition", _small_crystallographic, run_decomposition),
    Suite("chamber-vector", lambda lab: True, run_chamber_vector),
    Suite(
        "rescale-invariance",
        lambda lab: irreducible(lab) and bool(_families(lab) & _TWO_LENGTHS),
        run_rescale,
    ),
    Suite("counterexample-a3", lambda lab: lab == "A3", run_counterexample),
    Suite("fold-table", lambda lab: lab in _FOLDABLE, run_fold_table),
    Suite("fold-type", lambda lab: lab in _FOLDABLE, run_fold_type),
    Suite("fold-reflections", lambda lab: lab in _FOLDABLE, run_fold_reflections),
    Suite("fold-length", lambda lab: lab in _FOLDABLE, run_fold_length),
    Suite("fold-phi", lambda lab: lab in _FOLDABLE, run_fold_phi),
    Suite("fold-chamber", lambda lab: lab in _FOLDABLE, run_fold_chamber),
    Suite("fold-phi-prime", lambda lab: lab in _FOLDABLE, run_fold_phi_prime),
)
BY_NAME = {s.name: s for s in SUITES}
CHECK_NAMES = tuple(BY_NAME)

ALIASES = {
    "folding": tuple(n for n in CHECK_NAMES if n.startswith("fold-")),
    "rootstring": ("rootstring-a", "rootstring-b", "rootstring-c"),
    "all": CHECK_NAMES,
}


def expand_checks(names: list[str]) -> list[str]:
    """Resolve aliases; unknown names raise ``KeyError``."""
    out: list[str] = []
    for n in names:
        if n in ALIASES:
            picked = ALIASES[n]
        elif n in BY_NAME:
            picked = (n,)
        else:
            raise KeyError(n)
        out.extend(p for p in picked if p not in out)
    # registry order keeps output canonical regardless of flag order
    return [n for n in CHECK_NAMES if n in out]


def run_suite(label: str, check: str, opts: Options) -> list[Certificate]:
    s = get(label)
    return list(BY_NAME[check].run(s, opts))


def tasks(labels: list[str], checks: list[str]) -> list[tuple[str, str]]:
    return [(lab, chk) for lab in labels for chk in checks if BY_NAME[chk].applies(lab)]
