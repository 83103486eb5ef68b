from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from coxorbit import rootsystem as R
from coxorbit.catalog import UnknownTypeError, is_connected
from coxorbit.rootsystem import RootSystem
from coxorbit.scalar import GoldenInt, sign

# |Phi| from n(n+1), 2n^2, 2n(n-1) and the exceptional counts
ROOT_COUNTS = {
    "A1": 2, "A2": 6, "A3": 12, "A4": 20, "A5": 30, "A6": 42,
    "B2": 8, "B3": 18, "B4": 32, "B5": 50, "B6": 72,
    "C3": 18, "C4": 32, "C5": 50, "C6": 72,
    "D4": 24, "D5": 40, "D6": 60,
    "E6": 72, "E7": 126, "E8": 240,
    "F4": 48, "G2": 12, "H3": 30, "H4": 120, "I2(5)": 10,
    "A1xA1": 4, "B3xA2": 24,
}


@pytest.mark.parametrize("label,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(label, count):
    s = R.get(label)
    assert len(s.roots) == count
    assert len(s.positive) == count // 2


def _float_closure(gram: np.ndarray) -> set:
    """Close the simple roots under reflections in every root found, in ambient coordinates."""
    L = np.linalg.cholesky(gram)
    roots = [L[i] for i in range(len(gram))]
    key = lambda v: tuple(np.round(v, 6) + 0.0)
    seen = {key(v): v for v in roots}
    changed = True
    while changed:
        changed = False
        current = list(seen.values())
        for a in current:
            aa = a @ a
            for b in current:
                c = b - 2 * (b @ a) / aa * a
                k = key(c)
                if k not in seen:
                    seen[k] = c
                    changed = True
    return set(seen)


def _float_gram(s: RootSystem) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in s.gram])


@pytest.mark.parametrize("label", ["A3", "B3", "C4", "D5", "F4", "G2", "H3", "H4", "I2(5)", "E6", "A1xA1"])
def test_closure_oracle(label):
    s = R.get(label)
    g = _float_gram(s)
    L = np.linalg.cholesky(g)
    ours = {tuple(np.round(np.array([float(x) for x in r]) @ L, 6) + 0.0) for r in s.roots}
    assert ours == _float_closure(g)


@pytest.mark.parametrize("label", ["A4", "B4", "D4", "E6", "F4", "G2", "H3", "H4", "I2(5)"])
def test_root_system_axioms(label):
    s = R.get(label)
    for a in s.roots:
        assert R.neg(a) in s.index
        assert R.scale(2, a) not in s.index
        for b in s.roots:
            assert R.reflect(s, a, b) in s.index
    # positive roots are non-negative combinations of simple roots
    for k in s.positive:
        assert all(sign(x) >= 0 for x in s.roots[k])


@pytest.mark.parametrize("label", ["A5", "B4", "C4", "D5", "E7", "F4", "G2", "H3", "H4", "I2(5)"])
def test_supports_connected(label):
    s = R.get(label)
    for r in s.roots:
        assert is_connected(s.coxeter_graph, R.support(r))


@pytest.mark.parametrize(
    "label,classes",
    [("A4", 1), ("B3", 2), ("C3", 2), ("F4", 2), ("G2", 2), ("H3", 1), ("H4", 1), ("I2(5)", 1), ("A1xA1", 2), ("D4", 1)],
)
def test_orbit_classes(label, classes):
    s = R.get(label)
    assert len(s.orbit_classes) == classes
    # for irreducible crystallographic types orbits are exactly the length classes
    if "x" not in label and not s.golden:
        assert sorted(map(sorted, s.orbit_classes)) == sorted(map(sorted, s.length_classes.values()))


def test_crystallographic_flag():
    for label in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"]:
        assert R.is_crystallographic(R.get(label))
    for label in ["H3", "H4", "I2(5)"]:
        assert not R.is_crystallographic(R.get(label))


def test_golden_coefficients_are_golden():
    s = R.get("H3")
    assert all(isinstance(x, GoldenInt) for r in s.roots for x in r)
    assert s.gram[0][1] == GoldenInt(0, -1)


def test_json_roundtrip():
    for label in ["B3", "H4", "A1xA1"]:
        s = R.get(label)
        back = RootSystem.from_json(s.to_json())
        assert back.roots == s.roots and back.gram == s.gram and back.positive == s.positive


def test_reflect_rejects_non_roots():
    s = R.get("A2")
    with pytest.raises(ValueError):
        R.reflect(s, (1, 2), (1, 0))


def test_support_of_zero():
    with pytest.raises(ValueError):
        R.support((0, 0))


def test_gram_validation():
    with pytest.raises(ValueError):
        R.check_gram([[2, -2], [-2, 2]])  # affine, not positive definite
    with pytest.raises(ValueError):
        R.check_gram([[2, -1], [0, 2]])


def test_from_gram_identifies_type():
    s = R.from_gram([[2, 0, -1], [0, 2, -1], [-1, -1, 2]])
    assert s.label == "A3" and len(s.roots) == 12


def test_unknown_label():
    with pytest.raises(UnknownTypeError):
        R.get("Z9")


def test_dual_of_b_is_c():
    for n in (3, 4, 5):
        d = R.dual_system(R.get(f"B{n}"))
        assert d.label == f"C{n}"
        assert d.gram == R.get(f"C{n}").gram
        assert set(d.roots) == set(R.get(f"C{n}").roots)


def test_double_dual():
    for label in ["F4", "G2", "B2", "C4"]:
        s = R.get(label)
        twice = R.dual_system(R.dual_system(s))
        assert twice.gram == s.gram and twice.roots == s.roots


def test_dual_map_is_coroot():
    s = R.get("B3")
    d = R.dual_system(s)
    m = R.dual_map(s, d)
    assert sorted(m.values()) == list(range(len(s.roots)))
    # long roots of B3 become short coroots
    for k, j in m.items():
        assert (s.norms[k] == 4) == (d.norms[j] == 2)


def test_rescale_requires_orbit_constant_factors():
    s = R.get("B2")
    with pytest.raises(ValueError):
        R.rescale(s, lambda r: Fraction(1) if r == (1, 0) else Fraction(2))
    with pytest.raises(ValueError):
        R.rescale(s, lambda r: Fraction(-1))


def test_rescale_golden_leaving_ring():
    s = R.get("H3")
    with pytest.raises(ValueError):
        R.rescale(s, lambda r: Fraction(1, 2))


def test_parabolic_subsystem():
    sub = R.parabolic_subsystem(R.get("B4"), [1, 2, 3])
    assert sub.label == "B3"
    assert set(sub.roots) == set(R.get("B3").roots)
