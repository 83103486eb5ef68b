"""Machine-readable verdict records and their serialisation."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .scalar import GoldenInt, to_json as scalar_to_json

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
STATUSES = (PASS, FAIL, SKIPPED)


@dataclass(frozen=True)
class Certificate:
    """Verdict for one check instance.

    ``J`` holds 0-based indices in memory and is written 1-based.  A failing
    certificate must carry a witness.
    """

    label: str
    check: str
    status: str
    J: tuple[int, ...] | None = None
    alpha: Any = None
    witness: Any = None
    detail: Any = None
    timing: float | None = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and (self.witness is None or self.witness == () or self.witness == []):
            raise ValueError("a failing certificate needs a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        doc = {
            "label": self.label,
            "check": self.check,
            "J": None if self.J is None else [j + 1 for j in self.J],
            "alpha": encode(self.alpha),
            "status": self.status,
        }
        if self.witness is not None:
            doc["witness"] = encode(self.witness)
        if self.detail is not None:
            doc["detail"] = encode(self.detail)
        if self.timing is not None:
            doc["timing"] = self.timing
        return doc


def encode(x: Any) -> Any:
    """JSON-friendly form: golden scalars as [a, b], tuples as lists."""
    if isinstance(x, (GoldenInt, Fraction)):
        return scalar_to_json(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return [encode(v) for v in sorted(x)]
    if isinstance(x, (tuple, list)):
        return [encode(v) for v in x]
    raise TypeError(f"cannot encode {x!r}")


def dumps(cert: Certificate) -> str:
    return json.dumps(cert.to_json(), separators=(",", ":"), sort_keys=True)


def summarize(certs: Iterable[Certificate]) -> list[dict]:
    """One summary object per (label, check), in first-seen order."""
    counts: dict[tuple[str, str], Counter] = {}
    for c in certs:
        counts.setdefault((c.label, c.check), Counter())[c.status] += 1
    return [
        {"summary": True, "label": lab, "check": chk, **{s: cnt.get(s, 0) for s in STATUSES}}
        for (lab, chk), cnt in counts.items()
    ]
