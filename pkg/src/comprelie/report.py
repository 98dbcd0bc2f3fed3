from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Check:
    passed: bool
    witness: tuple | None = None


@dataclass
class Report:
    """Named pass/fail checks, each with the first failing index tuple."""

    checks: dict[str, Check] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def __getitem__(self, name: str) -> Check:
        return self.checks[name]

    def to_dict(self) -> dict:
        out: dict = {name: c.passed for name, c in self.checks.items()}
        out["passed"] = self.passed
        out["witnesses"] = {
            name: (list(c.witness) if c.witness is not None else None)
            for name, c in self.checks.items()
        }
        return out


def first_failure(defect: np.ndarray, index_axes: int) -> Check:
    """Check that ``defect`` vanishes; witness is the lexicographically first bad index.

    The leading ``index_axes`` axes index basis tuples, the rest are value axes.
    """
    arr = np.asarray(defect, dtype=object)
    flat = arr.reshape(arr.shape[:index_axes] + (-1,))
    bad = np.zeros(arr.shape[:index_axes], dtype=bool)
    for idx in np.ndindex(*arr.shape[:index_axes]):
        bad[idx] = any(x != 0 for x in flat[idx])
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return Check(True)
    return Check(False, tuple(int(k) for k in hits[0]))
