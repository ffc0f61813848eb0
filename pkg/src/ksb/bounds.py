"""Upper bounds on the maximum family size, packaged as reports.

The central operation is the inertia (Cvetkovic) bound: for any symmetric
matrix supported only on forbidden-distance pairs, the independence number is
at most min(#non-negative, #non-positive eigenvalues), counted with
multiplicity.  Closed forms for diameter sets and consecutive blocks, plus
the parity and restricted-intersection forms, live alongside it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Any, Optional

from .errors import DomainError
from .spectrum import weighted_spectrum
from .weights import DistanceSet, WeightScheme, distance_set, validate_support

__all__ = [
    "BoundReport",
    "cvetkovic_bound",
    "kleitman_closed_form",
    "consecutive_closed_form",
    "parity_bound",
    "frankl_wilson_form",
    "report_to_json",
    "report_from_json",
]


@dataclass(frozen=True)
class BoundReport:
    """One bound (or exact value) on a maximum family size, with the data
    that justifies it.  ``L`` is None for the F_p^N reports, where ``n`` is
    the dimension N.  Witness payloads are JSON-native dicts; big counts are
    decimal strings."""

    n: int
    L: Optional[DistanceSet]
    method: str
    value: int
    witness: dict[str, Any] = field(default_factory=dict)


def cvetkovic_bound(n: int, L: DistanceSet, f: WeightScheme) -> BoundReport:
    """Inertia bound from the weighted distance matrix.

    Requires f to vanish on L; otherwise the matrix would have support on
    allowed pairs and the bound would be unsound.
    """
    if L.n != n or f.n != n:
        raise DomainError(
            f"dimension mismatch: n={n}, L n={L.n}, scheme n={f.n}"
        )
    if not validate_support(f, L):
        raise DomainError(
            f"scheme {f.label} is nonzero on an allowed distance; "
            "the inertia bound would be unsound"
        )
    summary = weighted_spectrum(n, f)
    value = min(summary.count_nonneg, summary.count_nonpos)
    signs = "".join(
        "+" if e > 0 else "-" if e < 0 else "0" for e in summary.eigenvalues
    )
    witness = {
        "scheme": f.label,
        "count_nonneg": str(summary.count_nonneg),
        "count_nonpos": str(summary.count_nonpos),
        "count_zero": str(summary.count_zero),
        "signs": signs,
    }
    return BoundReport(n, L, "spectral", value, witness)


def kleitman_closed_form(n: int, d: int) -> BoundReport:
    """Sharp diameter bound: sum_{i<=t} C(n, i) for d = 2t, and
    2 sum_{i<=t} C(n-1, i) for d = 2t+1."""
    if not 1 <= d < n:
        raise DomainError(f"need 1 <= d < n, got d={d}, n={n}")
    t = d // 2
    if d % 2 == 0:
        value = sum(comb(n, i) for i in range(t + 1))
    else:
        value = 2 * sum(comb(n - 1, i) for i in range(t + 1))
    L = distance_set(n, range(1, d + 1))
    return BoundReport(n, L, "kleitman-closed-form", value, {"d": d, "t": t})


def consecutive_closed_form(n: int, s: int, t: int) -> BoundReport:
    """Closed form for L = {2s+1, ..., 2t}: C(n, t-s) + 2 sum_{i<t-s} C(n, i)."""
    if not 0 <= s < t:
        raise DomainError(f"need 0 <= s < t, got s={s}, t={t}")
    if 2 * t >= n:
        raise DomainError(f"need 2t < n, got t={t}, n={n}")
    r = t - s
    value = comb(n, r) + 2 * sum(comb(n, i) for i in range(r))
    L = distance_set(n, range(2 * s + 1, 2 * t + 1))
    return BoundReport(n, L, "consecutive-closed-form", value, {"s": s, "t": t})


def parity_bound(L: DistanceSet) -> Optional[BoundReport]:
    """If every allowed distance is odd, at most two vectors fit: three would
    give pairwise symmetric differences of odd total size, an impossibility.
    Returns None when L has an even member."""
    if any(d % 2 == 0 for d in L.members):
        return None
    return BoundReport(L.n, L, "parity", 2, {})


def frankl_wilson_form(n: int, L: DistanceSet) -> BoundReport:
    """1 + |L| * sum_{i<=c} C(n, i), where c counts the even members of L.

    Assembled from the restricted-intersections theorem applied to each
    weight class of a family containing the origin; the theorem itself is
    used as a black-box formula.
    """
    if L.n != n:
        raise DomainError(f"dimension mismatch: n={n}, L n={L.n}")
    c = L.count_even
    value = 1 + len(L.members) * sum(comb(n, i) for i in range(c + 1))
    return BoundReport(
        n, L, "frankl-wilson-form", value,
        {"count_even": c, "set_size": len(L.members)},
    )


def report_to_json(report: BoundReport) -> str:
    payload = {
        "n": report.n,
        "L": list(report.L.members) if report.L is not None else None,
        "method": report.method,
        "value": str(report.value),
        "witness": report.witness,
    }
    return json.dumps(payload, sort_keys=True)


def report_from_json(text: str) -> BoundReport:
    data = json.loads(text)
    n = int(data["n"])
    L = None if data["L"] is None else distance_set(n, data["L"])
    return BoundReport(n, L, data["method"], int(data["value"]), data["witness"])
