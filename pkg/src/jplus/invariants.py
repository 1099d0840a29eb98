"""Arnold's J⁺ via Viro's formula, rotation numbers, and sum identities."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .diagram import CurveDiagram, trace_diagram
from .errors import IdentityViolation
from .geometry import PolylineCurve, ValidatedCurve, turning_number


def _viro(d: CurveDiagram) -> int:
    w, ind = d.windings, d.indices
    return 1 + d.n - sum(x * x for x in w) + sum(x * x for x in ind)


def jplus_viro(d: CurveDiagram) -> int:
    """J⁺ = 1 + n - (sum of squared face windings) + (sum of squared indices)."""
    j = _viro(d)
    # the other bracketing of the same sum
    alt = 1 - sum(x * x for x in d.windings) + sum(1 + x * x for x in d.indices)
    if alt != j:
        raise IdentityViolation("Viro forms disagree", j, alt)
    if j % 2:
        raise IdentityViolation(f"J+ must be even, got {j}", j, j - 1)
    return j


def rotation_from_windings(d: CurveDiagram) -> int:
    """Rotation number as (sum of face windings) - (sum of crossing indices)."""
    return sum(d.windings) - sum(d.indices)


def arnold_slack(d: CurveDiagram, jplus: Optional[int] = None) -> int:
    j = jplus_viro(d) if jplus is None else jplus
    return j + d.n * d.n + d.n


@dataclass(frozen=True)
class InvariantReport:
    n: int
    rot_combinatorial: int
    rot_geometric: Optional[int]
    jplus: int
    winding_multiset: dict = field(default_factory=dict)
    index_multiset: dict = field(default_factory=dict)
    arnold_slack: int = 0

    def to_text(self) -> str:
        def ms(c):
            return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(c.items())) + "}"
        rot = str(self.rot_combinatorial)
        if self.rot_geometric is not None:
            rot += f" (geometric {self.rot_geometric})"
        return "\n".join([
            f"crossings      {self.n}",
            f"rotation       {rot}",
            f"J+             {self.jplus}",
            f"windings       {ms(self.winding_multiset)}",
            f"indices        {ms(self.index_multiset)}",
            f"arnold slack   {self.arnold_slack}",
        ])


def _as_diagram(obj):
    if isinstance(obj, CurveDiagram):
        return obj
    if isinstance(obj, (PolylineCurve, ValidatedCurve)):
        return trace_diagram(obj)
    raise TypeError(f"expected a curve or diagram, got {type(obj).__name__}")


def report(obj, check_reversal: bool = True) -> InvariantReport:
    """Full cross-checked invariant report for a curve or a diagram."""
    from .diagram import reverse_orientation

    d = _as_diagram(obj)
    j = jplus_viro(d)
    rot = rotation_from_windings(d)
    rot_geo = None
    if d.geometry is not None:
        rot_geo = turning_number(d.geometry.curve)
        if rot_geo != rot:
            raise IdentityViolation("rotation from windings != turning number", rot, rot_geo)
    if check_reversal:
        r = reverse_orientation(d)
        jr, rotr = jplus_viro(r), rotation_from_windings(r)
        if jr != j:
            raise IdentityViolation("J+ changed under orientation reversal", j, jr)
        if rotr != -rot:
            raise IdentityViolation("reversal did not negate rot", -rot, rotr)
    slack = arnold_slack(d, j)
    if slack < 0:
        raise IdentityViolation("Arnold bound J+ >= -n^2 - n violated", j, -d.n * d.n - d.n)
    return InvariantReport(
        n=d.n,
        rot_combinatorial=rot,
        rot_geometric=rot_geo,
        jplus=j,
        winding_multiset=dict(sorted(Counter(d.windings).items())),
        index_multiset=dict(sorted(Counter(d.indices).items())),
        arnold_slack=slack,
    )


# -- sum identities ---------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    kind: str
    lhs: int
    rhs: int

    @property
    def ok(self):
        return self.lhs == self.rhs


def _j(x):
    return jplus_viro(_as_diagram(x))


def _rot(x):
    return rotation_from_windings(_as_diagram(x))


def sum_prediction(kind: str, jk: int, jk2: int = 0, *, omega_c: int = 0,
                   omega_adj: int = 1, rot_k2: int = 0, m: int = 0) -> int:
    """Right-hand side of the J⁺ formula for a sum construction.

    ``rot_k2`` is the rotation of the inserted curve after any orientation
    change the construction applies.
    """
    if kind == "connected":
        return jk + jk2
    if kind == "interior":
        return jk + jk2 - 2 * omega_c * rot_k2
    if kind == "tunnel":
        return jk + jk2 + 2 * omega_c * (rot_k2 - omega_adj)
    if kind == "loop":
        return jk - (m + 1) * (m + 2 * omega_c * omega_adj)
    raise ValueError(f"unknown sum kind {kind!r}")


def _replacement(inputs, result):
    # swapping the inserted piece K2 for K2_tr (same rotation) shifts the
    # sum's J+ by exactly J(K2) - J(K2_tr)
    if _rot(inputs["K2"]) != _rot(inputs["K2_tr"]):
        raise ValueError("replacement needs inserted curves with equal rotation")
    lhs = _j(result)
    rhs = _j(inputs["sum_tr"]) + _j(inputs["K2"]) - _j(inputs["K2_tr"])
    check = IdentityCheck("replacement", lhs, rhs)
    if not check.ok:
        raise IdentityViolation(f"replacement identity fails: {lhs} != {rhs}", lhs, rhs)
    return check


def verify_sum_identity(kind: str, inputs: dict, result) -> IdentityCheck:
    """Recompute both sides of a sum formula from scratch.

    ``inputs`` holds ``K`` (and ``K2`` for two-curve sums) as curves or
    diagrams plus the scalars ``omega_c``, ``omega_adj``, ``m`` and, for
    interior and tunnel sums, ``rot_k2`` when the inserted curve was
    re-oriented (defaults to its own rotation).

    Kind "replacement" compares two interior sums into the same face and
    arc: ``result`` uses ``K2``, ``inputs["sum_tr"]`` uses ``K2_tr``.
    """
    if kind == "replacement":
        return _replacement(inputs, result)
    jk = _j(inputs["K"])
    jk2 = _j(inputs["K2"]) if "K2" in inputs else 0
    rot_k2 = inputs.get("rot_k2")
    if rot_k2 is None and "K2" in inputs:
        rot_k2 = _rot(inputs["K2"])
    rhs = sum_prediction(kind, jk, jk2, omega_c=inputs.get("omega_c", 0),
                         omega_adj=inputs.get("omega_adj", 1),
                         rot_k2=rot_k2 or 0, m=inputs.get("m", 0))
    lhs = _j(result)
    check = IdentityCheck(kind, lhs, rhs)
    if not check.ok:
        raise IdentityViolation(f"{kind} sum identity fails: {lhs} != {rhs}", lhs, rhs)
    return check
