"""Outcome record for a single identity verification."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    """Result of checking one identity to a given order.

    ``status`` is "pass", "fail" or "skipped"; a failure carries the first
    discrepancy as (exponent, left coefficient, right coefficient).
    """

    identity_id: str
    params: dict
    order: int
    status: str
    first_discrepancy: tuple[int, int, int] | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        out = {
            "id": self.identity_id,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "order": self.order,
            "status": self.status,
        }
        if self.first_discrepancy is not None:
            k, lhs, rhs = self.first_discrepancy
            out["first_discrepancy"] = {
                "exponent": k,
                "lhs": str(lhs),
                "rhs": str(rhs),
            }
        if self.note:
            out["note"] = self.note
        return out


def series_report(
    identity_id: str, params: dict, order: int, lhs, rhs, note: str = ""
) -> VerificationReport:
    """Compare two series up to their common precision."""
    n = min(lhs.precision, rhs.precision)
    for k in range(n):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return VerificationReport(
                identity_id,
                params,
                order,
                "fail",
                first_discrepancy=(k, lhs.coeffs[k], rhs.coeffs[k]),
                note=note,
            )
    return VerificationReport(identity_id, params, order, "pass", note=note)
