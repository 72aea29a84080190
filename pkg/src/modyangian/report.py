"""Check records and verification reports shared by the suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    params: dict
    ok: bool
    witness: str | None = None

    @property
    def status(self):
        return "pass" if self.ok else "fail"

    def to_json(self):
        d = {"name": self.name, "params": self.params, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def compare(name, params, lhs, rhs) -> Check:
    """Exact equality check; the witness is lhs - rhs when it fails."""
    if lhs == rhs:
        return Check(name, params, True)
    try:
        diff = lhs - rhs
    except Exception:  # noqa: BLE001 - mismatched types still deserve a readable witness
        diff = f"{lhs!r} != {rhs!r}"
    return Check(name, params, False, f"lhs - rhs = {diff!r}")


def compare_series(name, params, f, g) -> Check:
    N = min(f.trunc, g.trunc)
    for r in range(N + 1):
        if f.coeffs[r] != g.coeffs[r]:
            return Check(name, params, False, f"u^-{r}: lhs - rhs = {(f.coeffs[r] - g.coeffs[r])!r}")
    return Check(name, params, True)


def summarize(name, params, checks) -> Check:
    """Fold many instance checks into one, keeping the first failure as witness."""
    checks = list(checks)
    bad = [c for c in checks if not c.ok]
    params = dict(params, instances=len(checks))
    if not bad:
        return Check(name, params, True)
    first = bad[0]
    return Check(name, dict(params, failed=len(bad)), False, f"{first.name} {first.params}: {first.witness}")


@dataclass
class Report:
    config: dict
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_json(self):
        return {"config": self.config, "checks": [c.to_json() for c in self.checks]}

    def to_text(self):
        lines = [f"config: {', '.join(f'{k}={v}' for k, v in sorted(self.config.items()))}"]
        for c in self.checks:
            ps = ", ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            lines.append(f"{c.status.upper():4}  {c.name}  [{ps}]")
            if c.witness:
                lines.append(f"      witness: {c.witness}")
        lines.append(f"{sum(c.ok for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)
