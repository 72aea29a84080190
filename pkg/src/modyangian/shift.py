"""Shift matrices and the root elements of shifted Yangians."""

from __future__ import annotations

from .algebra import commutator


class InvalidShiftMatrix(ValueError):
    pass


class InadmissibleSuperscript(ValueError):
    pass


class ShiftMatrix:
    """n x n nonnegative integers with s_ii = 0 and s_ij + s_jk = s_ik for j between i and k."""

    __slots__ = ("s", "n")

    def __init__(self, s):
        rows = tuple(tuple(int(v) for v in row) for row in s)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise InvalidShiftMatrix("shift matrix must be square and nonempty")
        for i in range(n):
            for j in range(n):
                if rows[i][j] < 0:
                    raise InvalidShiftMatrix(f"negative entry at ({i + 1},{j + 1})")
            if rows[i][i]:
                raise InvalidShiftMatrix(f"nonzero diagonal entry at ({i + 1},{i + 1})")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if abs(i - j) + abs(j - k) == abs(i - k) and rows[i][j] + rows[j][k] != rows[i][k]:
                        raise InvalidShiftMatrix(
                            f"s[{i + 1},{j + 1}] + s[{j + 1},{k + 1}] != s[{i + 1},{k + 1}]"
                            f" ({rows[i][j]} + {rows[j][k]} != {rows[i][k]})"
                        )
        self.s = rows
        self.n = n

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def from_diagonals(cls, upper, lower):
        upper, lower = list(upper), list(lower)
        if len(upper) != len(lower):
            raise ValueError("upper and lower diagonals must have the same length")
        if any(v < 0 for v in upper + lower):
            raise InvalidShiftMatrix("diagonal entries must be nonnegative")
        n = len(upper) + 1
        s = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                s[i][j] = sum(upper[i:j])
                s[j][i] = sum(lower[i:j])
        return cls(s)

    def __call__(self, i, j):
        return self.s[i - 1][j - 1]

    def transpose(self):
        return ShiftMatrix([[self.s[j][i] for j in range(self.n)] for i in range(self.n)])

    def upper(self):
        return [self.s[i][i + 1] for i in range(self.n - 1)]

    def lower(self):
        return [self.s[i + 1][i] for i in range(self.n - 1)]

    def is_zero(self):
        return not any(any(row) for row in self.s)

    def admissible(self, i, j, r):
        """Is e_{i,j} t^r in the shifted current algebra (r >= s_{i,j})?"""
        return r >= self(i, j)

    def __eq__(self, other):
        return isinstance(other, ShiftMatrix) and self.s == other.s

    def __hash__(self):
        return hash(self.s)

    def __repr__(self):
        return f"ShiftMatrix({[list(r) for r in self.s]})"

    def to_json(self):
        return {"n": self.n, "s": [list(r) for r in self.s]}

    @classmethod
    def from_json(cls, d):
        return cls(d["s"])


def parse_sigma(text: str, n: int | None = None) -> ShiftMatrix:
    """Parse ``upper=1,2 lower=0,0`` (either part may be omitted, defaulting to zeros)."""
    parts = {}
    for tok in text.replace(";", " ").split():
        if "=" not in tok:
            raise ValueError(f"expected key=values, got {tok!r}")
        key, vals = tok.split("=", 1)
        if key not in ("upper", "lower"):
            raise ValueError(f"unknown shift key {key!r}")
        parts[key] = [int(v) for v in vals.split(",") if v.strip()]
    m = len(parts.get("upper", parts.get("lower", [])))
    if n is not None:
        m = n - 1
    upper = parts.get("upper", [0] * m)
    lower = parts.get("lower", [0] * m)
    if len(upper) != m or len(lower) != m:
        raise ValueError(f"shift diagonals must have {m} entries")
    return ShiftMatrix.from_diagonals(upper, lower)


def shifted_E(g, i, j, r, sigma: ShiftMatrix):
    """^sigma E_{i,j}^{(r)} from the Drinfeld generators in ``g`` (a GaussData)."""
    if sigma.n != g.n:
        raise ValueError("shift matrix size does not match n")
    if not 1 <= i < j <= g.n:
        raise ValueError("shifted_E needs i < j")
    if r <= sigma(i, j):
        raise InadmissibleSuperscript(f"E_{{{i},{j}}}^({r}) needs r > s_{{{i},{j}}} = {sigma(i, j)}")
    if j == i + 1:
        return g.Ec(i, r)
    s = sigma(j - 1, j)
    return commutator(shifted_E(g, i, j - 1, r - s, sigma), g.Ec(j - 1, s + 1))


def shifted_F(g, i, j, r, sigma: ShiftMatrix):
    """^sigma F_{i,j}^{(r)}, mirror of :func:`shifted_E` using the lower shifts."""
    if sigma.n != g.n:
        raise ValueError("shift matrix size does not match n")
    if not 1 <= i < j <= g.n:
        raise ValueError("shifted_F needs i < j")
    if r <= sigma(j, i):
        raise InadmissibleSuperscript(f"F_{{{i},{j}}}^({r}) needs r > s_{{{j},{i}}} = {sigma(j, i)}")
    if j == i + 1:
        return g.Fc(i, r)
    s = sigma(j, j - 1)
    return commutator(g.Fc(j - 1, s + 1), shifted_F(g, i, j - 1, r - s, sigma))


def graded_closure_violations(sigma: ShiftMatrix, rmax: int):
    """Brackets of admissible e_{i,j} t^r, e_{k,l} t^s (r, s <= rmax) leaving the shifted algebra.

    Returns a list of offending (i, j, r, k, l, s, a, b, degree) tuples.
    """
    n = sigma.n
    bad = []
    gens = [
        (i, j, r)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for r in range(rmax + 1)
        if sigma.admissible(i, j, r)
    ]
    for i, j, r in gens:
        for k, l, s in gens:
            outs = []
            if j == k:
                outs.append((i, l))
            if l == i:
                outs.append((k, j))
            for a, b in outs:
                if not sigma.admissible(a, b, r + s):
                    bad.append((i, j, r, k, l, s, a, b, r + s))
    return bad
