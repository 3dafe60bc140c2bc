"""Coefficient tables for every polynomial appearing in the bound displays.

Each table entry (c, m, e) contributes c * q**(m*nu + e).  The tables are
transcribed once and evaluated two ways (direct powers, or Horner in q per
nu-group) so a transcription slip cannot hide behind one evaluation path.
"""

from __future__ import annotations

from .errors import DomainError

# The named helper polynomials of the bound displays, plus the numerator
# polynomials (n2, n3, m5, m6) and the common cubic factor they share.
TABLES: dict[str, tuple[tuple[int, int, int], ...]] = {
    "a": ((-9, 1, 2), (-12, 1, 3), (-21, 1, 4), (3, 1, 5), (6, 1, 6),
          (1, 1, 7), (9, 2, 5), (3, 2, 6)),
    "b": ((3, 2, 7), (1, 2, 8), (18, 0, 1), (3, 0, 2), (-6, 0, 3),
          (-15, 0, 4), (7, 0, 6), (9, 0, 0)),
    "th3c": ((4, 1, 2), (3, 1, 3), (7, 1, 4), (-6, 1, 5), (-5, 1, 6),
             (3, 1, 7), (-4, 2, 5), (1, 2, 6)),
    "th3d": ((1, 2, 7), (-1, 2, 8), (-8, 0, 1), (1, 0, 2), (5, 0, 3),
             (9, 0, 4), (-6, 0, 6), (-4, 0, 0)),
    "s": ((6, 1, 2), (-12, 1, 3), (-20, 1, 4), (-12, 1, 5), (6, 1, 6),
          (1, 2, 5)),
    "r": ((3, 2, 6), (3, 2, 7), (9, 2, 8), (1, 0, 3), (3, 0, 2),
          (3, 0, 1), (9, 0, 0)),
    "q4den": ((1, 0, 1), (1, 0, 2), (-1, 0, 3), (-4, 0, 0), (-5, 1, 2),
              (3, 1, 3), (10, 1, 4), (3, 1, 5), (-5, 1, 6), (-1, 2, 5),
              (1, 2, 6), (1, 2, 7), (-4, 2, 8)),
    "n2": ((9, 0, 1), (-9, 1, 2), (1, 1, 3), (-10, 0, 2), (9, 0, 0)),
    "n3": ((2, 0, 1), (-2, 1, 2), (1, 1, 3), (-3, 0, 2), (2, 0, 0)),
    "m5": ((9, 1, 3), (-1, 1, 2), (1, 0, 1), (-9, 0, 0)),
    "m6": ((1, 0, 1), (-1, 1, 2), (2, 1, 3), (-2, 0, 0)),
    "cubic": ((1, 0, 3), (2, 0, 2), (2, 0, 1), (1, 0, 0)),
}


def eval_table(name: str, nu: float, q: float, method: str = "direct") -> float:
    if name not in TABLES:
        raise DomainError(f"unknown polynomial table {name!r}")
    if method == "direct":
        return sum(c * q ** (m * nu + e) for c, m, e in TABLES[name])
    if method == "horner":
        return _eval_horner(TABLES[name], nu, q)
    raise DomainError(f"unknown evaluation method {method!r}")


def _eval_horner(table, nu: float, q: float) -> float:
    """Group terms by their nu-multiplicity and run Horner in q per group."""
    total = 0.0
    for m in sorted({m for _, m, _ in table}):
        degree = max(e for _, mm, e in table if mm == m)
        dense = [0.0] * (degree + 1)
        for c, mm, e in table:
            if mm == m:
                dense[e] += c
        acc = 0.0
        for coeff in reversed(dense):
            acc = acc * q + coeff
        total += acc * (q ** (m * nu) if m else 1.0)
    return total


def q1_star(nu: float, q: float, method: str = "direct") -> float:
    return (eval_table("cubic", nu, q, method) * eval_table("n2", nu, q, method)
            / (eval_table("a", nu, q, method) + eval_table("b", nu, q, method)))


def q2_star(nu: float, q: float, method: str = "direct") -> float:
    return eval_table("n3", nu, q, method) / (
        eval_table("th3c", nu, q, method) + eval_table("th3d", nu, q, method))


def q3_star(nu: float, q: float, method: str = "direct") -> float:
    return (eval_table("m5", nu, q, method) * eval_table("cubic", nu, q, method)
            / (eval_table("s", nu, q, method) + eval_table("r", nu, q, method)))


def q4_star(nu: float, q: float, method: str = "direct") -> float:
    return (eval_table("m6", nu, q, method) * eval_table("cubic", nu, q, method)
            / eval_table("q4den", nu, q, method))


def f2_quadratic(nu: float, q: float) -> float:
    """Numerator polynomial shared by the F2 order-2 sum and its upper bound."""
    return ((nu + 2) ** 2 * (1 + q - q ** (nu + 2))
            - 2 * nu * (nu + 4) * q ** 2
            + (nu ** 2 + 4 * nu - 4) * q ** (nu + 3))


def f3_quadratic(nu: float, q: float) -> float:
    """Numerator polynomial shared by the F3 order-2 sum and its upper bound."""
    return ((1 + q) * (1 - q ** (nu + 2)) * (nu + 2) ** 2
            - 2 * nu * (nu + 4) * q * (1 - q ** (nu + 1)))
