"""Exact eps-expansion of double hypergeometric-style series.

A `HyperTermSpec` describes the general term of a double series: products of
rising factorials whose arguments are linear in eps and whose lengths are
affine in the summation indices (m1, m2), divided by the same kind of
product, with x1**m1 x2**m2 / (m1! m2!) implicit.  `expand_general` expands
every lattice point exactly and tabulates the coefficient of
eps**k x1**m1 x2**m2.

Seven built-in examples F1..F7 (plus an alternative route to F6 and the
delta-derivative of F7) also have hand-derived closed-form coefficient
formulas in `expand_closed`; engine and closed forms are independent code
paths that must agree entry by entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import binomial, double_factorial, gen_bernoulli_poly, stirling_s1
from .duals import Dual, delta_part
from .errors import DomainError, MissingParameter, PoleError, ZeroSeries
from .pochhammer import LinearParam, poch_eps_series, pochhammer
from .series import EpsSeries, series_invert

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value):
    if isinstance(value, int):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class IndexLaw:
    """Affine length law L(m1, m2) = c0 + c1*m1 + c2*m2 with nonnegative coefficients."""

    c0: int
    c1: int
    c2: int

    def __post_init__(self):
        for c in (self.c0, self.c1, self.c2):
            if not isinstance(c, int) or c < 0:
                raise DomainError("index-law coefficients must be nonnegative integers")

    def __call__(self, m1: int, m2: int) -> int:
        return self.c0 + self.c1 * m1 + self.c2 * m2


@dataclass(frozen=True)
class HyperTermSpec:
    """General term of a double series (see module docstring).

    `laurent=True` opts into denominators that vanish at eps = 0, producing
    negative-k table entries; otherwise such a denominator is a PoleError.
    """

    name: str
    numer: tuple = ()
    denom: tuple = ()
    extra_params: dict = field(default_factory=dict)
    laurent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "numer", tuple(self.numer))
        object.__setattr__(self, "denom", tuple(self.denom))


@dataclass
class ExpansionTable:
    """Exact coefficient table keyed (k, m1, m2) — or (k, m, n) after regrouping."""

    entries: dict
    eps_order: int
    degree_bound: int
    regrouping: str = "lattice"

    def get(self, k: int, i: int, j: int):
        return self.entries[(k, i, j)]


def expand_general(spec: HyperTermSpec, eps_order: int, degree_bound: int) -> ExpansionTable:
    """Expand every lattice point of the spec exactly; tabulate eps-coefficients.

    Entries cover all k in [0, eps_order] (plus negative k down to the pole
    depth when the spec opts into Laurent handling) and all m1 + m2 <=
    degree_bound.
    """
    if eps_order < 0:
        raise DomainError("eps_order must be >= 0")
    if degree_bound < 0:
        raise DomainError("degree_bound must be >= 0")
    entries = {}
    for m1 in range(degree_bound + 1):
        for m2 in range(degree_bound + 1 - m1):
            depth = 0
            for idx, (param, law) in enumerate(spec.denom):
                length = law(m1, m2)
                constant = pochhammer(param.constant, length)
                if constant == 0:
                    if param.slope == 0 or not spec.laurent:
                        raise PoleError(
                            f"denominator factor {idx} of {spec.name or 'spec'} "
                            f"vanishes at eps = 0 on lattice point ({m1}, {m2})",
                            lattice_point=(m1, m2),
                            factor=idx,
                        )
                    depth += 1
            order = eps_order + 2 * depth
            num = EpsSeries.one(order)
            for param, law in spec.numer:
                num = num * poch_eps_series(param, law(m1, m2), order)
            den = EpsSeries.one(order)
            for param, law in spec.denom:
                den = den * poch_eps_series(param, law(m1, m2), order)
            try:
                inv = series_invert(den)
            except ZeroSeries:
                raise PoleError(
                    f"denominator of {spec.name or 'spec'} vanishes identically "
                    f"on lattice point ({m1}, {m2})",
                    lattice_point=(m1, m2),
                ) from None
            term = (num * inv).scaled(
                Fraction(1, math.factorial(m1) * math.factorial(m2))
            )
            lowest = term.min_exponent if spec.laurent else 0
            for k in range(min(lowest, 0), eps_order + 1):
                entries[(k, m1, m2)] = term.coefficient(k)
    return ExpansionTable(entries, eps_order, degree_bound, "lattice")


def regroup_total_degree(table: ExpansionTable) -> ExpansionTable:
    """Re-key a lattice table to (k, m, n) with m = m1 + m2 and n = m1 (lossless)."""
    if table.regrouping != "lattice":
        raise DomainError("only a lattice-keyed table can be regrouped by total degree")
    entries = {(k, m1 + m2, m1): v for (k, m1, m2), v in table.entries.items()}
    return ExpansionTable(entries, table.eps_order, table.degree_bound, "total_degree")


def delta_dual_expand(spec: HyperTermSpec, eps_order: int, degree_bound: int) -> ExpansionTable:
    """Derivative of every table entry with respect to the spec's delta parameter.

    The spec must carry its delta-dependence as Dual scalars inside the
    LinearParam constants (see `closed_engine_spec`); a delta-free spec
    yields the all-zero table.
    """
    table = expand_general(spec, eps_order, degree_bound)
    entries = {key: delta_part(v) for key, v in table.entries.items()}
    return ExpansionTable(entries, eps_order, degree_bound, "lattice")


# -- built-in examples --------------------------------------------------------

_LAW_SUM = IndexLaw(0, 1, 1)
_LAW_M1 = IndexLaw(0, 1, 0)
_LAW_M2 = IndexLaw(0, 0, 1)

CLOSED_EXAMPLES = (
    "F1",
    "F2",
    "F3",
    "F4",
    "F5",
    "F6",
    "F6_alt",
    "F7",
    "dF7_ddelta",
)

_DELTA_EXAMPLES = frozenset({"F6", "F6_alt", "F7"})


def _need_delta(example: str, extra: dict):
    extra = extra or {}
    if "delta" not in extra:
        raise MissingParameter(f"example {example} needs the extra parameter delta")
    return _coerce(extra["delta"])


def closed_engine_spec(example: str, delta=None) -> HyperTermSpec:
    """The HyperTermSpec whose general-term expansion matches expand_closed(example)."""
    if example in ("F1", "F2", "F3", "F4", "F5"):
        pass
    elif example in _DELTA_EXAMPLES:
        if delta is None:
            raise MissingParameter(f"example {example} needs the extra parameter delta")
    elif example == "dF7_ddelta":
        return closed_engine_spec("F7", Dual(0 if delta is None else delta, 1))
    else:
        raise DomainError(f"unknown example {example!r}; known: {', '.join(CLOSED_EXAMPLES)}")

    LP = LinearParam
    if example == "F1":
        return HyperTermSpec(
            "F1",
            numer=[(LP(1, -2), _LAW_SUM), (LP(1, -1), _LAW_SUM)],
            denom=[(LP(1, -1), _LAW_M1), (LP(1, -1), _LAW_M2)],
        )
    if example == "F2":
        return HyperTermSpec(
            "F2",
            numer=[(LP(1, 0), _LAW_SUM), (LP(1, -1), _LAW_SUM)],
            denom=[(LP(1, -1), _LAW_M1), (LP(1, 1), _LAW_M2)],
        )
    if example == "F3":
        return HyperTermSpec(
            "F3",
            numer=[(LP(1, 0), _LAW_SUM), (LP(1, -1), _LAW_SUM)],
            denom=[(LP(1, 1), _LAW_M1), (LP(1, -1), _LAW_M2)],
        )
    if example == "F4":
        return HyperTermSpec(
            "F4",
            numer=[(LP(1, 0), _LAW_SUM), (LP(1, 1), _LAW_SUM)],
            denom=[(LP(1, 1), _LAW_M1), (LP(1, 1), _LAW_M2)],
        )
    if example == "F5":
        return HyperTermSpec(
            "F5",
            numer=[
                (LP(1, 0), _LAW_SUM),
                (LP(Fraction(1, 2), 0), _LAW_M1),
                (LP(Fraction(3, 2), -1), _LAW_M2),
            ],
            denom=[(LP(2, -1), _LAW_M1), (LP(3, -2), _LAW_M2)],
        )
    d = delta
    if example in ("F6", "F6_alt"):
        # F6_alt is a second closed-form route to the same function as F6,
        # so both share one general-term spec.
        return HyperTermSpec(
            "F6",
            numer=[(LP(1 + d, 0), _LAW_SUM), (LP(1 + d, -1), _LAW_SUM), (LP(1, 0), _LAW_M1)],
            denom=[(LP(1 + d, 0), _LAW_M1), (LP(1, -1), _LAW_M1), (LP(1 + d, 1), _LAW_M2)],
            extra_params={"delta": d},
        )
    # F7
    return HyperTermSpec(
        "F7",
        numer=[(LP(1 + d, 0), _LAW_SUM), (LP(1 + d, 1), _LAW_SUM), (LP(1, 0), _LAW_M1)],
        denom=[(LP(1 + d, 0), _LAW_M1), (LP(1, 1), _LAW_M1), (LP(1 + d, 1), _LAW_M2)],
        extra_params={"delta": d},
    )


def _inv_pow(base, exponent: int):
    # 1 / base**exponent for exact scalars.
    return 1 / (_coerce(base) ** exponent)


def _closed_f1(k, m1, m2):
    n, m = m1, m1 + m2
    total = _ZERO
    for k1 in range(k + 1):
        s = stirling_s1(m + 1, k1 + 1)
        if s == 0:
            continue
        bracket = _ONE if k1 == k else _ZERO
        for j in range(1, n + 1):
            bracket -= (
                (-1) ** j
                * binomial(m - j, n)
                * binomial(n, j)
                * _inv_pow(j, k - k1)
            )
        total += 2**k1 * (-1) ** m * s * bracket
    return total / (math.factorial(n) * math.factorial(m - n))


def _closed_f2_f3_bracketed(k, n, m):
    bracket = Fraction((-1) ** n) if k == 0 else _ZERO
    for j in range(1, n + 1):
        bracket -= (-1) ** j * binomial(m + j, n) * binomial(n, j) * _inv_pow(j, k)
    return (-1) ** k * bracket * binomial(m, n)


def _closed_f2(k, m1, m2):
    return _closed_f2_f3_bracketed(k, m2, m1 + m2)


def _closed_f3(k, m1, m2):
    return _closed_f2_f3_bracketed(k, m1, m1 + m2)


def _closed_f4(k, m1, m2):
    n, m = m1, m1 + m2
    bracket = _ONE if k == 0 else _ZERO
    for j in range(1, n + 1):
        bracket -= (-1) ** j * binomial(m - j, n) * binomial(n, j) * _inv_pow(j, k)
    return (-1) ** k * bracket * binomial(m, n)


def closed_f4_reformulated(k, m1, m2):
    """Second route to the F4 coefficients (telescoped single j-sum)."""
    square = binomial(m1 + m2, m1) ** 2
    if k == 0:
        return square
    acc = _ZERO
    for j in range(1, m1 + 1):
        acc += (
            (-1) ** j
            * pochhammer(m1 + 1 - j, j)
            * pochhammer(m2 + 1 - j, j)
            / (pochhammer(m1 + m2 + 1 - j, j) * math.factorial(j))
            * _inv_pow(j, k)
        )
    return (-1) ** (k + 1) * square * acc


def _f5_inner(n, k1):
    # delta_{n,0} delta_{k1,0} minus a signed sum over the first n unit shifts.
    acc = _ONE if (n == 0 and k1 == 0) else _ZERO
    for l in range(1, n + 1):
        acc -= (
            Fraction((-1) ** l * l, math.factorial(l) * math.factorial(n - l))
            * _inv_pow(1 + l, k1 + 1)
        )
    return acc


def _f5_outer(d, kk):
    # delta_{kk,0} minus a signed double-factorial sum over j <= floor(d/2).
    acc = _ONE if kk == 0 else _ZERO
    for j in range(1, d // 2 + 1):
        acc -= (
            Fraction((-1) ** j)
            * double_factorial(2 * d - 2 * j - 1)
            / (2**j * math.factorial(d - 2 * j) * math.factorial(j - 1))
            * _inv_pow(1 + j, kk + 1)
        )
    return acc


def _closed_f5(k, m1, m2):
    n, m = m1, m1 + m2
    pref = Fraction(1, 2**m) * binomial(m, n)
    pref *= _ONE if n == 0 else double_factorial(2 * n - 1)
    total = _ZERO
    for k1 in range(k + 1):
        a = _f5_inner(n, k1)
        if a == 0:
            continue
        total += a * _f5_outer(m - n, k - k1)
    return pref * total


def _closed_f6(delta):
    def entry(k, n1, n2):
        pref = pochhammer(1 + n1 + delta, n2) / math.factorial(n2)
        total = _ZERO
        for k1 in range(k + 1):
            t1 = _ONE if k1 == 0 else _ZERO
            for l in range(1, n1 + 1):
                t1 -= (
                    (-1) ** l
                    * pochhammer(1 + delta - l, n1)
                    / (math.factorial(l) * math.factorial(n1 - l))
                    * _inv_pow(l, k1)
                )
            t2 = Fraction((-1) ** n2) if k1 == k else _ZERO
            for j in range(n2):
                t2 += (
                    (-1) ** j
                    * pochhammer(2 + n1 + j + 2 * delta, n2)
                    / (math.factorial(j) * math.factorial(n2 - 1 - j))
                    * _inv_pow(1 + j + delta, k - k1 + 1)
                )
            total += (-1) ** (k - k1) * t1 * t2
        return pref * total

    return entry


def _closed_f6_alt(delta):
    def entry(k, n1, n2):
        pref = pochhammer(1 + n1 + delta, n2) / math.factorial(n2)
        total = Fraction((-1) ** n2) if k == 0 else _ZERO
        for j1 in range(1, n1 + 1):
            total -= (
                pochhammer(1 + delta - j1, n1 + n2)
                / pochhammer(1 + delta + j1, n2)
                * (-1) ** j1
                / (math.factorial(j1) * math.factorial(n1 - j1))
                * _inv_pow(j1, k)
            )
        tail = _ZERO
        for j2 in range(n2):
            tail += (
                pochhammer(2 + 2 * delta + j2, n1 + n2)
                / pochhammer(2 + delta + j2, n1)
                * (-1) ** j2
                / (math.factorial(j2) * math.factorial(n2 - 1 - j2))
                * _inv_pow(1 + j2 + delta, k + 1)
            )
        total += (-1) ** k * tail
        return pref * total

    return entry


def _closed_f7(delta):
    def entry(k, n1, n2):
        pref = pochhammer(1 + n1 + delta, n2) / math.factorial(n2)
        bracket = _ONE if k == 0 else _ZERO
        for j in range(1, n1 + 1):
            bracket -= (
                (-1) ** j
                * pochhammer(n2 + 1 + delta - j, n1)
                / (math.factorial(j) * math.factorial(n1 - j))
                * _inv_pow(j, k)
            )
        return (-1) ** k * pref * bracket

    return entry


def _closed_df7(k, n1, n2):
    piece1 = _ZERO
    if n2 > 0:
        bracket = _ONE if k == 0 else _ZERO
        for j in range(1, n1 + 1):
            bracket -= (
                (-1) ** j
                * pochhammer(n2 + 1 - j, n1)
                / (math.factorial(j) * math.factorial(n1 - j))
                * _inv_pow(j, k)
            )
        piece1 = (
            Fraction((-1) ** (n2 - 1) * n2)
            * gen_bernoulli_poly(n2 - 1, n2 + 1, Fraction(-n1))
            * bracket
        )
    piece2 = _ZERO
    if n1 > 0:
        acc = _ZERO
        for j in range(1, n1 + 1):
            acc += (
                Fraction((-1) ** j * math.comb(n1, j))
                * _inv_pow(j, k)
                * gen_bernoulli_poly(n1 - 1, n1 + 1, Fraction(j - n2))
            )
        piece2 = (
            Fraction((-1) ** n1 * n1 * math.factorial(n1 + n2), math.factorial(n1) ** 2)
            * acc
        )
    return Fraction((-1) ** k, math.factorial(n2)) * (piece1 + piece2)


def expand_closed(
    example: str, eps_order: int, degree_bound: int, extra: dict | None = None
) -> ExpansionTable:
    """Closed-form coefficient table for a built-in example (lattice keying)."""
    if eps_order < 0 or degree_bound < 0:
        raise DomainError("eps_order and degree_bound must be >= 0")
    if example not in CLOSED_EXAMPLES:
        raise DomainError(
            f"unknown example {example!r}; known: {', '.join(CLOSED_EXAMPLES)}"
        )
    extra = extra or {}
    if example in _DELTA_EXAMPLES:
        delta = _need_delta(example, extra)
        entry = {
            "F6": _closed_f6,
            "F6_alt": _closed_f6_alt,
            "F7": _closed_f7,
        }[example](delta)
    elif example == "dF7_ddelta":
        if "delta" in extra and _coerce(extra["delta"]) != 0:
            raise DomainError("dF7_ddelta is taken at delta = 0; a nonzero delta is not supported")
        entry = _closed_df7
    else:
        entry = {
            "F1": _closed_f1,
            "F2": _closed_f2,
            "F3": _closed_f3,
            "F4": _closed_f4,
            "F5": _closed_f5,
        }[example]
    entries = {}
    for m1 in range(degree_bound + 1):
        for m2 in range(degree_bound + 1 - m1):
            for k in range(eps_order + 1):
                entries[(k, m1, m2)] = entry(k, m1, m2)
    return ExpansionTable(entries, eps_order, degree_bound, "lattice")


# -- table rendering ----------------------------------------------------------


def emit_table(table: ExpansionTable, format: str = "csv") -> str:
    """Render a table as machine-first csv or a human-readable aligned layout."""
    total = table.regrouping == "total_degree"
    if format == "csv":
        header = "k,m,n,coefficient" if total else "k,m1,m2,coefficient"
        lines = [header]
        for key in sorted(table.entries):
            k, a, b = key
            lines.append(f"{k},{a},{b},{table.entries[key]}")
        return "\n".join(lines)
    if format == "aligned":
        return _emit_aligned(table)
    raise DomainError(f"unknown table format {format!r}; expected csv or aligned")


def _emit_aligned(table: ExpansionTable) -> str:
    total = table.regrouping == "total_degree"
    row_label, col_label = ("m", "n") if total else ("m1", "m2")
    ks = sorted({key[0] for key in table.entries})
    blocks = []
    for k in ks:
        sub = {(a, b): v for (kk, a, b), v in table.entries.items() if kk == k}
        rows = sorted({a for a, _ in sub})
        cols = sorted({b for _, b in sub})
        cells = [[f"{row_label}\\{col_label}"] + [str(c) for c in cols]]
        for a in rows:
            cells.append(
                [str(a)] + [str(sub[(a, b)]) if (a, b) in sub else "" for b in cols]
            )
        widths = [
            max(len(row[i]) for row in cells if i < len(row))
            for i in range(len(cells[0]))
        ]
        lines = [f"k = {k}"]
        for row in cells:
            lines.append(
                "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip()
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
