"""Line-oriented text format describing a double-series term or a Pochhammer quotient.

Series spec files drive `expand --spec`:

    [function]
    name = mine
    [numerator]
    poch = 1 -2 : 0 1 1
    [denominator]
    poch = 1 -1 : 0 1 0
    poch = 1 -1 : 0 0 1
    [params]
    delta = 1/3
    [options]
    eps_order = 3
    degree_bound = 5
    regroup = lattice

Each `poch` line is `<constant> <slope> : <c0> <c1> <c2>` — a rising factorial
with a linear-in-eps argument and an affine-in-(m1, m2) length.  Rationals use
`p/q` syntax.  `#` starts a comment; blank lines are skipped.  Quotient files
for `pf --spec` use a two-section subset where each `poch` line is
`<constant> <slope> : <length>`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .hyper_expand import HyperTermSpec, IndexLaw
from .pochhammer import LinearParam
from .series import parse_rational

_SECTIONS = ("function", "numerator", "denominator", "params", "options")
_OPTION_KEYS = ("eps_order", "degree_bound", "regroup")


@dataclass
class SpecOptions:
    """Optional [options] block: expansion depth and table keying."""

    eps_order: int | None = None
    degree_bound: int | None = None
    regroup: str | None = None


@dataclass
class _Raw:
    name: str | None = None
    numer: list = field(default_factory=list)
    denom: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    options: SpecOptions = field(default_factory=SpecOptions)


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_rational_at(token: str, lineno: int):
    try:
        return parse_rational(token)
    except ParseError:
        raise ParseError(f"line {lineno}: {token!r} is not a rational") from None


def _parse_int_at(token: str, lineno: int, what: str):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


def _parse_poch_line(value: str, lineno: int):
    if ":" not in value:
        raise ParseError(f"line {lineno}: poch line needs ':' between argument and length")
    arg_part, len_part = value.split(":", 1)
    arg_tokens = arg_part.split()
    if len(arg_tokens) != 2:
        raise ParseError(
            f"line {lineno}: expected '<constant> <slope>' before ':', got {arg_part.strip()!r}"
        )
    constant = _parse_rational_at(arg_tokens[0], lineno)
    slope = _parse_rational_at(arg_tokens[1], lineno)
    return LinearParam(constant, slope), len_part.split(), lineno


def _law_from_tokens(tokens: list, lineno: int) -> IndexLaw:
    if len(tokens) != 3:
        raise ParseError(
            f"line {lineno}: expected three length coefficients '<c0> <c1> <c2>' after ':'"
        )
    c0, c1, c2 = (_parse_int_at(t, lineno, "length coefficient") for t in tokens)
    if min(c0, c1, c2) < 0:
        raise ParseError(f"line {lineno}: length coefficients must be nonnegative")
    return IndexLaw(c0, c1, c2)


_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _split_key_value(line: str, lineno: int):
    if "=" not in line:
        raise ParseError(f"line {lineno}: expected 'key = value', got {line!r}")
    key, value = (part.strip() for part in line.split("=", 1))
    if not key or not set(key) <= _IDENT_OK or key[0].isdigit():
        raise ParseError(f"line {lineno}: {key!r} is not a valid key")
    if not value:
        raise ParseError(f"line {lineno}: empty value for {key!r}")
    return key, value


def _scan(text: str) -> _Raw:
    raw = _Raw()
    section = None
    seen = set()
    for lineno, line in _logical_lines(text):
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"line {lineno}: unterminated section header {line!r}")
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ParseError(
                    f"line {lineno}: unknown section [{name}]; "
                    f"expected one of {', '.join(_SECTIONS)}"
                )
            if name in seen:
                raise ParseError(f"line {lineno}: duplicate section [{name}]")
            seen.add(name)
            section = name
            continue
        if section is None:
            raise ParseError(f"line {lineno}: content before any section header")
        key, value = _split_key_value(line, lineno)
        if section == "function":
            if key != "name":
                raise ParseError(f"line {lineno}: [function] only takes 'name'")
            if raw.name is not None:
                raise ParseError(f"line {lineno}: duplicate name")
            raw.name = value
        elif section in ("numerator", "denominator"):
            if key != "poch":
                raise ParseError(f"line {lineno}: [{section}] only takes 'poch' lines")
            target = raw.numer if section == "numerator" else raw.denom
            target.append(_parse_poch_line(value, lineno))
        elif section == "params":
            if key in raw.params:
                raise ParseError(f"line {lineno}: duplicate parameter {key!r}")
            raw.params[key] = _parse_rational_at(value, lineno)
        else:  # options
            if key not in _OPTION_KEYS:
                raise ParseError(
                    f"line {lineno}: unknown option {key!r}; "
                    f"expected one of {', '.join(_OPTION_KEYS)}"
                )
            if getattr(raw.options, key) is not None:
                raise ParseError(f"line {lineno}: duplicate option {key!r}")
            if key == "regroup":
                if value not in ("lattice", "total"):
                    raise ParseError(
                        f"line {lineno}: regroup must be 'lattice' or 'total', got {value!r}"
                    )
                raw.options.regroup = value
            else:
                n = _parse_int_at(value, lineno, key)
                if n < 0:
                    raise ParseError(f"line {lineno}: {key} must be >= 0")
                setattr(raw.options, key, n)
    return raw


def parse_spec_text(text: str):
    """Parse a series spec file; returns (HyperTermSpec, SpecOptions)."""
    raw = _scan(text)
    numer = tuple(
        (param, _law_from_tokens(tokens, lineno)) for param, tokens, lineno in raw.numer
    )
    denom = tuple(
        (param, _law_from_tokens(tokens, lineno)) for param, tokens, lineno in raw.denom
    )
    spec = HyperTermSpec(
        raw.name or "spec", numer=numer, denom=denom, extra_params=dict(raw.params)
    )
    return spec, raw.options


def parse_quotient_text(text: str):
    """Parse a quotient file for partial fractions: poch lines carry one length.

    Returns (numer, denom) as tuples of (LinearParam, length).
    """
    raw = _scan(text)
    if raw.params:
        raise ParseError("[params] is not used in quotient files")
    if raw.options != SpecOptions():
        raise ParseError("[options] is not used in quotient files")

    def factors(entries):
        out = []
        for param, tokens, lineno in entries:
            if len(tokens) != 1:
                raise ParseError(
                    f"line {lineno}: quotient poch lines take a single length after ':'"
                )
            length = _parse_int_at(tokens[0], lineno, "length")
            if length < 0:
                raise ParseError(f"line {lineno}: length must be >= 0")
            out.append((param, length))
        return tuple(out)

    return factors(raw.numer), factors(raw.denom)
