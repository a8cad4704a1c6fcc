"""Plain-text fan files.

Grammar (``#`` starts a comment, blank lines are ignored)::

    dim <n>
    rays
    <n integers>            one line per ray, in divisor order D1, D2, ...
    cones
    <n ray numbers>         1-based, one line per maximal cone
    bundle                  optional
    <one integer per ray>

Section headers may appear in any order after ``dim``; each must appear once.
"""

from __future__ import annotations

from .divisors import LineBundle
from .errors import ParseError
from .fan import Fan

_SECTIONS = ("rays", "cones", "bundle")


def _ints(tokens, lineno, start_cols):
    out = []
    for tok, col in zip(tokens, start_cols):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None
    return out


def _tokens(line: str):
    toks, cols = [], []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        toks.append(line[i:j])
        cols.append(i + 1)
        i = j
    return toks, cols


def parse_fan_file(text: str) -> tuple[Fan, LineBundle | None]:
    dim = None
    section = None
    data: dict[str, list[tuple[int, list[int]]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks, cols = _tokens(line)
        if not toks:
            continue
        head = toks[0].lower()
        if head == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim' line", lineno, cols[0])
            if len(toks) != 2:
                raise ParseError("'dim' takes exactly one integer", lineno, cols[0])
            (dim,) = _ints(toks[1:], lineno, cols[1:])
            if dim < 1:
                raise ParseError("dimension must be at least 1", lineno, cols[1])
            continue
        if head in _SECTIONS:
            if len(toks) != 1:
                raise ParseError(f"unexpected text after '{head}'", lineno, cols[1])
            if head in data:
                raise ParseError(f"duplicate '{head}' section", lineno, cols[0])
            if dim is None:
                raise ParseError("'dim' must come before any section", lineno, cols[0])
            section = head
            data[section] = []
            continue
        if section is None:
            raise ParseError(f"unexpected {toks[0]!r} outside any section", lineno, cols[0])
        values = _ints(toks, lineno, cols)
        if section in ("rays", "cones") and len(values) != dim:
            raise ParseError(f"expected {dim} integers, got {len(values)}", lineno, cols[0])
        data[section].append((lineno, values))

    if dim is None:
        raise ParseError("missing 'dim' line")
    for name in ("rays", "cones"):
        if not data.get(name):
            raise ParseError(f"missing or empty '{name}' section")
    rays = [v for _, v in data["rays"]]
    cones = []
    for lineno, v in data["cones"]:
        for x in v:
            if not 1 <= x <= len(rays):
                raise ParseError(f"ray number {x} out of range 1..{len(rays)}", lineno)
        cones.append([x - 1 for x in v])
    fan = Fan(rays, cones)

    bundle = None
    if "bundle" in data:
        coeffs = [x for _, v in data["bundle"] for x in v]
        if len(coeffs) != len(rays):
            line = data["bundle"][0][0] if data["bundle"] else None
            raise ParseError(f"bundle has {len(coeffs)} coefficients for {len(rays)} rays", line)
        bundle = LineBundle(fan, coeffs)
    return fan, bundle


def format_fan_file(fan: Fan, bundle: LineBundle | None = None, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"dim {fan.dim}")
    lines.append("rays")
    lines += [" ".join(map(str, r)) for r in fan.rays]
    lines.append("cones")
    lines += [" ".join(str(i + 1) for i in c) for c in fan.cones]
    if bundle is not None:
        lines.append("bundle")
        lines.append(" ".join(map(str, bundle.coeffs)))
    return "\n".join(lines) + "\n"
