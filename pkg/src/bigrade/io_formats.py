"""Text formats: the ideal file and canonical rendering.

Ideal file (UTF-8):

    # comment
    ring 2 4
    gens: x1*x2, x1*y3, y2^2

`ring m n` fixes the variable split; the gens line lists `*`-separated
variable powers (`^1` optional, `1` for the unit ideal, empty for (0)).
"""

from __future__ import annotations

import re

from .errors import ParseError
from .rings import MonomialIdeal, RingSpec, minimal_generators, render_monomial

_FACTOR_RE = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def parse_term(ring: RingSpec, term: str, lineno=None):
    term = term.strip()
    if term == "1":
        return (0,) * ring.nvars
    exps = [0] * ring.nvars
    for factor in term.split("*"):
        factor = factor.strip()
        mt = _FACTOR_RE.match(factor)
        if not mt:
            raise ParseError(f"bad factor {factor!r} in term {term!r}", line=lineno)
        block, idx, exp = mt.group(1), int(mt.group(2)), int(mt.group(3) or 1)
        if block == "x":
            if not (1 <= idx <= ring.m):
                raise ParseError(f"x{idx} out of range (m={ring.m})", line=lineno)
            pos = idx - 1
        else:
            if not (1 <= idx <= ring.n):
                raise ParseError(f"y{idx} out of range (n={ring.n})", line=lineno)
            pos = ring.m + idx - 1
        exps[pos] += exp
    return tuple(exps)


def parse_ideal_text(text: str, char: int = 0):
    """Parse the ideal file format; returns (RingSpec, MonomialIdeal)."""
    ring = None
    gens = []
    saw_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring"):
            parts = line.split()
            if len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                raise ParseError(f"bad ring line {line!r}", line=lineno)
            try:
                ring = RingSpec(int(parts[1]), int(parts[2]), char)
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from exc
        elif line.startswith("gens:"):
            if ring is None:
                raise ParseError("gens before ring line", line=lineno)
            saw_gens = True
            body = line[len("gens:"):].strip()
            if body:
                for term in body.split(","):
                    gens.append(parse_term(ring, term, lineno))
        else:
            raise ParseError(f"unexpected line {line!r}", line=lineno)
    if ring is None:
        raise ParseError("missing ring line")
    if not saw_gens:
        raise ParseError("missing gens line")
    return ring, minimal_generators(ring, gens)


def parse_ideal_file(path: str, char: int = 0):
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_text(fh.read(), char=char)


def render_ideal(I: MonomialIdeal) -> str:
    """Canonical ideal file text; parse(render(I)) == I."""
    ring = I.ring
    gens = ", ".join(render_monomial(ring, g) for g in I.gens)
    return f"ring {ring.m} {ring.n}\ngens: {gens}\n"
