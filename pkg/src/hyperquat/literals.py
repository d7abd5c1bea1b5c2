"""Text literals for quaternions and complex quaternions.

Grammar (whitespace ignored)::

    quat  := term (('+' | '-') term)*
    term  := coeff unit? | unit
    coeff := rational literal, e.g. 3, -2, 1/2, -3/4
    unit  := 'e1' | 'e2' | 'e3'

A complex quaternion is written ``"<quat> ; <quat>"`` (real part, then the
part multiplied by i).
"""

from __future__ import annotations

import re
from fractions import Fraction

from hyperquat.quaternions import Biquaternion, Quaternion
from hyperquat.scalars import format_rational

_TOKEN_RE = re.compile(r"\d+(?:/\d+)?|e[123]|[+\-;]")

_TERM = frozenset({"rational", "unit"})
_AFTER_COEFF = frozenset({"unit", "+", "-", "end of input"})
_AFTER_UNIT = frozenset({"+", "-", "end of input"})


class ParseError(ValueError):
    def __init__(self, text: str, offset: int, expected: frozenset[str]):
        self.text = text
        self.offset = offset
        self.expected = expected
        got = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(
            f"syntax error at offset {offset}: expected one of "
            f"{', '.join(sorted(expected))}, got {got}"
        )


def _tokenize(text: str, start: int, stop: int) -> list[tuple[int, str | None]]:
    """(offset, token) pairs; None marks an unrecognized character."""
    toks = []
    pos = start
    while pos < stop:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos, stop)
        if m is None:
            toks.append((pos, None))
            break
        toks.append((pos, m.group()))
        pos = m.end()
    toks.append((stop, "$"))
    return toks


def _kind(tok: str | None) -> str:
    if tok is None:
        return "?"
    if tok[0].isdigit():
        return "num"
    if tok[0] == "e":
        return "unit"
    return tok


def _parse_quat(text: str, start: int, stop: int) -> Quaternion:
    toks = _tokenize(text, start, stop)
    coeffs = [Fraction(0)] * 4
    i = 0
    sign = 1
    while True:
        off, tok = toks[i]
        kind = _kind(tok)
        if kind == "-" and _kind(toks[i + 1][1]) == "num":
            # signed coefficient
            sign, i = -sign, i + 1
            off, tok = toks[i]
            kind = "num"
        if kind == "unit":
            coeffs[int(tok[1])] += sign
            i += 1
            after = _AFTER_UNIT
        elif kind == "num":
            num, _, den = tok.partition("/")
            if den and int(den) == 0:
                raise ParseError(text, off + len(num) + 1, frozenset({"nonzero denominator"}))
            coeff = Fraction(int(num), int(den) if den else 1)
            i += 1
            unit = 0
            if _kind(toks[i][1]) == "unit":
                unit = int(toks[i][1][1])
                i += 1
                after = _AFTER_UNIT
            else:
                after = _AFTER_COEFF
            coeffs[unit] += sign * coeff
        else:
            raise ParseError(text, off, _TERM)
        off, tok = toks[i]
        kind = _kind(tok)
        if kind == "$":
            return Quaternion(*coeffs)
        if kind in ("+", "-"):
            sign = 1 if kind == "+" else -1
            i += 1
            continue
        raise ParseError(text, off, after)


def parse_quat(text: str) -> Quaternion:
    """Parse a quaternion literal such as ``"1+2e1-3/2e3"``."""
    return _parse_quat(text, 0, len(text))


def parse_biquat(text: str) -> Biquaternion:
    """Parse ``"<quat> ; <quat>"``."""
    semi = text.find(";")
    if semi < 0:
        raise ParseError(text, len(text), frozenset({";"}))
    return Biquaternion(_parse_quat(text, 0, semi), _parse_quat(text, semi + 1, len(text)))


def format_quat(q: Quaternion) -> str:
    parts = []
    for unit, c in zip(("", "e1", "e2", "e3"), q.coeffs):
        if c == 0:
            continue
        if unit and c == 1:
            body = unit
        elif unit and c == -1 and parts:
            body = "-" + unit
        else:
            body = format_rational(c) + unit
        if parts and not body.startswith("-"):
            body = "+" + body
        parts.append(body)
    return "".join(parts) or "0"


def format_biquat(Q: Biquaternion) -> str:
    return f"{format_quat(Q.x)} ; {format_quat(Q.y)}"
