"""
Angle tokens: decimal radians, or multiples of pi such as pi, pi/3, 2pi/3
"""

import math
import re

from core.exceptions import ParseError

_PI_TOKEN = re.compile(r"^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\*?pi(?:/(\d+(?:\.\d*)?))?$", re.IGNORECASE)


def parse_angle(token: str) -> float:
    """
    Parse an angle in radians.

    Raises:
        ParseError: the token is neither a number nor a multiple of pi
    """
    text = token.strip().replace(" ", "")
    match = _PI_TOKEN.match(text)
    if match:
        coeff, denominator = match.groups()
        if coeff in ("", "+"):
            factor = 1.0
        elif coeff == "-":
            factor = -1.0
        else:
            factor = float(coeff)
        value = factor * math.pi
        if denominator is not None:
            if float(denominator) == 0:
                raise ParseError(f"angle {token!r} divides by zero")
            value /= float(denominator)
        return value
    try:
        value = float(text)
    except ValueError as exc:
        raise ParseError(f"cannot parse angle {token!r}") from exc
    if not math.isfinite(value):
        raise ParseError(f"angle {token!r} is not finite")
    return value
