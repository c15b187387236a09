import re
from fractions import Fraction
from typing import Optional

from amoeba_types.types import GaussianRational
from error.errors import ParseError

# a(/b)? optionally followed by [+-] c(/d)? i, where c may be omitted ("1+i")
_COMPLEX = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)?i)?$")
# purely imaginary: i, -i, 2i, +3/4i
_IMAGINARY = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?i$")


def _rational(text: Optional[str], entry: str) -> Fraction:
    if text is None:
        return Fraction(1)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in entry {entry!r}")


def parse_entry(text: str) -> GaussianRational:
    """
    Parse one matrix entry of the form a, a/b, a+ci, a/b-c/di, i, -i, 2i.

    This is the ONLY public function in this file (following GOLDEN RULE).

    Args:
        text: the entry, without surrounding whitespace

    Returns:
        GaussianRational: the exact value

    Raises:
        ParseError: if the text does not match the grammar or divides by zero

    Example:
        parse_entry("3/2-1/3i")   # GaussianRational(3/2, -1/3)
        parse_entry("-i")         # GaussianRational(0, -1)
    """

    match = _COMPLEX.match(text)
    if match:
        real_text, sign, imag_text = match.groups()
        real = _rational(real_text, text)
        if sign is None:
            return GaussianRational(real, Fraction(0))
        imag = _rational(imag_text, text)
        return GaussianRational(real, imag if sign == "+" else -imag)

    match = _IMAGINARY.match(text)
    if match:
        sign, imag_text = match.groups()
        imag = _rational(imag_text, text)
        return GaussianRational(Fraction(0), -imag if sign == "-" else imag)

    raise ParseError(f"malformed matrix entry {text!r}")
