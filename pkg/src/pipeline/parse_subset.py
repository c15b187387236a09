import re

from amoeba_types.types import SubsetMask
from error.errors import ParseError

# ASCII digits only
_ELEMENT = re.compile(r"[0-9]+")


def parse_subset(text: str, ground_size: int) -> SubsetMask:
    """
    Parse a 1-based element list such as "1,3,5" into a mask.

    The empty string (or only whitespace) is the empty set. Repeated
    elements are allowed and count once.

    Raises:
        ParseError: on non-integer tokens or elements outside 1..ground_size
    """
    mask = 0
    if not text.strip():
        return mask
    for token in text.split(","):
        token = token.strip()
        if not _ELEMENT.fullmatch(token):
            raise ParseError(f"subset element {token!r} is not a positive integer")
        element = int(token)
        if not 1 <= element <= ground_size:
            raise ParseError(f"subset element {element} outside 1..{ground_size}")
        mask |= 1 << (element - 1)
    return mask
