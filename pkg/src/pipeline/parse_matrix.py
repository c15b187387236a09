import logging

from amoeba_types.types import GRMatrix, MAX_GROUND_SIZE
from error.errors import ParseError
from pipeline.parse_entry import parse_entry

logger = logging.getLogger(__name__)


def parse_matrix(text: str) -> GRMatrix:
    """
    Parse a matrix in the text format.

    This is the ONLY function in this file (following GOLDEN RULE).
    One row per line, entries separated by whitespace. Everything after a
    '#' is a comment; blank lines are skipped.

    Args:
        text: file contents

    Returns:
        GRMatrix: d x n matrix, 1 <= n <= 64

    Raises:
        ParseError: on malformed entries, ragged rows, an empty matrix or
            more than 64 columns

    Example:
        parse_matrix("# identity\\n1 0\\n0 1\\n")  # 2 x 2
    """

    rows = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            row = [parse_entry(token) for token in content.split()]
        except ParseError as e:
            raise ParseError(f"line {line_number}: {e}")
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"line {line_number}: expected {len(rows[0])} entries, found {len(row)}")
        rows.append(row)

    if not rows:
        raise ParseError("matrix has no rows")
    if len(rows[0]) > MAX_GROUND_SIZE:
        raise ParseError(f"matrix has {len(rows[0])} columns, limit is {MAX_GROUND_SIZE}")

    logger.debug(f"parsed {len(rows)}x{len(rows[0])} matrix")
    return GRMatrix.from_rows(rows)
