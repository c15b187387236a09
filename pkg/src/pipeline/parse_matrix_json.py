import json

from amoeba_types.types import GRMatrix, MAX_GROUND_SIZE
from error.errors import ParseError
from pipeline.parse_entry import parse_entry


def parse_matrix_json(text: str) -> GRMatrix:
    """
    Parse {"rows": [["3/2+1/3i", "0", ...], ...]}.

    Entries may be strings in the entry grammar or JSON integers.

    Raises:
        ParseError: on invalid JSON, a missing or empty "rows" list, ragged
            rows or malformed entries
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON matrix: {e}")

    rows = document.get("rows") if isinstance(document, dict) else None
    if not isinstance(rows, list) or not rows or not all(isinstance(row, list) for row in rows):
        raise ParseError('JSON matrix needs a nonempty "rows" list of lists')

    width = len(rows[0])
    if width == 0 or width > MAX_GROUND_SIZE:
        raise ParseError(f"matrix needs 1..{MAX_GROUND_SIZE} columns, found {width}")

    parsed = []
    for index, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"row {index}: expected {width} entries, found {len(row)}")
        entries = []
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                raise ParseError(f"row {index}: unsupported entry {entry!r}")
            entries.append(parse_entry(str(entry).strip()))
        parsed.append(entries)
    return GRMatrix.from_rows(parsed)
