import json
from typing import Any, Dict


def format_json(document: Dict[str, Any]) -> str:
    """
    Serialize a result or error document for stdout / stderr.

    This is the ONLY function in this file (following GOLDEN RULE).
    Compact separators and insertion-ordered keys make the output a fixed
    point of parse-and-reserialize, and identical seeds give identical bytes.

    Args:
        document: JSON-serializable dict (exact integers only)

    Returns:
        str: one line of JSON

    Example:
        format_json({"dim": 6, "partition": [[1, 2, 5, 6], [3], [4], [7]]})
        # '{"dim":6,"partition":[[1,2,5,6],[3],[4],[7]]}'
    """
    return json.dumps(document, separators=(",", ":"), ensure_ascii=False)
