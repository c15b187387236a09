import time
import traceback
from typing import Any, Dict, Tuple

from error.errors import AmoebaError


def handle_amoeba_error(error: Exception, command: str) -> Tuple[Dict[str, Any], int]:
    """
    Turn any exception raised while running a command into a standardized
    JSON error document and the process exit code.

    This is the ONLY function in this file (following GOLDEN RULE).

    Args:
        error: The exception that escaped the command
        command: CLI command being run (dim, rank, verify, selftest)

    Returns:
        (error document, exit code). Toolkit errors keep their own exit code
        (2 parse, 3 zero column / loop, 4 verification, 5 size limit);
        anything else is a PROCESSING_ERROR with exit code 1.

    Example:
        try:
            document, code = cmd_dim(spec, config)
        except Exception as e:
            document, code = handle_amoeba_error(e, "dim")
    """

    if isinstance(error, AmoebaError):
        error_type = error.error_type
        exit_code = error.exit_code
        message = str(error)
    elif isinstance(error, FileNotFoundError):
        error_type = "FILE_NOT_FOUND"
        exit_code = 2
        message = f"Input file not found: {error.filename}"
    else:
        error_type = "PROCESSING_ERROR"
        exit_code = 1
        message = f"{command} failed: {error}"

    error_document = {
        "success": False,
        "error": {
            "type": error_type,
            "message": message,
            "command": command,
            "exit_code": exit_code,
            "timestamp": time.time(),
            "traceback": traceback.format_exc() if error_type == "PROCESSING_ERROR" else None,
        },
    }

    return error_document, exit_code
