"""
Response helper utilities for CLI commands.

Provides standardized output for success and error cases: results go to
stdout as a JSON envelope, errors to the log, and both return the exit code.
"""

import json
import logging
from typing import Any

logger = logging.getLogger("trustprop")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILED = 1


def success_response(data: Any, message: str = None) -> int:
    """
    Print a standardized success envelope.

    Args:
        data: JSON-serializable result data
        message: Optional success message

    Returns:
        Exit code 0
    """
    response = {
        'success': True,
        'data': data
    }

    if message:
        response['message'] = message

    print(json.dumps(response, indent=2, default=str))
    return EXIT_OK


def error_response(message: str, exit_code: int = EXIT_FAILED, error_code: str = None) -> int:
    """
    Log a standardized error.

    Args:
        message: Error message
        exit_code: Process exit code
        error_code: Optional short error class name

    Returns:
        The exit code
    """
    if error_code:
        logger.error("[%s] %s", error_code, message)
    else:
        logger.error("%s", message)
    return exit_code
