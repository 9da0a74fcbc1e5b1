"""Mixed multiplicities of multigraded modules and of ideals."""

import json

from ._core import Document, MultimultError

__all__ = ["Document", "MultimultError", "parse", "run"]


def parse(text):
    return Document(text)


def run(command, text, **flags):
    """Run a CLI command on input text; returns (exit_code, report dict)."""
    code, report = Document(text).run(command, **flags)
    return code, json.loads(report)
