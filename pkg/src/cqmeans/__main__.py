"""Allow `python -m cqmeans`."""

from .cli import entry

entry()
