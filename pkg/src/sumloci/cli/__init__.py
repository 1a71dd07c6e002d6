"""
Command line front end of sumloci; run it as ``sumloci`` or ``python -m sumloci.cli``.
"""

from .commands import main

__all__ = ["main"]
