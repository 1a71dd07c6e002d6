"""
Version information for the sumloci package.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("sumloci")
except PackageNotFoundError:
    __version__ = "0.0.0"
# Please keep this name in sync with the name of the project in pyproject.toml
