# pylint:disable=missing-module-docstring
from .commands import main

main()  # pylint:disable=no-value-for-parameter
