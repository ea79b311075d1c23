"""Natural deduction kernel, double-negation translation, and NK<->NJ compiler."""

try:
    from ._gknd import *  # noqa: F401,F403
except ImportError:
    # in-tree builds put the extension on sys.path instead of in the package
    from _gknd import *  # noqa: F401,F403
