"""Rule mining over degrees of belief in arguments.

Degrees travel as exact decimal strings ("0.7", "0.25") or anything whose
str() form is one, rules as their text form ("p(A) > 0.5 -> p(T) < 0.5"),
datasets as CSV text. See the function docstrings on the extension module.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as __doc__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree test runs put _core on sys.path
    from _core import *  # noqa: F401,F403
