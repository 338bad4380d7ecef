"""Scan-kernel backend selection.

The compiled extension ``fairplay._scan_c`` is preferred when built; the
pure-Python twin ``fairplay._scan_py`` is the fallback.  Setting the
environment variable ``FAIRPLAY_PURE`` to a non-empty value forces the
fallback (useful for benchmarking and for testing backend parity).
"""

import os

if os.environ.get("FAIRPLAY_PURE"):
    from fairplay import _scan_py as _backend
else:
    try:
        from fairplay import _scan_c as _backend  # type: ignore[attr-defined]
    except ImportError:
        from fairplay import _scan_py as _backend

scan_fair = _backend.scan_fair
scan_first_ef = _backend.scan_first_ef
scan_verify = _backend.scan_verify


def backend_name() -> str:
    return _backend.NAME
