"""Canonical JSON and stable digests of input documents."""

import hashlib
import json
from typing import Any

DIGEST_LENGTH = 16


def canonical_json(value: Any) -> str:
    """Compact JSON with sorted keys; identical data always gives identical text."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def input_digest(value: Any) -> str:
    """Return a 16-hex-char prefix of SHA-256 over the canonical JSON of ``value``.

    Used to tie a report to the exact document it was computed from.
    """
    return hashlib.sha256(canonical_json(value).encode()).hexdigest()[:DIGEST_LENGTH]
