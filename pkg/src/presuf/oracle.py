"""Brute-force reference answers for small inputs.

Everything here enumerates substrings directly, with no shared machinery,
so the fast implementations can be checked against it. Inputs are capped
at a desk-scale size because the enumeration is quadratic.
"""

from __future__ import annotations

DESK_SCALE_LIMIT = 512


def unique_substrings(text: bytes, limit: int = DESK_SCALE_LIMIT) -> set[bytes]:
    """Set of all distinct non-empty substrings of ``text``.

    Raises ValueError when the input is longer than ``limit``.
    """
    if len(text) > limit:
        raise ValueError(
            f"oracle input of {len(text)} bytes exceeds the {limit}-byte cap"
        )
    n = len(text)
    return {text[i:j + 1] for i in range(n) for j in range(i, n)}


def matching_substrings(
    text: bytes,
    prefix: bytes,
    suffix: bytes,
    limit: int = DESK_SCALE_LIMIT,
) -> set[bytes]:
    """Distinct non-empty substrings of ``text`` that start with ``prefix``
    and end with ``suffix``.

    The two constraints may overlap inside a match, e.g. a single ``a`` in
    the text satisfies prefix ``a`` plus suffix ``a`` on its own.
    """
    return {
        x for x in unique_substrings(text, limit)
        if x.startswith(prefix) and x.endswith(suffix)
    }
