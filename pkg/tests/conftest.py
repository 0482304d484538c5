"""Shared generators for the randomized suites.

The regimes here deliberately mix degenerate single-letter texts with
wider alphabets, and queries drawn from the text (sometimes perturbed)
with purely random ones, so absent and empty patterns all show up.
"""

import random

ALPHABETS = (1, 2, 4, 26)


def random_text(rng: random.Random, max_len: int = 200):
    """A text and its alphabet. Mostly short texts, sometimes long."""
    k = rng.choice(ALPHABETS)
    letters = bytes(range(97, 97 + k))
    n = rng.randint(0, 40) if rng.random() < 0.85 else rng.randint(0, max_len)
    return bytes(rng.choice(letters) for _ in range(n)), letters


def random_query(rng: random.Random, text: bytes, letters: bytes,
                 max_len: int = 12) -> bytes:
    """A query string: sometimes empty, usually a (possibly perturbed)
    slice of the text, otherwise random letters."""
    roll = rng.random()
    if roll < 0.12:
        return b""
    if text and roll < 0.62:
        i = rng.randrange(len(text))
        j = min(len(text), i + rng.randint(1, max_len))
        q = bytearray(text[i:j])
        if rng.random() < 0.25:
            q[rng.randrange(len(q))] = rng.choice(letters)
        return bytes(q)
    return bytes(rng.choice(letters) for _ in range(rng.randint(1, max_len)))
