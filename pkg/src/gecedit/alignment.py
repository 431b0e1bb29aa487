"""Token-level alignment between a source sentence and a target sentence.

The hot kernel lives in the compiled extension ``_align_fast`` when it was
built, with ``_align_py`` as the drop-in pure-Python fallback; the active
backend is chosen once at import and reported in ``BACKEND``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from gecedit._align_py import OP_DEL, OP_INS
from gecedit._align_py import align_ops as _align_ops_py

try:  # pragma: no cover - depends on how the package was built
    from gecedit._align_fast import align_ops as _align_ops_fast

    align_ops = _align_ops_fast
    BACKEND = "cython"
except ImportError:  # pragma: no cover
    _align_ops_fast = None
    align_ops = _align_ops_py
    BACKEND = "python"


def available_backends() -> dict[str, Callable]:
    """Alignment kernels importable in this environment, by name."""
    backends: dict[str, Callable] = {"python": _align_ops_py}
    if _align_ops_fast is not None:
        backends["cython"] = _align_ops_fast
    return backends


@dataclass(frozen=True)
class AlignedPair:
    """A (source, target) pair plus per-source-token target spans.

    ``spans[i]`` is a half-open index range into ``target``; spans are in
    order, non-overlapping, and jointly cover the whole target.  Target tokens
    inserted between source tokens belong to the preceding source token's
    span; insertions before the first source token belong to span 0.
    """

    source: tuple[str, ...]
    target: tuple[str, ...]
    spans: tuple[tuple[int, int], ...]

    def span_tokens(self, i: int) -> list[str]:
        start, end = self.spans[i]
        return list(self.target[start:end])


def align(source: Sequence[str], target: Sequence[str]) -> AlignedPair:
    """Align source tokens to target spans via the minimal edit script."""
    if len(source) == 0:
        raise ValueError("cannot align an empty source sentence")
    ops = align_ops(list(source), list(target))
    counts = [0] * len(source)
    cursor = -1  # last source index that consumed a target token
    for op, i, _j in ops:
        if op == OP_INS:
            counts[max(cursor, 0)] += 1
        elif op != OP_DEL:
            counts[i] += 1
            cursor = i
        else:
            cursor = i
    spans = []
    pos = 0
    for c in counts:
        spans.append((pos, pos + c))
        pos += c
    assert pos == len(target)
    return AlignedPair(tuple(source), tuple(target), tuple(spans))
