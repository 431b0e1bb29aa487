"""Pure-Python token alignment kernel.

Reference implementation of the minimal-cost monotone alignment used by the
edit tagger: Levenshtein over tokens with unit insert/delete cost and a
character-overlap discount for substitutions, so that similar tokens pair up
instead of being deleted and re-inserted.  The compiled kernel in
``_align_fast`` must produce byte-identical output.
"""

from __future__ import annotations

from typing import Sequence

OP_KEEP = 0
OP_SUB = 1
OP_DEL = 2
OP_INS = 3


def _lcs_len(a: str, b: str) -> int:
    la, lb = len(a), len(b)
    prev = [0] * (lb + 1)
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        ai = a[i - 1]
        cur[0] = 0
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                up = prev[j]
                left = cur[j - 1]
                cur[j] = up if up >= left else left
        prev, cur = cur, prev
    return prev[lb]


def _sub_cost(a: str, b: str) -> float:
    if a == b:
        return 0.0
    sim = 2.0 * _lcs_len(a, b) / (len(a) + len(b))
    if sim >= 0.5:
        return 1.0 - sim / 2.0
    return 1.0


def align_ops(src: Sequence[str], tgt: Sequence[str]) -> list[tuple[int, int, int]]:
    """Minimal-cost monotone edit script between two token sequences.

    Returns (op, src_index, tgt_index) triples in left-to-right order, with -1
    for the side an op does not touch.  Ties are broken preferring
    keep/substitute, then delete, then insert.
    """
    n, m = len(src), len(tgt)
    width = m + 1
    opmat = bytearray((n + 1) * width)
    for j in range(1, width):
        opmat[j] = OP_INS
    prev = [float(j) for j in range(width)]
    cur = [0.0] * width
    for i in range(1, n + 1):
        si = src[i - 1]
        cur[0] = float(i)
        base = i * width
        opmat[base] = OP_DEL
        for j in range(1, width):
            c = _sub_cost(si, tgt[j - 1])
            best = prev[j - 1] + c
            op = OP_KEEP if c == 0.0 else OP_SUB
            t = prev[j] + 1.0
            if t < best:
                best = t
                op = OP_DEL
            t = cur[j - 1] + 1.0
            if t < best:
                best = t
                op = OP_INS
            cur[j] = best
            opmat[base + j] = op
        prev, cur = cur, prev

    out: list[tuple[int, int, int]] = []
    i, j = n, m
    while i > 0 or j > 0:
        op = opmat[i * width + j]
        if op == OP_INS:
            j -= 1
            out.append((OP_INS, -1, j))
        elif op == OP_DEL:
            i -= 1
            out.append((OP_DEL, i, -1))
        else:
            i -= 1
            j -= 1
            out.append((op, i, j))
    out.reverse()
    return out
