"""Conversion of a (source, target) sentence pair into per-token edit tags.

The tag sequence always has one tag per source token.  Classification is
"inverse application": a transform or suffix tag is emitted only when applying
it to the source token reproduces the aligned target exactly, which makes the
apply side a strict inverse by construction.
"""

from __future__ import annotations

from typing import Sequence

from gecedit.alignment import AlignedPair, align
from gecedit.lexicon import Lexicon
from gecedit.tags import (
    DELETE_TAG,
    KEEP_TAG,
    MERGE_HYPHEN_TAG,
    MERGE_SPACE_TAG,
    SUFFIX_NAMES,
    TRANSFORM_NAMES,
    UNKNOWN_TAG,
    EditTag,
    TagFamily,
    TagSet,
)
from gecedit.transforms import apply_suffix, apply_transform

# Candidate (name, tag, rendered) triples, fixed once so per-token
# classification does no tag construction or validation.
def _candidates(names, family):
    return tuple((n, EditTag(family, n), EditTag(family, n).render()) for n in names)


_CASE = _candidates(("CASE_CAPITAL", "CASE_LOWER", "CASE_UPPER"), TagFamily.TRANSFORM)
_SPLIT = _candidates(("SPLIT_HYPHEN",), TagFamily.TRANSFORM)
_AGREEMENT_AND_VERB = _candidates(
    ("AGREEMENT_PLURAL", "AGREEMENT_SINGULAR")
    + tuple(n for n in TRANSFORM_NAMES if n.startswith("VERB_")),
    TagFamily.TRANSFORM,
)
_SUFFIX = _candidates(SUFFIX_NAMES, TagFamily.SUFFIXTRANSFORM)


def classify_edit(
    src_token: str,
    tgt_span: Sequence[str],
    lexicon: Lexicon,
    tagset: TagSet,
) -> EditTag:
    """Pick the first applicable tag for one aligned (token, span) pair.

    Priority: KEEP, DELETE, case transforms, hyphen split, agreement, verb
    form, literal suffix edit, replace, append, UNKNOWN.  Merge tags are
    assigned by ``seq2edit`` before per-token classification.
    """
    span = list(tgt_span)
    if span == [src_token]:
        return KEEP_TAG
    if not span:
        return DELETE_TAG

    if len(span) == 1:
        target = span[0]
        for name, tag, rendered in _CASE:
            if rendered in tagset and apply_transform(name, src_token, lexicon) == [target]:
                return tag
    if len(span) == 2:
        name, tag, rendered = _SPLIT[0]
        if rendered in tagset and apply_transform(name, src_token, lexicon) == span:
            return tag
    if len(span) == 1:
        target = span[0]
        for name, tag, rendered in _AGREEMENT_AND_VERB:
            if rendered in tagset and apply_transform(name, src_token, lexicon) == [target]:
                return tag
        for name, tag, rendered in _SUFFIX:
            if rendered in tagset and apply_suffix(name, src_token) == target:
                return tag
        if target in tagset.replace_inventory:
            return EditTag(TagFamily.REPLACE, target)
    if len(span) >= 2 and span[0] == src_token and span[1] in tagset.append_inventory:
        # Only the first inserted token is encoded; iterative refinement
        # recovers the rest.
        return EditTag(TagFamily.APPEND, span[1])
    return UNKNOWN_TAG


def seq2edit(
    source: Sequence[str],
    target: Sequence[str],
    lexicon: Lexicon,
    tagset: TagSet,
) -> list[EditTag]:
    """Derive the edit-tag sequence turning ``source`` into ``target``.

    Output length always equals ``len(source)``.  Adjacent source tokens whose
    concatenation (direct or hyphenated) equals one target token get a merge
    tag on the first token; the second is classified against whatever remains
    of the combined span.
    """
    if len(source) == 0:
        raise ValueError("seq2edit requires a non-empty source sentence")
    pair = align(source, target)
    return edits_from_alignment(pair, lexicon, tagset)


def edits_from_alignment(pair: AlignedPair, lexicon: Lexicon, tagset: TagSet) -> list[EditTag]:
    """Tag an already-aligned pair (alignment reuse for corpus pipelines)."""
    source = pair.source
    n = len(source)
    tags: list[EditTag | None] = [None] * n

    have_space = MERGE_SPACE_TAG in tagset
    have_hyphen = MERGE_HYPHEN_TAG in tagset
    if have_space or have_hyphen:
        i = 0
        while i < n - 1:
            combined = pair.span_tokens(i) + pair.span_tokens(i + 1)
            if combined:
                head = combined[0]
                merged = None
                if have_space and head == source[i] + source[i + 1]:
                    merged = MERGE_SPACE_TAG
                elif have_hyphen and head == source[i] + "-" + source[i + 1]:
                    merged = MERGE_HYPHEN_TAG
                if merged is not None:
                    tags[i] = merged
                    rest = combined[1:]
                    tags[i + 1] = (
                        KEEP_TAG if not rest else classify_edit(source[i + 1], rest, lexicon, tagset)
                    )
                    i += 2
                    continue
            i += 1

    for i in range(n):
        if tags[i] is None:
            tags[i] = classify_edit(source[i], pair.span_tokens(i), lexicon, tagset)
    return tags  # type: ignore[return-value]
