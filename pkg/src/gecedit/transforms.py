"""Token rewriting behind transform and suffix tags.

Every function here is mechanical and total-where-possible: it either returns
the rewritten token(s) or None when the rule does not apply.  Tag
classification relies on this by simulating the rewrite and accepting a tag
only when the output reproduces the aligned target exactly, so anything
classified is guaranteed to apply back.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:  # pragma: no cover
    from gecedit.lexicon import Lexicon

_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")
_VOWELS = "aeiou"


def pluralize(word: str, lexicon: "Lexicon") -> str:
    """Rule-based pluralization with irregular lookup."""
    irr = lexicon.plural_of.get(word)
    if irr is not None:
        return irr
    if word.endswith(_SIBILANT_ENDINGS):
        return word + "es"
    if len(word) >= 2 and word.endswith("y") and word[-2].lower() not in _VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def singularize(word: str, lexicon: "Lexicon") -> Optional[str]:
    """Inverse of pluralize; None when the word does not look plural."""
    irr = lexicon.singular_of.get(word)
    if irr is not None:
        return irr
    if len(word) >= 4 and word.endswith("ies"):
        return word[:-3] + "y"
    if word.endswith("es") and len(word) > 2:
        stem = word[:-2]
        if stem.endswith(_SIBILANT_ENDINGS):
            return stem
    if word.endswith("s") and not word.endswith("ss") and len(word) > 1:
        return word[:-1]
    return None


def _apply_case(name: str, token: str) -> Optional[str]:
    if name == "CASE_CAPITAL":
        return token[0].upper() + token[1:]
    if name == "CASE_LOWER":
        return token.lower()
    if name == "CASE_UPPER":
        return token.upper()
    return None


def _apply_verb(name: str, token: str, lexicon: "Lexicon") -> Optional[str]:
    # name is VERB_<src form>_<target form>
    _, src_form, tgt_form = name.split("_")
    for lemma, form in lexicon.forms_of(token):
        if form != src_form:
            continue
        out = lexicon.form(lemma, tgt_form)
        if out is not None:
            return out
    return None


def apply_suffix(name: str, token: str) -> Optional[str]:
    """Literal suffix edit named by the SUFFIXTRANSFORM rule."""
    if name.startswith("REMOVE_"):
        suffix = name[len("REMOVE_"):]
        if token.endswith(suffix) and len(token) > len(suffix):
            return token[: -len(suffix)]
        return None
    if name.startswith("APPEND_"):
        return token + name[len("APPEND_"):]
    old, _, new = name.partition("_TO_")
    old, new = old.lower(), new.lower()
    if token.endswith(old) and len(token) >= len(old):
        return token[: -len(old)] + new
    return None


def apply_transform(name: str, token: str, lexicon: "Lexicon") -> Optional[list[str]]:
    """Apply a TRANSFORM rule; returns the output tokens or None."""
    if name.startswith("CASE_"):
        out = _apply_case(name, token)
        return None if out is None else [out]
    if name == "SPLIT_HYPHEN":
        if "-" not in token:
            return None
        left, _, right = token.partition("-")
        if not left or not right:
            return None
        return [left, right]
    if name == "AGREEMENT_PLURAL":
        return [pluralize(token, lexicon)]
    if name == "AGREEMENT_SINGULAR":
        out = singularize(token, lexicon)
        return None if out is None else [out]
    if name.startswith("VERB_"):
        out = _apply_verb(name, token, lexicon)
        return None if out is None else [out]
    return None
