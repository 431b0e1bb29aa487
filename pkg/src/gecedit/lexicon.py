"""Bundled linguistic data: verb-form lexicon, irregular plurals, and the
error-pattern inventories used by the synthetic-noise generator.

File formats
------------
verbs.tsv               lemma<TAB>VBD<TAB>VBG<TAB>VBN<TAB>VBZ (lemma is the VB form)
irregular_plurals.tsv   singular<TAB>plural
prepositions.txt        one entry per line; an empty line is the empty entry
determiners.txt         same as prepositions.txt
letter_patterns.tsv     pattern<TAB>replacement, in inventory order
vowel_combinations.txt  one two-letter combination per line
similar_sound.tsv       letter<TAB>comma-separated substitutes
verb_types.txt          one verb-type name per line
pos_types.txt           one POS name per line
adjectives.txt          one adjective per line
manifest.json           {"files": {name: sha256-hex}}
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

VERB_FORM_NAMES = ("VB", "VBD", "VBG", "VBN", "VBZ")


class LexiconError(ValueError):
    """Malformed or missing lexicon data."""


class PatternDataError(ValueError):
    """Missing pattern file or checksum mismatch."""


def data_dir() -> Path:
    """Directory holding the bundled data files."""
    return Path(resources.files("gecedit").joinpath("data"))


@dataclass
class Lexicon:
    """Verb inflections and irregular noun numbers.

    Keys are lowercase and lookups are case-sensitive.
    """

    verb_forms: dict[str, dict[str, str]]
    plural_of: dict[str, str]
    singular_of: dict[str, str]
    _by_surface: dict[str, list[tuple[str, str]]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._by_surface:
            for lemma, forms in self.verb_forms.items():
                for form_name in VERB_FORM_NAMES:
                    surface = forms.get(form_name)
                    if surface:
                        self._by_surface.setdefault(surface, []).append((lemma, form_name))

    def forms_of(self, surface: str) -> list[tuple[str, str]]:
        """All (lemma, form name) readings of a surface token, in file order."""
        return self._by_surface.get(surface, [])

    def form(self, lemma: str, form_name: str) -> Optional[str]:
        forms = self.verb_forms.get(lemma)
        if forms is None:
            return None
        return forms.get(form_name)

    def is_verb(self, surface: str) -> bool:
        return surface in self._by_surface


def _read_lines(path: Path, keep_empty: bool = False) -> list[str]:
    text = path.read_text(encoding="utf-8")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not keep_empty:
        lines = [ln for ln in lines if ln]
    return lines


def load_lexicon(
    verbs_path: Union[str, Path, None] = None,
    plurals_path: Union[str, Path, None] = None,
) -> Lexicon:
    """Load the verb lexicon and irregular-plural list (bundled by default)."""
    verbs_path = Path(verbs_path) if verbs_path else data_dir() / "verbs.tsv"
    plurals_path = Path(plurals_path) if plurals_path else data_dir() / "irregular_plurals.tsv"

    verb_forms: dict[str, dict[str, str]] = {}
    for lineno, line in enumerate(_read_lines(verbs_path), start=1):
        cols = line.split("\t")
        if len(cols) != 5:
            raise LexiconError(f"{verbs_path}:{lineno}: expected 5 columns, got {len(cols)}")
        lemma = cols[0]
        if not lemma or lemma != lemma.lower():
            raise LexiconError(f"{verbs_path}:{lineno}: lemma must be non-empty lowercase")
        if lemma in verb_forms:
            raise LexiconError(f"{verbs_path}:{lineno}: duplicate lemma {lemma!r}")
        forms = {"VB": lemma}
        for name, surface in zip(("VBD", "VBG", "VBN", "VBZ"), cols[1:]):
            if surface:
                forms[name] = surface
        verb_forms[lemma] = forms

    plural_of: dict[str, str] = {}
    singular_of: dict[str, str] = {}
    for lineno, line in enumerate(_read_lines(plurals_path), start=1):
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0] or not cols[1]:
            raise LexiconError(f"{plurals_path}:{lineno}: expected singular<TAB>plural")
        plural_of[cols[0]] = cols[1]
        singular_of[cols[1]] = cols[0]

    return Lexicon(verb_forms, plural_of, singular_of)


PATTERN_FILES = (
    "prepositions.txt",
    "determiners.txt",
    "letter_patterns.tsv",
    "vowel_combinations.txt",
    "similar_sound.tsv",
    "verb_types.txt",
    "pos_types.txt",
    "adjectives.txt",
)


@dataclass(frozen=True)
class PatternInventories:
    """Inventories backing the rule-driven corruption operations."""

    prepositions: tuple[str, ...]
    determiners: tuple[str, ...]
    letter_patterns: tuple[tuple[str, str], ...]
    vowel_combinations: tuple[str, ...]
    similar_sound: tuple[tuple[str, tuple[str, ...]], ...]
    verb_types: tuple[str, ...]
    pos_types: tuple[str, ...]
    adjectives: frozenset[str]
    adjective_list: tuple[str, ...]


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_patterns(directory: Union[str, Path, None] = None) -> PatternInventories:
    """Load and checksum-verify the pattern inventories."""
    directory = Path(directory) if directory else data_dir()
    manifest_path = directory / "manifest.json"
    if not manifest_path.exists():
        raise PatternDataError(f"missing manifest: {manifest_path}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    expected = manifest.get("files", {})
    for name in PATTERN_FILES:
        path = directory / name
        if not path.exists():
            raise PatternDataError(f"missing pattern file: {path}")
        if name not in expected:
            raise PatternDataError(f"{name} not listed in manifest")
        digest = _sha256(path)
        if digest != expected[name]:
            raise PatternDataError(
                f"checksum mismatch for {name}: {digest} != {expected[name]}"
            )

    prepositions = tuple(_read_lines(directory / "prepositions.txt", keep_empty=True))
    determiners = tuple(_read_lines(directory / "determiners.txt", keep_empty=True))
    letter_patterns = tuple(
        (k, v)
        for k, _, v in (ln.partition("\t") for ln in _read_lines(directory / "letter_patterns.tsv"))
    )
    vowels = tuple(_read_lines(directory / "vowel_combinations.txt"))
    similar = tuple(
        (k, tuple(v.split(",")))
        for k, _, v in (ln.partition("\t") for ln in _read_lines(directory / "similar_sound.tsv"))
    )
    verb_types = tuple(_read_lines(directory / "verb_types.txt"))
    pos_types = tuple(_read_lines(directory / "pos_types.txt"))
    adjectives = tuple(_read_lines(directory / "adjectives.txt"))
    return PatternInventories(
        prepositions=prepositions,
        determiners=determiners,
        letter_patterns=letter_patterns,
        vowel_combinations=vowels,
        similar_sound=similar,
        verb_types=verb_types,
        pos_types=pos_types,
        adjectives=frozenset(adjectives),
        adjective_list=adjectives,
    )


def default_tagset_path() -> Path:
    return data_dir() / "default.tagset"


def default_profile_path() -> Path:
    return data_dir() / "default.profile"
