import random

import pytest

from gecedit.edit2seq import edit2seq
from gecedit.noiser import NoiseProfile, Noiser
from gecedit.seq2edit import classify_edit, seq2edit
from gecedit.tags import TagFamily, TagSet, load_tagset

from corpus_util import make_corpus


def render(tags):
    return [t.render() for t in tags]


class TestClassifyEdit:
    def test_keep(self, lexicon, default_tagset):
        assert classify_edit("x", ["x"], lexicon, default_tagset).render() == "$KEEP"

    def test_delete(self, lexicon, default_tagset):
        assert classify_edit("x", [], lexicon, default_tagset).render() == "$DELETE"

    def test_verb_form(self, lexicon, default_tagset):
        tag = classify_edit("go", ["went"], lexicon, default_tagset)
        assert tag.render() == "$TRANSFORM_VERB_VB_VBD"

    def test_agreement_beats_suffix_and_verb(self, lexicon, default_tagset):
        # "books" is also VBZ of "book" in principle, but agreement has
        # priority; the roundtrip check keeps the choice honest.
        tag = classify_edit("book", ["books"], lexicon, default_tagset)
        assert tag.render() == "$TRANSFORM_AGREEMENT_PLURAL"
        assert edit2seq(["book"], [tag], lexicon) == ["books"]

    def test_suffix_literal(self, lexicon, default_tagset):
        tag = classify_edit("easy", ["easily"], lexicon, default_tagset)
        assert tag.render() == "$SUFFIXTRANSFORM_Y_TO_ILY"

    def test_case_transforms(self, lexicon, default_tagset):
        assert classify_edit("he", ["He"], lexicon, default_tagset).render() == "$TRANSFORM_CASE_CAPITAL"
        assert classify_edit("He", ["he"], lexicon, default_tagset).render() == "$TRANSFORM_CASE_LOWER"
        assert classify_edit("usa", ["USA"], lexicon, default_tagset).render() == "$TRANSFORM_CASE_UPPER"

    def test_split_hyphen(self, lexicon, default_tagset):
        tag = classify_edit("well-known", ["well", "known"], lexicon, default_tagset)
        assert tag.render() == "$TRANSFORM_SPLIT_HYPHEN"

    def test_replace_from_inventory(self, lexicon, default_tagset):
        tag = classify_edit("wrnog", ["wrong"], lexicon, default_tagset)
        assert tag.render() == "$REPLACE_wrong"

    def test_append_second_token(self, lexicon, default_tagset):
        tag = classify_edit("lives", ["lives", "in"], lexicon, default_tagset)
        assert tag.render() == "$APPEND_in"

    def test_multi_insertion_encodes_first_only(self, lexicon, default_tagset):
        tag = classify_edit("lives", ["lives", "in", "the"], lexicon, default_tagset)
        assert tag.render() == "$APPEND_in"

    def test_unknown_fallback(self, lexicon, default_tagset):
        assert classify_edit("zzz", ["qqqxyzzy"], lexicon, default_tagset).render() == "$UNKNOWN"
        assert classify_edit("a", ["zzzz", "a"], lexicon, default_tagset).render() == "$UNKNOWN"

    def test_pure_function(self, lexicon, default_tagset):
        args = ("go", ["went"], lexicon, default_tagset)
        assert classify_edit(*args) == classify_edit(*args)

    def test_respects_tagset_membership(self, lexicon):
        small = TagSet(["$KEEP", "$DELETE", "$UNKNOWN", "$REPLACE_went"])
        assert classify_edit("go", ["went"], lexicon, small).render() == "$REPLACE_went"
        tiny = TagSet(["$KEEP", "$DELETE", "$UNKNOWN"])
        assert classify_edit("go", ["went"], lexicon, tiny).render() == "$UNKNOWN"


class TestSeq2Edit:
    def test_verb_sentence(self, lexicon, default_tagset):
        tags = seq2edit("He go to school".split(), "He went to school".split(), lexicon, default_tagset)
        assert render(tags) == ["$KEEP", "$TRANSFORM_VERB_VB_VBD", "$KEEP", "$KEEP"]

    def test_identity_all_keep(self, lexicon, default_tagset):
        src = "a quiet evening".split()
        assert render(seq2edit(src, src, lexicon, default_tagset)) == ["$KEEP"] * 3

    def test_merge_space(self, lexicon, default_tagset):
        tags = seq2edit("over all fine".split(), "overall fine".split(), lexicon, default_tagset)
        assert render(tags) == ["$MERGE_SPACE", "$KEEP", "$KEEP"]

    def test_merge_hyphen(self, lexicon, default_tagset):
        tags = seq2edit("well known fact".split(), "well-known fact".split(), lexicon, default_tagset)
        assert render(tags) == ["$MERGE_HYPHEN", "$KEEP", "$KEEP"]

    def test_merge_requires_tag_in_tagset(self, lexicon):
        small = TagSet(["$KEEP", "$DELETE", "$UNKNOWN"])
        tags = seq2edit("over all".split(), ["overall"], lexicon, small)
        assert "$MERGE_SPACE" not in render(tags)

    def test_empty_source_rejected(self, lexicon, default_tagset):
        with pytest.raises(ValueError):
            seq2edit([], ["a"], lexicon, default_tagset)

    def test_empty_target_all_delete(self, lexicon, default_tagset):
        tags = seq2edit(["a", "b"], [], lexicon, default_tagset)
        assert render(tags) == ["$DELETE", "$DELETE"]

    def test_length_contract_random(self, lexicon, default_tagset):
        rng = random.Random(11)
        vocab = ["the", "a", "cat", "cats", "go", "went", "over", "all", "overall", "x-y"]
        for _ in range(300):
            src = [rng.choice(vocab) for _ in range(rng.randrange(1, 8))]
            tgt = [rng.choice(vocab) for _ in range(rng.randrange(0, 8))]
            assert len(seq2edit(src, tgt, lexicon, default_tagset)) == len(src)


def test_roundtrip_on_single_edit_noise(lexicon, default_tagset):
    profile = NoiseProfile(
        {
            "type_preposition": 1.0,
            "type_determiner": 1.0,
            "type_verbform": 1.0,
            "type_noun_number": 1.0,
            "char_pattern": 1.0,
            "similar_sound": 1.0,
            "ngram_swap": 1.0,
        },
        expected_errors=1.2,
        rng_seed=21,
    )
    noiser = Noiser(profile, lexicon=lexicon)
    clean = make_corpus(300, seed=5)
    checked = 0
    for i, target in enumerate(clean):
        corrupted, _ = noiser.corrupt(target, i)
        tags = seq2edit(corrupted, target, lexicon, default_tagset)
        if all(t.family is not TagFamily.UNKNOWN for t in tags):
            assert edit2seq(corrupted, tags, lexicon) == target
            checked += 1
    assert checked >= 290  # tag-expressible ops should almost never fall out


def test_coverage_monotonicity_without_transform_families(lexicon, default_tagset, tmp_path):
    full_lines = [t.render() for t in default_tagset]
    stripped = [
        line
        for line in full_lines
        if not line.startswith("$TRANSFORM_") and not line.startswith("$SUFFIXTRANSFORM_")
    ]
    stripped_path = tmp_path / "stripped.tagset"
    stripped_path.write_text("".join(l + "\n" for l in stripped))
    stripped_ts = load_tagset(stripped_path)

    profile = NoiseProfile(
        {"type_verbform": 1.0, "type_noun_number": 1.0, "adjective_adverb": 1.0},
        expected_errors=1.5,
        rng_seed=2,
    )
    noiser = Noiser(profile, lexicon=lexicon)
    clean = make_corpus(200, seed=9)

    def unknown_rate(tagset):
        unknown = edited = 0
        for i, target in enumerate(clean):
            corrupted, _ = noiser.corrupt(target, i)
            for tag in seq2edit(corrupted, target, lexicon, tagset):
                if tag.family is not TagFamily.KEEP:
                    edited += 1
                if tag.family is TagFamily.UNKNOWN:
                    unknown += 1
        return unknown / edited if edited else 0.0

    assert unknown_rate(stripped_ts) >= unknown_rate(default_tagset)
