import pytest

from gecedit.lexicon import default_tagset_path
from gecedit.tags import (
    SUFFIX_NAMES,
    TRANSFORM_NAMES,
    EditTag,
    TagError,
    TagFamily,
    TagSet,
    load_tagset,
)


def test_minimal_tagset(tmp_path):
    path = tmp_path / "min.tagset"
    path.write_text("$KEEP\n$DELETE\n$UNKNOWN\n")
    ts = load_tagset(path)
    assert len(ts) == 3
    assert ts.id_of("$KEEP") == 0
    assert ts.tag_of(1).family is TagFamily.DELETE


def test_default_contains_merge_tags(default_tagset):
    hyphen = default_tagset.id_of("$MERGE_HYPHEN")
    space = default_tagset.id_of("$MERGE_SPACE")
    assert hyphen != space


def test_default_contains_verb_transform(default_tagset):
    assert "$TRANSFORM_VERB_VB_VBD" in default_tagset


def test_render_parse_roundtrip_whole_default_tagset(default_tagset):
    for tag in default_tagset:
        assert EditTag.parse(tag.render()) == tag
        assert EditTag.parse(tag.render()).render() == tag.render()


def test_parse_payloads():
    tag = EditTag.parse("$APPEND_well-known")
    assert tag.family is TagFamily.APPEND and tag.payload == "well-known"
    tag = EditTag.parse("$REPLACE_foo_bar")
    assert tag.payload == "foo_bar"
    tag = EditTag.parse("$SUFFIXTRANSFORM_APPEND_wise")
    assert tag.family is TagFamily.SUFFIXTRANSFORM and tag.payload == "APPEND_wise"


@pytest.mark.parametrize(
    "bad",
    [
        "KEEP",  # missing $
        "$KEEP_x",  # payload on a bare tag
        "$MERGE_COLON",  # unknown merge joiner
        "$TRANSFORM_NOPE",  # unknown transform name
        "$SUFFIXTRANSFORM_Q_TO_X",  # unknown suffix rule
        "$APPEND_",  # empty payload
        "$WHATEVER_x",  # unknown family
        "",  # blank line
    ],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(TagError):
        EditTag.parse(bad)


def test_duplicate_tag_rejected(tmp_path):
    path = tmp_path / "dup.tagset"
    path.write_text("$KEEP\n$DELETE\n$UNKNOWN\n$KEEP\n")
    with pytest.raises(TagError, match="duplicate"):
        load_tagset(path)


def test_required_tags_enforced(tmp_path):
    path = tmp_path / "nounknown.tagset"
    path.write_text("$KEEP\n$DELETE\n")
    with pytest.raises(TagError, match=r"\$UNKNOWN"):
        load_tagset(path)


def test_id_assignment_stable_across_loads():
    first = load_tagset(default_tagset_path())
    second = load_tagset(default_tagset_path())
    assert [t.render() for t in first] == [t.render() for t in second]
    for tag in first:
        assert first.id_of(tag) == second.id_of(tag)


def test_inventories(default_tagset):
    assert "the" in default_tagset.append_inventory
    assert "the" in default_tagset.replace_inventory
    assert len(default_tagset.append_inventory) == 1193
    assert len(default_tagset.replace_inventory) == 3725


def test_catalog_sizes():
    assert len(TRANSFORM_NAMES) == 26
    assert len(SUFFIX_NAMES) == 70


def test_tag_validation_direct():
    with pytest.raises(TagError):
        EditTag(TagFamily.APPEND, "two words")
    with pytest.raises(TagError):
        EditTag(TagFamily.KEEP, "x")
    with pytest.raises(TagError):
        EditTag(TagFamily.MERGE, "COMMA")


def test_tagset_from_strings():
    ts = TagSet(["$KEEP", "$DELETE", "$UNKNOWN", "$REPLACE_a"])
    assert ts.id_of(EditTag(TagFamily.REPLACE, "a")) == 3
    assert "$REPLACE_a" in ts
    assert "$REPLACE_b" not in ts
    with pytest.raises(TagError):
        ts.id_of("$REPLACE_b")
