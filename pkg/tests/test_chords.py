"""Chord diagrams, canonical labels, recipes, generalized chords."""

import pytest

from amplitile.chords import (
    ChordDiagram, Recipe, RecipeNode, Step, chords_from_json, chords_to_json,
    enumerate_chord_diagrams, narayana, recipe_from_chord_diagram,
    recipe_from_json, recipe_to_json,
)
from goldens import (
    EX222_GENERALIZED, EX222_NONCONDENSABLE, FIG2, FIG2_CHORDS, FIG2_N,
    FIG2_RECIPE_STEPS, ex222_recipe,
)


def test_counts_match_narayana_small():
    for n in range(5, 9):
        for k in range(0, n - 3):
            assert len(enumerate_chord_diagrams(n, k)) == narayana(n, k)


def test_validation_rejects_bad_chords():
    with pytest.raises(ValueError):
        ChordDiagram(8, [(1, 2, 3, 5)])  # d must follow c
    with pytest.raises(ValueError):
        ChordDiagram(8, [(1, 2, 7, 8)])  # touches the last marker
    with pytest.raises(ValueError):
        ChordDiagram(8, [(1, 2, 4, 5), (1, 2, 5, 6)])  # repeated start
    with pytest.raises(ValueError):
        ChordDiagram(10, [(1, 2, 5, 6), (3, 4, 7, 8)])  # crossing


def test_canonical_label_order_prefix_property():
    # each prefix's last chord is the rightmost top chord of the prefix
    for D in enumerate_chord_diagrams(8, 3):
        for j in range(1, D.k + 1):
            prefix = ChordDiagram(D.n, D.chords[:j])
            assert prefix.chords == D.chords[:j]
            last = prefix.chords[-1]
            assert prefix.parent(j) is None
            assert all(ch[2] <= last[2] for ch in prefix.chords)


def test_fig2_labels_and_relations():
    assert FIG2.chords == tuple(FIG2_CHORDS)
    assert FIG2.k == 6
    parents = {i: FIG2.parent(i) for i in range(1, 7)}
    assert parents == {1: 3, 2: 3, 3: None, 4: 5, 5: 6, 6: None}
    assert FIG2.sticky_children(6) == [5]
    assert FIG2.sticky_children(5) == [4]
    assert FIG2.same_end_children(3) == [2]
    assert FIG2.same_end_children(5) == [4]
    assert FIG2.head_to_tail_sibling(2) == 1
    assert FIG2.head_to_tail_sibling(6) == 3
    assert FIG2.head_to_tail_sibling(1) is None
    assert FIG2.chord_starting_at_end_of(1) == 2
    assert FIG2.chord_starting_at_end_of(3) == 6
    assert FIG2.chords_ending_at_start_of(2) == [1]


def test_fig2_recipe_steps():
    rec = recipe_from_chord_diagram(FIG2)
    got = [(node.step.butterfly, node.step.pre) for node in rec.nodes]
    assert got == FIG2_RECIPE_STEPS
    assert all(node.step.cyc == 0 and node.step.refl == 0
               for node in rec.nodes)


def test_recipe_matches_labels_everywhere():
    for n in range(5, 9):
        for k in range(1, n - 3):
            for D in enumerate_chord_diagrams(n, k):
                rec = recipe_from_chord_diagram(D)
                assert [nd.step.butterfly[:4] for nd in rec.nodes] \
                    == list(D.chords)
                assert all(nd.step.butterfly[4] == n for nd in rec.nodes)


def test_ex222_generalized_chords():
    rec = ex222_recipe()
    assert rec.generalized_chords() == EX222_GENERALIZED


def test_ex222_condensability():
    rec = ex222_recipe()
    cond = rec.condensability()
    assert {key for key, ok in cond.items() if not ok} == EX222_NONCONDENSABLE
    assert sum(cond.values()) == 17


def test_standard_recipe_generalized_chords_are_chords():
    # a recipe with no transports keeps every chord in standard position
    for D in enumerate_chord_diagrams(7, 2):
        rec = recipe_from_chord_diagram(D)
        gen = rec.generalized_chords()
        for i, ch in enumerate(D.chords, start=1):
            assert gen[i] == ch + (7,)


def test_chords_json_roundtrip():
    text = chords_to_json(FIG2)
    back = chords_from_json(text)
    assert back == FIG2


def test_recipe_json_roundtrip():
    rec = ex222_recipe()
    back = recipe_from_json(recipe_to_json(rec))
    assert [nd.step for nd in back.nodes] == [nd.step for nd in rec.nodes]
    assert back.generalized_chords() == EX222_GENERALIZED


def test_recipe_rejects_malformed_butterfly():
    with pytest.raises(ValueError):
        Recipe(RecipeNode(Step((1, 3, 4, 5, 6))), range(1, 7))
    with pytest.raises(ValueError):
        # marker 7 strands between d and n
        Recipe(RecipeNode(Step((1, 2, 5, 6, 8))), range(1, 9))
