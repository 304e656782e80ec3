"""Worked examples used as frozen expected values across the test suite.

Markers above 9 are written as integers here; elsewhere strings may show
A=10, B=11, ... in comments. Chain specs are tuples of marker groups,
alternating the groups of a chain bracket.
"""

from amplitile.chords import ChordDiagram, Recipe, RecipeNode, Step

# six-chord diagram on 15 markers used as the running example
FIG2_N = 15
FIG2_CHORDS = [
    (3, 4, 5, 6),
    (5, 6, 8, 9),
    (1, 2, 8, 9),
    (10, 11, 12, 13),
    (9, 10, 12, 13),
    (8, 9, 13, 14),
]
FIG2 = ChordDiagram(FIG2_N, FIG2_CHORDS)

# recipe steps expected for FIG2, in label order
FIG2_RECIPE_STEPS = [
    ((3, 4, 5, 6, 15), ()),
    ((5, 6, 8, 9, 15), ()),
    ((1, 2, 8, 9, 15), ()),
    ((10, 11, 12, 13, 15), ()),
    ((9, 10, 12, 13, 15), (14,)),
    ((8, 9, 13, 14, 15), ()),
]

# four-step recipe on 12 markers with nontrivial pre, cyc and refl
def ex222_recipe():
    n1 = RecipeNode(Step((3, 4, 5, 6, 12), pre=(2,)))
    n2 = RecipeNode(Step((1, 2, 5, 6, 12), cyc=2, refl=1), left=None, right=n1)
    n3 = RecipeNode(Step((6, 7, 8, 9, 11), pre=(10, 12)))
    n4 = RecipeNode(Step((5, 6, 10, 11, 12), cyc=4, refl=1), left=n2, right=n3)
    return Recipe(n4, range(1, 13))


EX222_GENERALIZED = {
    1: (6, 7, 8, 9, 3),
    2: (4, 5, 8, 9, 3),
    3: (3, 2, 1, 12, 10),
    4: (4, 3, 11, 10, 9),
}

# the only non-condensable letters of the recipe above
EX222_NONCONDENSABLE = {(2, "d"), (2, "n"), (4, "b")}
