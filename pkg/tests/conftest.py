import random
import string
import textwrap

import pytest
from hypothesis import strategies as st

from engine.states import Polynomial, Term, TreeNode

# ─────────────────────────────────────────────────────────────────────────────
# Published examples
# ─────────────────────────────────────────────────────────────────────────────

FIRST_FACTOR = "-yx8+9x3-1+y"
SECOND_FACTOR = "x5y+1+x3"
PRODUCT_EXPONENT_LINE = "   13 2    11      8      6    5 2    5     3      3"
PRODUCT_BASE_LINE = "- x  y  - x  y + 8x y + 9x  + x y  - x y + x y + 8x  + y - 1"

ATAN_TREE = "(* (atan (+ x zz) (+ yy xxx)) (atan (+ xxx zzz) (+ yyyy x)))"
ATAN_SUBTREE = "(atan (+ x zz) (+ yy xxx))"

# As printed, with the figures' uniform 5-column indent.
_FIGURE_NO_BARS = """\
                   *
         atan              atan
      +        +       +           +
     x zz    yy xxx xxx zzz    yyyy x
"""

_FIGURE_WITH_BARS = """\
                   *
           |-----------------|
         atan              atan
      |--------|       |-----------|
      +        +       +           +
     |--|     |--|   |---|       |--|
     x zz    yy xxx xxx zzz    yyyy x
"""

FIGURE_NO_BARS = textwrap.dedent(_FIGURE_NO_BARS).splitlines()
FIGURE_WITH_BARS = textwrap.dedent(_FIGURE_WITH_BARS).splitlines()

LABEL_ALPHABET = string.ascii_lowercase + "+-*/^"


# ─────────────────────────────────────────────────────────────────────────────
# Seeded generators for the fixed-count sweeps
# ─────────────────────────────────────────────────────────────────────────────

def random_polynomial(rng: random.Random, max_terms=8, max_exp=9, max_coeff=99) -> Polynomial:
    """Raw polynomial; repeated exponents and zero coefficients allowed."""
    return Polynomial(terms=tuple(
        Term(
            coeff=rng.randint(-max_coeff, max_coeff),
            xexp=rng.randint(0, max_exp),
            yexp=rng.randint(0, max_exp),
        )
        for _ in range(rng.randint(0, max_terms))
    ))


def deep_comb(depth: int) -> str:
    """Left comb (+ (+ ... (+ a b) ... b) b) nested `depth` levels deep."""
    return "(+ " * depth + "a" + " b)" * depth


def random_label(rng: random.Random, max_size=6) -> str:
    return "".join(rng.choice(LABEL_ALPHABET) for _ in range(rng.randint(1, max_size)))


def random_tree(rng: random.Random, max_depth=8, leaf_chance=0.4, depth=0) -> TreeNode:
    if depth >= max_depth or rng.random() < leaf_chance:
        return TreeNode(label=random_label(rng))
    return TreeNode(
        label=random_label(rng),
        left=random_tree(rng, max_depth, leaf_chance, depth + 1),
        right=random_tree(rng, max_depth, leaf_chance, depth + 1),
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(scope="session")
def random_trees() -> list[TreeNode]:
    rng = random.Random(1000)
    return [random_tree(rng) for _ in range(1000)]


# ─────────────────────────────────────────────────────────────────────────────
# Hypothesis strategies
# ─────────────────────────────────────────────────────────────────────────────

labels = st.text(alphabet=LABEL_ALPHABET, min_size=1, max_size=6)

trees = st.recursive(
    labels.map(lambda label: TreeNode(label=label)),
    lambda children: st.builds(
        lambda label, left, right: TreeNode(label=label, left=left, right=right),
        labels, children, children,
    ),
    max_leaves=24,
)

terms = st.builds(
    Term,
    coeff=st.integers(-99, 99),
    xexp=st.integers(0, 9),
    yexp=st.integers(0, 9),
)

raw_polynomials = st.lists(terms, max_size=12).map(lambda ts: Polynomial(terms=tuple(ts)))
