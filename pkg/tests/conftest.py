import random

import pytest
from hypothesis import settings, strategies as st

from poset_cohom.documents import random_poset
from poset_cohom.exactla import GF, QQ
from poset_cohom.poset import Poset

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(3)]

_ACCEPTANCE: list[str] = []


@st.composite
def posets(draw, min_size=0, max_size=7):
    """Random posets with shuffled, string-labelled elements."""
    n = draw(st.integers(min_size, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    label = {i: f"e{perm[i]}" for i in range(n)}
    order = sorted(range(n), key=lambda i: perm[i])
    return Poset([label[i] for i in order], [(label[a], label[b]) for a, b in chosen])


def layered_poset(n, rng, density=0.6):
    """Random graded poset: points split into layers of width 2-3, each point
    covering a random nonempty subset of the layer below."""
    layers, left, label = [], n, 1
    while left:
        w = min(left, rng.randint(2, 3))
        layers.append(list(range(label, label + w)))
        label += w
        left -= w
    rels = []
    for below, above in zip(layers, layers[1:]):
        for b in above:
            chosen = [a for a in below if rng.random() < density] or [rng.choice(below)]
            rels += [(a, b) for a in chosen]
    return Poset(range(1, n + 1), rels)


def seeded_posets(count, max_n, seed, p_range=(0.05, 0.8)):
    """Alternate the documented pair-probability generator with layered posets,
    which have much longer resolutions at this size."""
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(1, max_n)
        if k % 2:
            yield layered_poset(n, rng, rng.uniform(0.4, 0.9))
        else:
            yield random_poset(n, rng.uniform(*p_range), rng.randrange(2**31)).to_poset()


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def record(label, check):
        try:
            detail = check()
        except BaseException:
            _ACCEPTANCE.append(f"FAIL  {label}")
            print(f"FAIL  {label}")
            raise
        line = f"PASS  {label}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
