import random

import pytest

import multicurve as mc

FIXTURES = ["ex11", "n4ex", "n4ex2", "flower:4", "flower:5"]


@pytest.fixture(params=FIXTURES)
def any_fixture(request):
    return mc.fixture(request.param)


def random_triangulation(rng, triangles=4):
    """Random connected oriented surface from a random slot pairing."""
    while True:
        slots = list(range(3 * triangles))
        rng.shuffle(slots)
        pairs = [(slots[2 * i], slots[2 * i + 1])
                 for i in range(len(slots) // 2)]
        try:
            return mc.build(triangles, pairs)
        except mc.errors.TriangulationError:
            continue


def random_admissible(rng, tri, max_degree=8):
    """Random admissible coloring: a sum of random barbell generators."""
    gens = mc.enumerate_barbell_trees(tri)
    values = [0] * tri.num_edges
    budget = max_degree
    while budget > 0:
        g = rng.choice(gens)
        if g.degree > budget:
            break
        values = [a + b for a, b in zip(values, g.coloring.values)]
        budget -= g.degree
    return mc.Coloring(tri, values)


@pytest.fixture
def rng():
    return random.Random(20240817)
