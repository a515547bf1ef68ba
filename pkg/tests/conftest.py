import random

import pytest
from gmpy2 import mpq
from hypothesis import strategies as st

from trilink import canonical
from trilink.kernel import Triangle, point

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rationals(bound=4, max_den=64):
    return st.builds(
        lambda n, d: mpq(n, d),
        st.integers(-bound * max_den, bound * max_den),
        st.integers(1, max_den),
    )


def points(**kw):
    return st.builds(point, rationals(**kw), rationals(**kw), rationals(**kw))


def triangles(**kw):
    return st.tuples(points(**kw), points(**kw), points(**kw)).filter(
        lambda t: any(Triangle(*t).normal)
    ).map(lambda t: Triangle(*t))


def rand_rational(rng, lo=-1, hi=1, den=1000):
    return mpq(rng.randint(lo * den, hi * den), den)


def rand_point(rng, **kw):
    return point(rand_rational(rng, **kw), rand_rational(rng, **kw), rand_rational(rng, **kw))


def segment_triangle_instances(n, seed):
    """Random rational segment/triangle pairs; about half are aimed through the triangle."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a, b, c = (rand_point(rng) for _ in range(3))
        if not any(Triangle(a, b, c).normal):
            continue
        t = Triangle(a, b, c)
        if rng.random() < 0.5:
            # aim through a point near the triangle
            w = [mpq(rng.randint(1, 1000), 1000) for _ in range(3)]
            s = sum(w) * mpq(rng.randint(900, 1100), 1000)
            x = point(*((w[0] * a[k] + w[1] * b[k] + w[2] * c[k]) / s for k in range(3)))
            d = rand_point(rng)
            p = point(*(x[k] - d[k] * mpq(rng.randint(1, 1000), 1000) for k in range(3)))
            q = point(*(x[k] + d[k] * mpq(rng.randint(1, 1000), 1000) for k in range(3)))
        else:
            p, q = rand_point(rng), rand_point(rng)
        if p == q:
            continue
        out.append((p, q, t))
    return out


@pytest.fixture(scope="session")
def canon():
    return {name: ctor() for name, ctor in canonical.BY_NAME.items()}
