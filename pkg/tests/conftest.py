import pytest

import ghderiv as G

# Every built-in algebra the property suites quantify over.
ALGEBRA_SPECS = ("tn2", "tn3", "tn4", "mn2", "mn3", "quat", "ring", "poly(ring,1)")


@pytest.fixture(scope="session")
def algebras():
    return {s: G.from_spec(s) for s in ALGEBRA_SPECS}


@pytest.fixture(scope="session")
def solved():
    """Memoized solve-and-certify: every space handed out passed verify_space."""
    cache = {}

    def get(spec, kind, constraints=None, ring=G.QQ):
        key = (spec, kind, constraints, ring)
        if key not in cache:
            sp = G.solve(G.from_spec(spec, ring), kind, constraints)
            assert G.verify_space(sp), f"certificates failed for {key}"
            cache[key] = sp
        return cache[key]

    get.cache = cache
    return get


@pytest.fixture(scope="session")
def catalog_report():
    from ghderiv import catalog

    return catalog.run_catalog()
