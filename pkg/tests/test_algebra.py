import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import model
from tcsum.algebra import (
    ClassVector,
    RingError,
    StructureSpec,
    check_duality,
    connected_sum,
    format_poincare,
    iterated_sum,
    ring_from_table,
    ring_new,
)


def truncated(n):
    """GF(2)[x]/x^(n+1) written out by hand."""
    spec = StructureSpec(gens=[("x" if k == 1 else f"x^{k}", k) for k in range(1, n + 1)])
    lab = lambda k: "x" if k == 1 else f"x^{k}"
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a + b <= n:
                spec.add_product(lab(a), lab(b), [lab(a + b)])
    return ring_from_table(spec)


def torus():
    spec = StructureSpec(gens=[("a", 1), ("b", 1), ("ab", 2)])
    spec.add_product("a", "b", ["ab"])
    return ring_from_table(spec)


class TestRingNew:
    def test_klein_bottle(self):
        r = ring_new(2, 2)
        assert r.labels == ("1", "x1", "x2", "t")
        assert r.degrees == (0, 1, 1, 2)

    def test_basis_count_against_groebner(self):
        r = ring_new(3, 4)
        assert len(r) == 11
        dims = model(3, 4, 1).graded_dims()
        assert r.poincare() == dims[:5]
        assert dims[5] == 0
        assert r.poincare()[2] == 3

    def test_single_generator_is_truncated_polynomial(self):
        r = ring_new(1, 5)
        assert r.structure() == truncated(5).structure()
        x = r.element("x1")
        assert x ** 5 == r.element("t")
        assert not x ** 6

    @pytest.mark.parametrize("g,m", [(0, 3), (2, 1), (1, 0)])
    def test_rejects_degenerate(self, g, m):
        with pytest.raises(RingError):
            ring_new(g, m)

    def test_canonical_order(self):
        r = ring_new(2, 4)
        assert r.labels == ("1", "x1", "x2", "x1^2", "x2^2", "x1^3", "x2^3", "t")
        assert r.meta == (2, 4)


class TestMulBasis:
    def test_distinct_generators_annihilate(self):
        r = ring_new(2, 2)
        assert not r.mul_basis(r.index("x1"), r.index("x2"))

    def test_power_reaches_top(self):
        r = ring_new(2, 3)
        assert r.mul_basis(r.index("x1^2"), r.index("x1")) == r.element("t")

    def test_top_times_positive_is_zero(self):
        r = ring_new(2, 2)
        assert not r.mul_basis(r.index("t"), r.index("x1"))

    def test_out_of_range(self):
        with pytest.raises(RingError):
            ring_new(2, 2).mul_basis(0, 4)

    @pytest.mark.parametrize("g,m", [(2, 2), (3, 5), (4, 3)])
    def test_relations(self, g, m):
        r = ring_new(g, m)
        lab = lambda u, k: f"x{u}" if k == 1 else f"x{u}^{k}"
        for u in range(1, g + 1):
            for v in range(1, g + 1):
                for j in range(1, m):
                    for k in range(1, m):
                        prod = r.mul_basis(r.index(lab(u, j)), r.index(lab(v, k)))
                        if u != v:
                            assert not prod
            assert r.mul_basis(r.index(lab(u, m - 1)), r.index("x%d" % u)) == r.element("t")


class TestClassArithmetic:
    def test_add(self):
        r = ring_new(2, 2)
        x1, x2, t = r.element("x1"), r.element("x2"), r.element("t")
        assert (x1 + x2).labels() == ["x1", "x2"]
        assert not x1 + x1
        assert r.zero() + t == t

    def test_mul_examples_against_oracle(self):
        r = ring_new(2, 2)
        x1, x2 = r.element("x1"), r.element("x2")
        assert not (x1 + x2) * (x1 + x2)
        assert (x1 + x2) * x1 == r.element("t")
        pm = model(2, 2, 1)
        X1, X2 = pm.x(1, 1), pm.x(2, 1)
        assert pm.is_zero((X1 + X2) ** 2)
        assert pm.equal((X1 + X2) * X1, pm.t(1))

        r3 = ring_new(2, 3)
        y1, y2 = r3.element("x1"), r3.element("x2")
        assert (y1 + y2) * (y1 + y2) == r3.element("x1^2", "x2^2")
        pm3 = model(2, 3, 1)
        Y1, Y2 = pm3.x(1, 1), pm3.x(2, 1)
        assert pm3.equal((Y1 + Y2) ** 2, Y1 ** 2 + Y2 ** 2)

    def test_ring_mismatch(self):
        with pytest.raises(RingError):
            ring_new(2, 2).element("x1") + ring_new(2, 3).element("x1")

    def test_constructor_cancels_pairs(self):
        r = ring_new(2, 2)
        assert ClassVector(r, [1, 2, 1]).terms == (2,)

    def test_inhomogeneous_degree(self):
        r = ring_new(2, 2)
        c = r.element("x1", "t")
        assert not c.is_homogeneous()
        with pytest.raises(RingError):
            c.degree


def classes(r):
    return st.sets(st.integers(0, len(r) - 1)).map(lambda s: ClassVector(r, s))


FAMILY = [ring_new(2, 2), ring_new(3, 3), ring_new(2, 5), ring_new(1, 4)]


@pytest.mark.parametrize("r", FAMILY, ids=lambda r: str(r.meta))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ring_laws(r, data):
    a, b, c = (data.draw(classes(r)) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert r.one() * a == a


@pytest.mark.parametrize("r", FAMILY, ids=lambda r: str(r.meta))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_degree_additivity(r, data):
    i = data.draw(st.integers(1, len(r) - 1))
    j = data.draw(st.integers(1, len(r) - 1))
    di, dj = r.degrees[i], r.degrees[j]
    a = ClassVector(r, r.in_degree(di)[: data.draw(st.integers(1, len(r.in_degree(di))))])
    b = ClassVector(r, r.in_degree(dj)[: data.draw(st.integers(1, len(r.in_degree(dj))))])
    p = a * b
    assert not p or p.degree == di + dj


class TestRingFromTable:
    def test_truncated_matches_family(self):
        assert truncated(2).structure() == ring_new(1, 2).structure()

    def test_degree_inconsistency(self):
        spec = StructureSpec(gens=[("x", 1), ("y", 3)])
        spec.add_product("x", "x", ["y"])
        with pytest.raises(RingError, match="degree inconsistency"):
            ring_from_table(spec)

    def test_torus_is_valid(self):
        r = torus()
        assert len(r) == 4
        a, b = r.element("a"), r.element("b")
        assert not a * a and not b * b
        assert a * b == r.element("ab")
        r.check_axioms()
        check_duality(r)

    def test_unknown_label(self):
        spec = StructureSpec(gens=[("x", 1)])
        spec.add_product("x", "x", ["z"])
        with pytest.raises(RingError, match="unknown label"):
            ring_from_table(spec)

    def test_associativity_failure_names_triple(self):
        # x*y = p, y*z = q, but x*q and p*z disagree
        spec = StructureSpec(gens=[("x", 1), ("y", 1), ("z", 1), ("p", 2), ("q", 2), ("w", 3)])
        spec.add_product("x", "y", ["p"])
        spec.add_product("y", "z", ["q"])
        spec.add_product("x", "q", ["w"])
        with pytest.raises(RingError, match=r"associativity fails on \(x, y, z\)"):
            ring_from_table(spec)

    def test_unit_only(self):
        r = ring_from_table(StructureSpec())
        assert r.labels == ("1",) and r.top_degree == 0


class TestConnectedSum:
    def test_klein_bottle(self):
        kb = connected_sum(ring_new(1, 2), ring_new(1, 2))
        assert kb == ring_new(2, 2)
        assert kb.meta == (2, 2)

    @pytest.mark.parametrize("g,m", [(2, 3), (3, 2), (4, 5)])
    def test_iterated(self, g, m):
        assert iterated_sum(ring_new(1, m), g) == ring_new(g, m)
        assert connected_sum(ring_new(1, m), ring_new(g - 1, m)) == ring_new(g, m)

    def test_torus_sum(self):
        r = connected_sum(torus(), torus())
        assert r.labels == ("1", "a1", "b1", "a2", "b2", "ab")
        top = r.element("ab")
        e = r.element
        assert e("a1") * e("b1") == top == e("a2") * e("b2")
        for p in ("a1", "b1"):
            for q in ("a2", "b2"):
                assert not e(p) * e(q)
        assert r.poincare() == [1, 4, 1]
        check_duality(r)

    def test_top_degree_mismatch(self):
        with pytest.raises(RingError, match="top degrees differ"):
            connected_sum(ring_new(1, 2), ring_new(1, 3))

    def test_rejects_non_duality(self):
        spec = StructureSpec(gens=[("a", 1), ("b", 1), ("c", 2), ("d", 2)])
        spec.add_product("a", "a", ["c"])
        spec.add_product("b", "b", ["d"])
        bad = ring_from_table(spec)
        with pytest.raises(RingError, match="top component"):
            connected_sum(bad, ring_new(1, 2))


def test_format_poincare():
    assert format_poincare(ring_new(2, 3).poincare()) == "1 + 2q + 2q^2 + q^3"
