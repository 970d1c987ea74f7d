import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdlab import lattice
from tdlab.lattice import (
    CUBIC,
    HEXAGONAL,
    SQUARE,
    TRIANGULAR,
    LatticeError,
    Sublattice,
    TreeRuleMap,
    figure_fixture,
    from_rows,
    generic_infinite_upper_bound,
    linear_functional_labeling,
    make_periodic,
    patch_graph,
    search_periodic,
    validate_patch,
    validate_periodic,
    validate_tree_rulemap,
)
from tdlab.labeling import ADJACENT_EQUAL, DOUBLE, validate
from tdlab.starelim import star_elim_lower_bound

MODELS = [SQUARE, TRIANGULAR, HEXAGONAL, CUBIC]


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.name)
def test_neighbor_rule_symmetric_and_translation_invariant(model):
    pts = list(itertools.product(range(-3, 4), repeat=model.dim))
    shifts = [t for t in itertools.product(range(-2, 3), repeat=model.dim) if model.in_group(t)]
    for v in pts:
        for u in model.neighbors(v):
            assert v in model.neighbors(u)
        for t in shifts:
            assert sorted(model.neighbors(lattice.add(v, t))) == sorted(lattice.add(u, t) for u in model.neighbors(v))


def test_degrees():
    assert [m.degree for m in MODELS] == [4, 6, 3, 6]


@st.composite
def generating_sets(draw):
    d = draw(st.integers(1, 3))
    vecs = draw(st.lists(st.tuples(*[st.integers(-6, 6)] * d), min_size=d, max_size=d + 2))
    return d, vecs


@settings(max_examples=200, deadline=None)
@given(generating_sets())
def test_triangular_basis_spans_the_same_lattice(case):
    d, vecs = case
    try:
        lat = Sublattice.spanned_by(vecs, d)
    except LatticeError:
        return
    for v in vecs:
        assert lat.contains(v)
    for i, h in enumerate(lat.basis):
        assert h[i] > 0 and all(a == 0 for a in h[i + 1 :])
        assert all(0 <= h[j] < lat.basis[j][j] for j in range(i))
    # the index equals |det| of any full-rank subfamily
    import numpy as np

    dets = [abs(round(np.linalg.det(np.array(sub)))) for sub in itertools.combinations(vecs, d)]
    dets = [x for x in dets if x]
    g = 0
    for x in dets:
        g = np.gcd(g, x)
    assert lat.index == g
    reps = lat.representatives()
    assert len(reps) == lat.index == len({lat.reduce(r) for r in reps})


def test_reduce_is_idempotent_and_periodic():
    lat = Sublattice.spanned_by([(3, 0), (-1, 2)], 2)
    assert lat.basis == ((3, 0), (2, 2))
    for v in itertools.product(range(-5, 6), repeat=2):
        r = lat.reduce(v)
        assert lat.reduce(r) == r
        assert lat.reduce(lattice.add(v, (-1, 2))) == r


def test_figure_fixtures_validate():
    expected = {"fig3": 10, "fig4": 8, "fig7": 8, "fig10": 7}
    for name, top in expected.items():
        p = figure_fixture(name)
        assert validate_periodic(p) == []
        assert p.max_label == top


def test_fixture_bases():
    assert figure_fixture("fig4").lattice.index == 6
    assert figure_fixture("fig10").basis == ((6, 0), (0, 2))


def test_constant_labeling_fails():
    p = make_periodic(SQUARE, [(1, 0), (0, 1)], {(0, 0): 1})
    kinds = {v.kind for v in validate_periodic(p)}
    assert ADJACENT_EQUAL in kinds


def test_linear_functionals_on_the_square():
    assert validate_periodic(linear_functional_labeling(SQUARE, (1, 3, 4, 9, 10), (1, 2))) == []
    bad = validate_periodic(linear_functional_labeling(SQUARE, (1, 3, 4, 9, 10), (1, 0)))
    assert any(v.kind == ADJACENT_EQUAL for v in bad)


def test_basis_outside_translation_group():
    with pytest.raises(LatticeError, match="not a translation"):
        make_periodic(HEXAGONAL, [(1, 0), (0, 2)], {(0, 0): 1, (0, 1): 2})
    with pytest.raises(LatticeError):
        search_periodic(HEXAGONAL, 7, [(3, 0), (0, 2)])


def test_inconsistent_or_partial_patches():
    with pytest.raises(LatticeError, match="meet"):
        from_rows(SQUARE, [[1, 2, 3, 4]], [(3, 0), (0, 1)])
    with pytest.raises(LatticeError, match="unlabeled"):
        make_periodic(SQUARE, [(2, 0), (0, 1)], {(0, 0): 1})


def test_cubic_thirteen_from_a_row():
    p = linear_functional_labeling(CUBIC, (1, 3, 4, 9, 10, 12, 13), (1, 2, 3))
    assert validate_periodic(p) == []
    assert p.max_label == 13


def test_cubic_linear_search():
    p = lattice.linear_functional_search(CUBIC, 13, 7, allowed=(1, 3, 4, 9, 10, 12, 13))
    assert p is not None and validate_periodic(p) == [] and p.max_label <= 13
    # a cubic labeling needs at least the star-elimination bound for degree 6
    assert star_elim_lower_bound(6) == 12


def test_searches_at_the_figure_bases():
    sq = search_periodic(SQUARE, 8, lattice.FIG4_BASIS)
    assert sq is not None and sq.max_label == 8
    hx = search_periodic(HEXAGONAL, 7, lattice.FIG10_BASIS)
    assert hx is not None and hx.max_label <= 7
    assert search_periodic(SQUARE, 7, lattice.FIG4_BASIS) is None


def test_square_seven_fails_on_every_small_domain():
    p, tried = lattice.search_all_domains(SQUARE, 7, 16)
    assert p is None and tried > 100


def test_triangular_twelve_exists_and_eleven_does_not():
    p, _ = lattice.search_all_domains(TRIANGULAR, 12, 12)
    assert p is not None and validate_periodic(p) == []
    assert p.max_label == star_elim_lower_bound(6)
    assert lattice.search_all_domains(TRIANGULAR, 11, 12)[0] is None


def test_hexagonal_seven_meets_the_bound():
    p, _ = lattice.search_all_domains(HEXAGONAL, 7, 12)
    assert p is not None and p.max_label == 7 == star_elim_lower_bound(3)
    assert figure_fixture("fig4").max_label == star_elim_lower_bound(4)


def test_domain_cap():
    with pytest.raises(LatticeError):
        search_periodic(SQUARE, 8, [(37, 0), (0, 1)])


def interior_patch_violations(p, periods=5):
    """Violations of a finite window whose vertices all lie away from the boundary."""
    size = [periods * p.basis[i][i] + 2 for i in range(p.model.dim)]
    cells = p.patch(size)
    g, coords = patch_graph(p.model, cells)
    inner = {i for i, c in enumerate(coords) if all(0 < x < s - 1 for x, s in zip(c, size))}
    found = validate(g, [cells[c] for c in coords])
    # pairs need both ends inside, triples their middle vertex
    return [v for v in found if (set(v.witness) <= inner if len(v.witness) == 2 else v.witness[1] in inner)]


@pytest.mark.parametrize("name", lattice.PERIODIC_FIXTURES)
def test_periodic_check_agrees_with_finite_patch(name):
    p = figure_fixture(name)
    assert (validate_periodic(p) == []) == (interior_patch_violations(p) == [])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([SQUARE, TRIANGULAR, HEXAGONAL]), st.data())
def test_periodic_check_agrees_on_random_labelings(model, data):
    lat = data.draw(st.sampled_from(list(lattice.sublattices(model, 6, 2))))
    reps = lat.representatives()
    labels = data.draw(st.lists(st.integers(1, 9), min_size=len(reps), max_size=len(reps)))
    p = lattice.PeriodicLabeling(model, lat, dict(zip(reps, labels)))
    assert (validate_periodic(p) == []) == (interior_patch_violations(p) == [])


def test_drawn_triangular_patch_is_improper():
    found = validate_patch(TRIANGULAR, lattice.fig15_patch())
    assert [v.kind for v in found] == ["Double", "Staircase", "Staircase", "Double"]
    # its first three rows are fine on their own
    top = {c: a for c, a in lattice.fig15_patch().items() if c[1] < 3}
    assert validate_patch(TRIANGULAR, top) == []
    assert max(top.values()) == 12


def test_tree_rule_map():
    assert validate_tree_rulemap(lattice.TREE_RULES) == []
    assert lattice.TREE_RULES.max_label == 7
    bad = validate_tree_rulemap(TreeRuleMap(1, {1: (2, 3), 2: (4, 5), 3: (4, 5), 4: (1, 3), 5: (1, 3)}))
    assert any(v.kind == DOUBLE and v.witness == (1, 2) for v in bad)
    missing = validate_tree_rulemap(TreeRuleMap(1, {1: (3, 5), 3: (1, 6), 6: (1, 3)}))
    assert [v.kind for v in missing] == [lattice.CLOSURE]


def test_tree_rule_map_matches_a_finite_tree():
    from tdlab.graphs import binary_tree

    t = lattice.TREE_RULES
    g = binary_tree(6)
    labels = [0] * g.n
    labels[0] = t.root_label
    for v in range(g.n):
        kids = [c for c in (2 * v + 1, 2 * v + 2) if c < g.n]
        for c, a in zip(kids, t.rules[labels[v]]):
            labels[c] = a
    assert validate(g, labels) == []


def test_generic_upper_bound():
    assert [generic_infinite_upper_bound(d) for d in (1, 3, 4)] == [3, 25, 53]
    with pytest.raises(ValueError):
        generic_infinite_upper_bound(5)


def test_fixture_files_roundtrip(tmp_path):
    for name in lattice.PERIODIC_FIXTURES:
        p = figure_fixture(name)
        text = lattice.write_fixture(p)
        assert lattice.read_fixture(text) == p
        f = tmp_path / f"{name}.txt"
        f.write_text(text)
        assert lattice.load_fixture(str(f)) == p
    with pytest.raises(LatticeError, match="line 3"):
        lattice.read_fixture("model square\nbasis 1 0\n0 x 1\n")
