from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2cat.dynkin import (
    AFFINE_RANKS,
    CLASSICAL_RANKS,
    DynkinType,
    GCMError,
    check_coxeter_annihilation,
    classify,
    coxeter_number,
    find_positive_null_vector,
    gcm_of,
    graph_of,
    template,
    template_types,
    validate_gcm,
)
from sl2cat.fusion import r_poly
from sl2cat.presented import IndexSet, PresentedMatrix, PresentedVector

import refimpl


def finite_gcm(rows):
    n = len(rows)
    entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
    return PresentedMatrix(IndexSet.finite(n), head=entries)


# frozen positive null vectors for the affine templates, one per family
# at its minimum legal rank (plus the exceptional ones)
AFFINE_NULL = {
    ("At", 2): [1, 1, 1],
    ("At11", 1): [2, 1],
    ("At12", 1): [1, 1],
    ("Bt", 3): [1, 2, 2, 1],
    ("BCt", 2): [1, 2, 2],
    ("Ct", 2): [1, 1, 1],
    ("BDt", 3): [1, 2, 1, 1],
    ("Dt", 4): [1, 2, 1, 1, 1],
    ("CDt", 3): [1, 2, 2, 1],
    ("E6t", 6): [1, 2, 3, 2, 1, 2, 1],
    ("E7t", 7): [1, 2, 3, 4, 3, 2, 1, 2],
    ("E8t", 8): [2, 4, 6, 5, 4, 3, 2, 1, 3],
    ("F41t", 4): [1, 2, 3, 2, 1],
    ("F42t", 4): [2, 4, 3, 2, 1],
    ("G21t", 2): [1, 2, 1],
    ("G22t", 2): [3, 2, 1],
    ("Lt", 2): [1, 1],
    ("BLt", 2): [1, 2, 2],
    ("CLt", 2): [1, 1, 1],
    ("DLt", 3): [1, 2, 2, 1],
}

INFINITE_NULL = {
    "Ainf": ((), 1, 1),
    "Ainfinf": ((), 0, 1),
    "Binf": ((1,), 0, 2),
    "Cinf": ((), 0, 1),
    "Dinf": ((1, 1), 0, 2),
    "Tinf": ((), 0, 1),
}


def test_every_template_satisfies_the_axioms():
    for dtype in template_types(8):
        gcm = template(dtype)
        validate_gcm(gcm)
        adjacency = graph_of(gcm)
        assert adjacency.is_nonnegative()
        assert gcm_of(adjacency) == gcm


def test_classical_templates_classify_to_themselves():
    for dtype in template_types(8):
        if dtype.kind != "classical":
            continue
        result = classify(template(dtype))
        assert result.kind == "classical"
        assert result.dtype == dtype
        assert all(m > 0 for m in result.certificate["minors"])
        assert result.certificate["coxeter_number"] == coxeter_number(dtype)
        assert result.certificate["annihilation"] is True


def test_minors_agree_with_cholesky_oracle():
    for dtype in template_types(6):
        gcm = template(dtype)
        if gcm.index.kind != "finite":
            continue
        dense = [[Fraction(v) for v in row] for row in gcm.truncate(gcm.index.size)]
        positive = refimpl.ldlt_positive_definite(dense)
        result = classify(gcm)
        if result.kind == "classical":
            assert positive
        else:
            assert not positive


def test_frozen_minors():
    a2 = classify(template(DynkinType("classical", "A", 2)))
    assert a2.certificate["minors"] == [2, 3]
    g2 = classify(template(DynkinType("classical", "G2", 2)))
    assert g2.certificate["minors"] == [2, 1]
    b3 = classify(template(DynkinType("classical", "B", 3)))
    assert b3.certificate["minors"] == [2, 2, 2]


def test_coxeter_annihilation_is_sharp():
    # R_{h-1} kills the adjacency matrix, R_{h-2} does not
    for dtype in (DynkinType("classical", "A", 3), DynkinType("classical", "B", 2),
                  DynkinType("classical", "G2", 2)):
        assert check_coxeter_annihilation(dtype)
        adjacency = graph_of(template(dtype))
        h = coxeter_number(dtype)
        assert not adjacency.poly_eval(r_poly(h - 2)).is_zero()


def test_affine_templates_classify_with_positive_null_vectors():
    for dtype in template_types(8):
        if dtype.kind != "affine":
            continue
        result = classify(template(dtype))
        assert result.kind == "affine", (dtype, result.certificate)
        assert result.dtype == dtype
        null = result.certificate["null_vector"]
        assert all(x > 0 for x in null)
        assert refimpl.gcd_list(null) == 1


def test_frozen_affine_null_vectors():
    for (family, rank), expected in AFFINE_NULL.items():
        gcm = template(DynkinType("affine", family, rank))
        vec = find_positive_null_vector(gcm)
        assert vec is not None, family
        assert list(vec.head) == expected, family


def test_affine_null_vector_matches_kernel_oracle():
    for (family, rank) in AFFINE_NULL:
        gcm = template(DynkinType("affine", family, rank))
        n = gcm.index.size
        dense = [[Fraction(v) for v in row] for row in gcm.truncate(n)]
        kernel = refimpl.rational_kernel(dense)
        assert len(kernel) == 1
        vec = find_positive_null_vector(gcm)
        ratio = {Fraction(h) / k for h, k in zip(vec.head, kernel[0]) if k}
        assert len(ratio) == 1


def test_infinite_templates_classify_to_themselves():
    for family, (head, a, b) in INFINITE_NULL.items():
        dtype = DynkinType("infinite", family)
        gcm = template(dtype)
        result = classify(gcm)
        assert result.kind == "infinite", (family, result.certificate)
        assert result.dtype == dtype
        vec = find_positive_null_vector(gcm)
        assert vec.head == head and (vec.tail_a, vec.tail_b) == (a, b), family
        assert gcm.apply(vec).is_zero()


def test_null_vectors_annihilate_in_a_dense_window():
    # cross-check apply() against plain dense multiplication away from
    # the truncation boundary
    for family in INFINITE_NULL:
        gcm = template(DynkinType("infinite", family))
        if gcm.index.kind != "nat":
            continue
        vec = find_positive_null_vector(gcm)
        size = 20
        dense = gcm.truncate(size)
        values = [vec.entry(i) for i in range(size)]
        for i in range(size - gcm.band):
            assert sum(dense[i][j] * values[j] for j in range(size)) == 0


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(5)))
def test_classification_is_permutation_invariant(perm):
    base = template(DynkinType("affine", "F41t", 4))
    n = 5
    dense = base.truncate(n)
    shuffled = finite_gcm([[dense[perm[i]][perm[j]] for j in range(n)] for i in range(n)])
    result = classify(shuffled)
    assert result.kind == "affine"
    assert result.dtype.family == "F41t"


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(4)))
def test_classical_permutation_invariance(perm):
    base = template(DynkinType("classical", "D", 4))
    dense = base.truncate(4)
    shuffled = finite_gcm([[dense[perm[i]][perm[j]] for j in range(4)] for i in range(4)])
    result = classify(shuffled)
    assert result.kind == "classical"
    assert result.dtype == DynkinType("classical", "D", 4)


def test_relabeled_infinite_head_still_matches():
    # two pendants written as vertices 1 and 2 hanging off vertex 0, with
    # the ray starting at vertex 0 via an explicit (0,3) edge
    head = {(0, 1): 1, (1, 0): 1, (0, 2): 1, (2, 0): 1, (0, 3): 1, (3, 0): 1}
    adjacency = PresentedMatrix(IndexSet.nat(), 3, head, {-1: 1, 1: 1})
    result = classify(gcm_of(adjacency))
    assert result.kind == "infinite"
    assert result.dtype.family == "Dinf"


def test_one_vertex_cases():
    assert classify(finite_gcm([[2]])).dtype == DynkinType("classical", "A", 1)
    assert classify(finite_gcm([[1]])).kind == "unrecognized"
    assert classify(finite_gcm([[0]])).kind == "unrecognized"


def test_unrecognized_outcomes():
    indefinite = classify(finite_gcm([[2, -3], [-3, 2]]))
    assert indefinite.kind == "unrecognized"
    disconnected = classify(finite_gcm([[2, 0], [0, 2]]))
    assert disconnected.kind == "unrecognized"
    assert "connected" in disconnected.certificate["reason"]
    even_lattice = classify(PresentedMatrix(IndexSet.int_(), diagonals={0: 2, -2: -1, 2: -1}))
    assert even_lattice.kind == "unrecognized"


def test_gcm_axiom_violations_raise():
    with pytest.raises(GCMError):
        validate_gcm(finite_gcm([[2, 1], [-1, 2]]))
    with pytest.raises(GCMError):
        validate_gcm(finite_gcm([[2, -1], [0, 2]]))
    with pytest.raises(GCMError):
        validate_gcm(finite_gcm([[3, -1], [-1, 2]]))
    with pytest.raises(GCMError):
        validate_gcm(PresentedMatrix(IndexSet.nat(), diagonals={0: 2, 1: 1, -1: -1}))


def test_template_rank_bounds():
    with pytest.raises(GCMError):
        template(DynkinType("classical", "D", 3))
    with pytest.raises(GCMError):
        template(DynkinType("classical", "E6", 7))
    with pytest.raises(GCMError):
        template(DynkinType("affine", "At", 1))
    with pytest.raises(GCMError):
        template(DynkinType("infinite", "Zinf"))


def test_display_and_keys():
    assert DynkinType("classical", "A", 2).display() == "A_2"
    assert DynkinType("classical", "E6", 6).display() == "E6"
    assert DynkinType("affine", "At", 2).display() == "A~_2"
    assert DynkinType("affine", "E8t", 8).display() == "E~8"
    assert DynkinType("infinite", "Ainfinf").display() == "A_inf_inf"
    assert DynkinType("classical", "B", 4).key() == "B4"
    assert DynkinType("infinite", "Tinf").key() == "Tinf"


def test_b_infinity_transpose_is_c_infinity():
    binf = template(DynkinType("infinite", "Binf"))
    cinf = template(DynkinType("infinite", "Cinf"))
    assert binf.transpose() == cinf
    assert classify(binf.transpose()).dtype.family == "Cinf"
