import pytest

from bolalg.catalog import catalog, catalog_names
from bolalg.core import direct_sum, prod_span, tri_span
from bolalg.decompose import decompose_semisimple, find_proper_ideal, structure_report, verify_reassembly
from bolalg.errors import PreconditionViolation
from bolalg.forms import BilinearForm, envelope_form
from bolalg.linalg import full_space, intersect


def test_find_proper_ideal_simple_algebra():
    ideal, res = find_proper_ideal(catalog("sl2bol"))
    assert ideal is None and res.status == "yes"


def test_find_proper_ideal_mixed():
    ideal, res = find_proper_ideal(catalog("mixed"))
    assert ideal is not None and 0 < ideal.dim < 5
    assert res.status == "no"


def test_find_proper_ideal_abelian2():
    ideal, res = find_proper_ideal(catalog("abelian2"))
    assert ideal is not None and ideal.dim == 1


def test_decompose_simple_returns_single_component():
    B = catalog("sl2bol")
    dec = decompose_semisimple(B)
    assert len(dec.components) == 1
    assert dec.components[0].T == B.T and dec.components[0].R == B.R
    assert dec.certified
    assert verify_reassembly(B, dec)


def test_decompose_two_simple_summands():
    B = direct_sum(catalog("sl2bol"), catalog("so3bol"))
    beta = envelope_form(B)
    dec = decompose_semisimple(B, beta)
    assert dec.certified
    assert sorted(c.n for c in dec.components) == [3, 3]
    assert all(dec.orthogonality[i][j] for i in range(2) for j in range(2) if i != j)
    assert verify_reassembly(B, dec)
    # cross products vanish between distinct components
    e1, e2 = dec.embeddings
    assert prod_span(B, e1, e2).is_zero()
    full = full_space(6)
    assert tri_span(B, full, e1, e2) <= intersect(e1, e2)


def test_decompose_solv2_precondition_violation():
    with pytest.raises(PreconditionViolation):
        decompose_semisimple(catalog("solv2"), BilinearForm.identity_gram(2))


def test_decompose_abelian_precondition_violation():
    with pytest.raises(PreconditionViolation):
        decompose_semisimple(catalog("abelian2"), BilinearForm.identity_gram(2))


def test_decompose_rejects_degenerate_form():
    from bolalg.linalg import mat

    with pytest.raises(PreconditionViolation):
        decompose_semisimple(catalog("sl2bol"), BilinearForm(mat([[0, 0, 0], [0, 0, 0], [0, 0, 0]])))


def test_structure_report_item1_on_catalog():
    for name in catalog_names():
        rep = structure_report(catalog(name))
        assert rep.item1_biconditional, name


def test_structure_report_item2_on_catalog():
    for name in catalog_names():
        rep = structure_report(catalog(name))
        assert rep.item2_biconditional, name


def test_structure_report_item3_semisimple_entries():
    for name in ("sl2bol", "so3bol", "lts_sl2"):
        rep = structure_report(catalog(name))
        assert rep.decomposition_ran and rep.component_count == 1
        assert rep.triple_span_is_everything
        assert rep.decomposition_certified
    B = direct_sum(catalog("sl2bol"), catalog("so3bol"))
    rep = structure_report(B)
    assert rep.component_count == 2 and rep.component_dims == (3, 3)
    assert rep.triple_span_is_everything
    assert rep.envelope_dim == sum(rep.component_envelope_dims)


def test_structure_report_solvable_entry():
    rep = structure_report(catalog("solv2"))
    assert rep.lie_solvable and rep.beta_orthogonal_to_triple_span
    assert not rep.decomposition_ran
    assert not rep.triple_span_is_everything
