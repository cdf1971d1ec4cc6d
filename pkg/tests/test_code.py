import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topocode.code import (
    StabilizerCode,
    corrects_t_errors,
    distance,
    distance_report,
    export_check_matrix,
    from_embedding,
    ground_degeneracy,
    is_detectable,
    is_isotropic,
    min_undetectable,
    parse_check_matrix,
    syndrome,
)
from topocode.errors import DimensionError, NoLogicalQubitsError, ParseError
from topocode.families import complete_selfdual, kitaev_toric, optimal_toric, planar_holed
from topocode.gf2 import BitMatrix, rank
from topocode.homology import Chain, face_boundary, min_nontrivial_cycle
from topocode.pauli import PauliElement, chain_operator, symplectic_product
from topocode.surface import embed, euler_characteristic

from conftest import random_embeddings

SPHERE = embed(1, [(0, 0, 0)], [[0, 1]])


def k5_incidence():
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    return [[int(v in p) for p in pairs] for v in range(5)]


def test_from_embedding_examples():
    k = from_embedding(kitaev_toric(3))
    assert (k.n, k.k) == (18, 2)
    o = from_embedding(optimal_toric(3))
    assert (o.n, o.k) == (10, 2)
    p = from_embedding(planar_holed(4, 3))
    assert p.k == 4
    assert len(o.generators) == 10
    assert all(g.is_x_type() for g in o.generators[:5])
    assert all(g.is_z_type() for g in o.generators[5:])


def test_distance_examples():
    assert distance(from_embedding(optimal_toric(3))) == 3
    assert distance(from_embedding(complete_selfdual(9))) == 3
    assert distance(from_embedding(kitaev_toric(5))) == 5


def test_distance_undefined_for_sphere():
    code = from_embedding(SPHERE)
    assert code.k == 0
    with pytest.raises(NoLogicalQubitsError):
        distance(code)
    assert ground_degeneracy(code) == 1


def test_small_codes_cross_checked_by_enumeration():
    rep = distance_report(from_embedding(optimal_toric(3)))
    assert rep.symplectic_checked and rep.d == 3 == rep.z_distance == rep.x_distance


def test_syndrome_examples():
    code = from_embedding(optimal_toric(3))
    for g in code.generators:
        assert not syndrome(code, g)
    assert not syndrome(code, PauliElement.identity(10))
    for q in range(10):
        assert syndrome(code, PauliElement.single(10, q, "Z"))
    with pytest.raises(DimensionError):
        syndrome(code, PauliElement.identity(9))


def test_detectability_examples():
    emb = optimal_toric(3)
    code = from_embedding(emb)
    _, z = min_nontrivial_cycle(emb)
    assert not is_detectable(code, chain_operator(z))
    assert is_detectable(code, chain_operator(face_boundary(emb, 0)))
    assert min_undetectable(code, 2) is None
    witness = min_undetectable(code, 3)
    assert witness is not None and witness.weight() == 3


def test_corrects_and_degeneracy():
    o3 = from_embedding(optimal_toric(3))
    assert corrects_t_errors(o3, 1) and not corrects_t_errors(o3, 2)
    assert corrects_t_errors(from_embedding(optimal_toric(5)), 2)
    assert ground_degeneracy(o3) == 4
    assert ground_degeneracy(from_embedding(planar_holed(4, 3))) == 16


def test_export_optimal_3():
    code = from_embedding(optimal_toric(3))
    text = export_check_matrix(code)
    lines = text.splitlines()
    assert lines[0] == "n 10 rx 5 rz 5"
    hx = [list(map(int, ln.split())) for ln in lines[1:6]]
    # the primal graph is K5: each row has 4 ones, each column 2
    assert all(sum(r) == 4 for r in hx)
    assert all(sum(col) == 2 for col in zip(*hx))
    assert rank(BitMatrix.from_rows(hx)) == rank(BitMatrix.from_rows(k5_incidence())) == 4
    back = parse_check_matrix(text)
    assert (back.n, back.k, rank(back.check_matrix)) == (code.n, code.k, rank(code.check_matrix))
    assert distance(back) == 3


def test_export_sphere():
    lines = export_check_matrix(from_embedding(SPHERE)).splitlines()
    assert lines[0] == "n 1 rx 1 rz 2"


def test_parse_check_matrix_errors():
    with pytest.raises(ParseError):
        parse_check_matrix("n 2 rx 1 rz 0\n1 0 1\n")
    with pytest.raises(ParseError):
        parse_check_matrix("n 2 rx 1\n")


def test_non_graphlike_code_uses_enumeration():
    hamming = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]
    steane = StabilizerCode(BitMatrix.from_rows(hamming), BitMatrix.from_rows(hamming))
    rep = distance_report(steane)
    assert (steane.n, steane.k, rep.d, rep.method) == (7, 1, 3, "enumeration")


@settings(max_examples=100)
@given(random_embeddings(), st.data())
def test_theorem_identities(c, data):
    closed = data.draw(st.booleans())
    if not closed:
        c = c.with_open_faces(data.draw(st.sets(st.integers(0, c.F - 1), min_size=1)))
    code = from_embedding(c)
    assert is_isotropic(code)
    chi = euler_characteristic(c)
    assert code.k == code.n - rank(code.check_matrix) == (2 - chi if closed else 1 - chi)
    if closed:
        xor_v = 0
        for r in code.hx.data:
            xor_v ^= r
        xor_f = 0
        for r in code.hz.data:
            xor_f ^= r
        assert xor_v == 0 and xor_f == 0
        assert rank(code.check_matrix) == c.V + c.F - 2


@settings(max_examples=40, deadline=None)
@given(random_embeddings(max_vertices=4, max_extra=4))
def test_distance_matches_enumeration(c):
    code = from_embedding(c)
    if code.k == 0 or code.n > 10:
        return
    rep = distance_report(code, symplectic_check=True)
    assert rep.symplectic_checked
    assert min_undetectable(code, rep.d - 1) is None
