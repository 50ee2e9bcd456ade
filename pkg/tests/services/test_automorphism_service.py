"""
Unit tests for the automorphism service: constructors, transport and
verification.
"""

from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st
import pytest

from vqcube.models.automorphism import ExplicitTable
from vqcube.models.automorphism import Identity
from vqcube.models.automorphism import TopBitFlip
from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import PhiIndex
from vqcube.schemas.enums import TransportCase
from vqcube.schemas.enums import VerifyMode
from vqcube.services import automorphism_service as service
from vqcube.services.errors import ContractError
from vqcube.services.errors import PreconditionError
from vqcube.services.errors import ResourceCapError


LEGAL_PAIRS = [(0, 0), (1, 1), (3, 2), (2, 3)]
ILLEGAL_PAIRS = [(2, 2), (3, 3)]


def _label(bits: str) -> VertexLabel:
    return VertexLabel.parse(bits)


def _inner(n: int):
    """A non-trivial verified automorphism of VQ_{n-3}."""
    if n == 3:
        return Identity(0)
    if n == 6:
        return service.base_automorphism_table(3)[5]
    return service.transport(_label("000000"), _label("101101"))


@st.composite
def label_triples(draw, max_dim: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    values = st.integers(min_value=0, max_value=(1 << n) - 1)
    return tuple(VertexLabel(value=draw(values), dim=n) for _ in range(3))


# --- sigma1 and the phi lifts ---


@pytest.mark.parametrize("n", range(1, 11))
def test_sigma1_is_an_automorphism(n):
    """Test that flipping the top bit preserves adjacency."""
    assert service.is_automorphism(service.sigma1(n)).ok


def test_sigma1_example():
    assert service.apply(service.sigma1(3), _label("011")) == _label("111")


def test_sigma1_needs_a_positive_dimension():
    with pytest.raises(PreconditionError):
        service.sigma1(0)


@pytest.mark.parametrize("n", [3, 6, 9])
@pytest.mark.parametrize("i", list(PhiIndex))
def test_phi_lifts_are_automorphisms(n, i):
    """Test every lift index over a verified inner map."""
    lifted = service.lift_phi(i, _inner(n), n)
    assert lifted.dim == n - 1
    assert service.is_automorphism(lifted).ok


def test_phi_examples_on_vq2():
    phi2 = service.lift_phi(PhiIndex.PHI2, Identity(0), 3)
    phi1 = service.lift_phi(PhiIndex.PHI1, Identity(0), 3)
    assert phi2(0b00) == 0b10
    assert phi1(0b01) == 0b00
    assert phi1(0b11) == 0b10


def test_lift_phi_preconditions():
    """Test that lifts need n = 3k and an inner map of dimension n - 3."""
    with pytest.raises(PreconditionError):
        service.lift_phi(PhiIndex.PHI1, Identity(1), 4)
    with pytest.raises(ContractError):
        service.lift_phi(PhiIndex.PHI1, Identity(2), 6)


@pytest.mark.parametrize("n", [3, 6])
def test_phi_composition_identities(n):
    """Test phi_1(psi) o phi_2(phi) = phi_3(psi o phi) and
    phi_3(psi) o phi_3(phi) = phi_0(psi o phi), pointwise."""
    psi = _inner(n)
    phi = psi.inverse() if n == 3 else service.base_automorphism_table(3)[2]
    inner = service.compose(psi, phi)

    left = service.compose(
        service.lift_phi(1, psi, n), service.lift_phi(2, phi, n)
    )
    assert left.acts_like(service.lift_phi(3, inner, n))

    left = service.compose(
        service.lift_phi(3, psi, n), service.lift_phi(3, phi, n)
    )
    assert left.acts_like(service.lift_phi(0, inner, n))


# --- sigma0 ---


def test_sigma0_example_on_vq2():
    """Test sigma0 with sigma1 of VQ_1 on both halves: 00 -> 01, 10 -> 11."""
    split = service.sigma0(2, service.sigma1(1))
    assert split(0b00) == 0b01
    assert split(0b10) == 0b11
    assert service.is_automorphism(split).ok


def test_sigma0_with_same_map_is_an_automorphism():
    for table in service.base_automorphism_table(3):
        assert service.is_automorphism(service.sigma0(4, table)).ok


def test_sigma0_refuses_different_halves_off_multiples_of_three():
    with pytest.raises(ContractError):
        service.sigma0(2, service.sigma1(1), Identity(1))


@pytest.mark.parametrize("n", [3, 6])
@pytest.mark.parametrize("pair", LEGAL_PAIRS)
def test_legal_phi_pairs_give_automorphisms(n, pair):
    """Test every allowed half pairing at n = 3 and n = 6."""
    split = service.sigma0_phi(n, pair[0], pair[1], _inner(n))
    assert service.is_automorphism(split).ok


@pytest.mark.parametrize("n", [3, 6])
@pytest.mark.parametrize("pair", ILLEGAL_PAIRS)
def test_illegal_phi_pairs_are_refused(n, pair):
    """Test that the checked constructor refuses a forbidden pairing."""
    with pytest.raises(ContractError, match="illegal half pairing"):
        service.sigma0_phi(n, pair[0], pair[1], _inner(n))


@pytest.mark.parametrize("n", [3, 6])
@pytest.mark.parametrize("pair", ILLEGAL_PAIRS)
def test_illegal_phi_pairs_break_adjacency(n, pair):
    """Test that bypassing the pairing rule yields a non-automorphism."""
    inner = _inner(n)
    split = service.sigma0_unchecked(
        n,
        service.lift_phi(pair[0], inner, n),
        service.lift_phi(pair[1], inner, n),
    )
    verdict = service.is_automorphism(split)
    assert not verdict.ok
    assert verdict.witness is not None


def test_phi2_pair_loses_the_crossing_edge_of_vq3():
    """Test that (phi_2, phi_2) sends the crossing edge 011-110 to a non-edge."""
    split = service.sigma0_unchecked(
        3,
        service.lift_phi(2, Identity(0), 3),
        service.lift_phi(2, Identity(0), 3),
    )
    verdict = service.is_automorphism(split)
    assert not verdict.ok
    assert verdict.witness == (0b011, 0b110)
    assert sorted(verdict.violations) == [
        (0b000, 0b100),
        (0b001, 0b101),
        (0b010, 0b111),
        (0b011, 0b110),
    ]


def test_reference_graph_cache_keeps_one_dimension():
    """Test that checks at a new n evict the previously built graph."""
    service._reference_graph.cache_clear()
    service.is_automorphism(service.sigma1(3))
    service.is_automorphism(service.sigma1(4))
    assert service._reference_graph.cache_info().currsize == 1


def test_mixed_phi0_phi1_pair_is_refused():
    with pytest.raises(ContractError):
        service.sigma0_phi(3, PhiIndex.PHI0, PhiIndex.PHI1, Identity(0))


def test_sigma0_needs_phi_lifts_at_multiples_of_three():
    with pytest.raises(ContractError):
        service.sigma0(3, Identity(2))


# --- Base cases ---


@pytest.mark.parametrize("n, order", [(0, 1), (1, 2), (2, 8), (3, 16)])
def test_base_group_orders(n, order):
    """Test the exhaustively found group orders of VQ_0..VQ_3."""
    tables = service.base_automorphism_table(n)
    assert len(tables) == order
    assert [t.table for t in tables] == sorted(t.table for t in tables)
    assert tables[0].table == tuple(range(1 << n))


def test_base_tables_are_automorphisms():
    for table in service.base_automorphism_table(3):
        assert service.is_automorphism(table).ok


def test_base_tables_act_transitively_on_vq3():
    images = {t(0) for t in service.base_automorphism_table(3)}
    assert images == set(range(8))


def test_base_table_refuses_larger_dimensions():
    with pytest.raises(PreconditionError):
        service.base_automorphism_table(4)


# --- Transport ---


def test_transport_on_vq1_is_sigma1():
    a = service.transport(_label("0"), _label("1"))
    assert isinstance(a, TopBitFlip)
    assert service.format_automorphism(a) == "sigma1(1)"


def test_transport_to_self_on_small_cube_is_identity():
    assert isinstance(service.transport(_label("01"), _label("01")), Identity)


def test_transport_cross_half_on_vq4():
    """Test 0101 -> 1101: sigma1 after a sigma0 fixing the low bits."""
    a, trace = service.transport_with_trace(_label("0101"), _label("1101"))
    assert service.format_automorphism(a) == (
        "compose(sigma1(4), sigma0(4, identity(3), identity(3)))"
    )
    assert service.apply(a, _label("0101")) == _label("1101")
    assert [step.case for step in trace] == [TransportCase.CROSS_HALF]
    assert service.is_automorphism(a).ok


def test_transport_through_phi_lifts_on_vq6():
    """Test that n = 6 picks the phi pairing from the flipped bits."""
    a, trace = service.transport_with_trace(_label("000000"), _label("110000"))
    assert service.format_automorphism(a) == (
        "compose(sigma1(6), sigma0(6, phi_2[identity(3)], phi_3[identity(3)]))"
    )
    assert [step.case for step in trace] == [
        TransportCase.CROSS_HALF,
        TransportCase.SAME_HALF_PHI,
        TransportCase.BASE,
    ]
    assert trace[1].detail == "(phi_2, phi_3)"
    assert service.is_automorphism(a).ok


def test_transport_same_half_uses_a_base_table():
    a, trace = service.transport_with_trace(_label("0000"), _label("0011"))
    assert a(0b0000) == 0b0011
    assert [step.case for step in trace] == [
        TransportCase.SAME_HALF,
        TransportCase.BASE,
    ]
    assert service.is_automorphism(a).ok


def test_transport_contract_errors():
    with pytest.raises(ContractError):
        service.transport(_label("01"), _label("001"))
    with pytest.raises(PreconditionError):
        service.transport(VertexLabel(value=0, dim=0), VertexLabel(value=0, dim=0))


@pytest.mark.parametrize("n", range(1, 9))
def test_full_vertex_transitivity(n):
    """Test transport from 0...0 to every label for n <= 8."""
    report = service.verify_vertex_transitivity(n, VerifyMode.FULL)
    assert report.passed
    assert report.checked == 1 << n


@pytest.mark.parametrize("n", range(1, 6))
def test_structural_transport_on_every_pair(n):
    """Test transport built without base tables above VQ_1."""
    for x in range(1 << n):
        for y in range(1 << n):
            a = service.transport(
                VertexLabel(value=x, dim=n),
                VertexLabel(value=y, dim=n),
                base_case_cap=1,
            )
            assert a(x) == y
            assert service.is_automorphism(a).ok


def test_full_verification_from_another_source():
    report = service.verify_vertex_transitivity(
        4, VerifyMode.FULL, source=_label("1011")
    )
    assert report.passed


def test_full_verification_respects_the_exhaustive_cap():
    with pytest.raises(ResourceCapError, match="exhaustive_cap"):
        service.verify_vertex_transitivity(9, VerifyMode.FULL, exhaustive_cap=8)


def test_sampled_verification_is_reproducible():
    """Test that one seed gives the same sample and the same report."""
    first = service.verify_vertex_transitivity(
        7, VerifyMode.SAMPLED, sample_count=20, seed=11
    )
    second = service.verify_vertex_transitivity(
        7, VerifyMode.SAMPLED, sample_count=20, seed=11
    )
    assert first == second
    assert first.passed
    assert first.checked == 20


@pytest.mark.slow
@pytest.mark.parametrize("n", range(9, 13))
def test_sampled_vertex_transitivity(n):
    """Test 100 seeded random pairs for 9 <= n <= 12."""
    report = service.verify_vertex_transitivity(
        n, VerifyMode.SAMPLED, sample_count=100, seed=0
    )
    assert report.passed
    assert report.verified == 100


# --- Group laws ---


@hypothesis_settings(max_examples=60, deadline=None)
@given(label_triples())
def test_group_laws(triple):
    """Test composition, inverses and the identity pointwise."""
    x, y, z = triple
    a = service.transport(x, y)
    b = service.transport(y, z)

    ba = service.compose(b, a)
    assert service.apply(ba, x) == z
    assert service.is_automorphism(ba).ok

    a_inv = service.inverse(a)
    assert service.apply(a_inv, y) == x
    assert service.compose(a, a_inv).acts_like(service.identity(x.dim))
    assert service.compose(a_inv, a).acts_like(service.identity(x.dim))


@hypothesis_settings(max_examples=40, deadline=None)
@given(label_triples(max_dim=9))
def test_structural_evaluation_matches_table(triple):
    x, y, _ = triple
    a = service.transport(x, y)
    structural = [a.apply_value(v) for v in range(1 << x.dim)]
    assert list(a.table) == structural


def test_apply_rejects_wrong_width():
    with pytest.raises(ContractError):
        service.apply(service.sigma1(3), _label("01"))


def test_orbit_of_sigma1():
    orbit = service.orbit(service.sigma1(3), _label("010"))
    assert [str(v) for v in orbit] == ["010", "110"]


def test_is_automorphism_respects_the_size_cap():
    with pytest.raises(ResourceCapError):
        service.is_automorphism(service.sigma1(5), size_cap=4)


# --- Text form ---


@pytest.mark.parametrize(
    "source, target",
    [("000", "011"), ("0000", "0011"), ("000000", "110000"), ("1011001", "0100111")],
)
def test_text_form_parses_back(source, target):
    """Test that the printed form rebuilds the same map."""
    a = service.transport(_label(source), _label(target))
    text = service.format_automorphism(a)
    parsed = service.parse_automorphism(text)
    assert parsed.acts_like(a)
    assert service.format_automorphism(parsed) == text


def test_explicit_table_uses_line_form():
    a = service.transport(_label("000"), _label("011"))
    assert isinstance(a, ExplicitTable)
    assert service.format_automorphism(a).startswith("table: ")


@pytest.mark.parametrize(
    "text",
    ["sigma2(3)", "identity(3) extra", "compose(sigma1(2)", "table: 00 1"],
)
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ContractError):
        service.parse_automorphism(text)
