"""
Service layer for automorphisms of VQ_n.

Builds the structural maps (the top-bit flip, the two-bit phi lifts and the
half-split map with its pairing rule), enumerates the base-case groups by
exhaustive search, constructs transport automorphisms carrying any vertex to
any other, and verifies maps against the recursively built edge set.
"""

from functools import lru_cache
import random
import re

from vqcube.config import settings
from vqcube.core.logging import log_manager
from vqcube.models.automorphism import Automorphism
from vqcube.models.automorphism import Composition
from vqcube.models.automorphism import ExplicitTable
from vqcube.models.automorphism import HalfSplit
from vqcube.models.automorphism import Identity
from vqcube.models.automorphism import PhiLift
from vqcube.models.automorphism import TopBitFlip
from vqcube.models.graph import Graph
from vqcube.schemas.dto import AutomorphismVerdict
from vqcube.schemas.dto import TransitivityReport
from vqcube.schemas.dto import TransportStep
from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import EdgeKind
from vqcube.schemas.enums import PhiIndex
from vqcube.schemas.enums import TransportCase
from vqcube.schemas.enums import VerifyMode
from vqcube.services import topology_service
from vqcube.services.errors import ContractError
from vqcube.services.errors import PreconditionError
from vqcube.services.errors import ResourceCapError
from vqcube.services.search import iter_isomorphisms


# (index on the 0-half, index on the 1-half) pairs that keep the n-transversal
# edges of VQ_n when n = 3k.
LEGAL_PHI_PAIRS: frozenset[tuple[PhiIndex, PhiIndex]] = frozenset(
    {
        (PhiIndex.PHI0, PhiIndex.PHI0),
        (PhiIndex.PHI1, PhiIndex.PHI1),
        (PhiIndex.PHI3, PhiIndex.PHI2),
        (PhiIndex.PHI2, PhiIndex.PHI3),
    }
)

BASE_CASE_LIMIT = 3


# --- Constructors ---


def identity(n: int) -> Identity:
    return Identity(n)


def sigma1(n: int) -> TopBitFlip:
    """The top-bit flip X_n -> complement(x_n) X_{n-1}."""
    if n < 1:
        raise PreconditionError(f"sigma1 needs n >= 1, got {n}")
    return TopBitFlip(n)


def lift_phi(i: PhiIndex | int, inner: Automorphism, n: int) -> PhiLift:
    """
    Lifts `inner` (an automorphism of VQ_{n-3}) to VQ_{n-1}.

    Raises:
        PreconditionError: If n is not a positive multiple of 3.
        ContractError: If `inner` does not have dimension n - 3.
    """
    if not topology_service.is_crossing_dimension(n):
        raise PreconditionError(f"phi lifts need n = 3k with k >= 1, got n={n}")
    if inner.dim != n - 3:
        raise ContractError(
            f"inner automorphism must have dimension {n - 3}, got {inner.dim}"
        )
    return PhiLift(PhiIndex(i), inner)


def _check_pairing(n: int, half0: Automorphism, half1: Automorphism) -> None:
    if not topology_service.is_crossing_dimension(n):
        if half0 is not half1 and half0.describe() != half1.describe():
            raise ContractError(
                f"sigma0 on VQ{n} needs the same automorphism on both halves"
            )
        return

    if not (isinstance(half0, PhiLift) and isinstance(half1, PhiLift)):
        raise ContractError(f"sigma0 on VQ{n} needs phi lifts on both halves")
    if half0.inner is not half1.inner and (
        half0.inner.describe() != half1.inner.describe()
    ):
        raise ContractError("both phi lifts must share one inner automorphism")
    if (half0.index, half1.index) not in LEGAL_PHI_PAIRS:
        raise ContractError(
            f"illegal half pairing (phi_{half0.index.value}, "
            f"phi_{half1.index.value}) on VQ{n}; allowed: (0,0), (1,1), "
            f"(3,2), (2,3)"
        )


def sigma0(
    n: int, half0: Automorphism, half1: Automorphism | None = None
) -> HalfSplit:
    """
    The half-split map x_n X_{n-1} -> x_n h(X_{n-1}).

    For n not divisible by 3 both halves carry the same automorphism of
    VQ_{n-1} (pass it once). For n = 3k the halves must be phi lifts over one
    shared inner automorphism, in one of the pairings of `LEGAL_PHI_PAIRS`.

    Raises:
        ContractError: On an illegal pairing or mismatched dimensions.
    """
    half1 = half0 if half1 is None else half1
    if half0.dim != n - 1 or half1.dim != n - 1:
        raise ContractError(
            f"sigma0 on VQ{n} needs halves of dimension {n - 1}, "
            f"got {half0.dim} and {half1.dim}"
        )
    _check_pairing(n, half0, half1)
    return HalfSplit(n, half0, half1)


def sigma0_phi(
    n: int, index0: PhiIndex | int, index1: PhiIndex | int, inner: Automorphism
) -> HalfSplit:
    """sigma0 for n = 3k from two phi indices over a shared inner map."""
    return sigma0(n, lift_phi(index0, inner, n), lift_phi(index1, inner, n))


def sigma0_unchecked(n: int, half0: Automorphism, half1: Automorphism) -> HalfSplit:
    """Builds a half-split map without the pairing rule, for negative tests."""
    return HalfSplit(n, half0, half1)


# --- Group operations ---


def apply(a: Automorphism, x: VertexLabel) -> VertexLabel:
    """
    Image of `x` under `a`.

    Raises:
        ContractError: If the label width differs from the map's dimension.
    """
    if a.dim != x.dim:
        raise ContractError(
            f"automorphism of VQ{a.dim} applied to a label of width {x.dim}"
        )
    return VertexLabel(value=a(x.value), dim=x.dim)


def compose(a: Automorphism, b: Automorphism, *rest: Automorphism) -> Composition:
    """compose(a, b) maps X to a(b(X))."""
    return Composition([a, b, *rest])


def inverse(a: Automorphism) -> Automorphism:
    return a.inverse()


def orbit(a: Automorphism, x: VertexLabel) -> list[VertexLabel]:
    """The cycle of `x` under repeated application of `a`."""
    values = [x.value]
    current = a(x.value)
    while current != x.value:
        values.append(current)
        current = a(current)
    return [VertexLabel(value=v, dim=x.dim) for v in values]


# --- Base cases ---


@lru_cache(maxsize=8)
def _base_tables(n: int) -> tuple[tuple[int, ...], ...]:
    graph = topology_service.build_recursive(n)
    tables = tuple(sorted(iter_isomorphisms(graph, graph)))
    log_manager.log_debug("base_table_built", n=n, order=len(tables))
    return tables


def base_automorphism_table(n: int) -> list[ExplicitTable]:
    """
    The whole automorphism group of VQ_n for n <= 3, as explicit tables in
    lexicographic order.

    Raises:
        PreconditionError: If n > 3.
    """
    if not 0 <= n <= BASE_CASE_LIMIT:
        raise PreconditionError(
            f"exhaustive automorphism search is limited to n <= "
            f"{BASE_CASE_LIMIT}, got {n}"
        )
    return [ExplicitTable(n, t) for t in _base_tables(n)]


def _canonical(n: int, table: tuple[int, ...]) -> Automorphism:
    """Prefers the structural identity / sigma1 form for a matching table."""
    if table == tuple(range(1 << n)):
        return Identity(n)
    if n >= 1 and table == TopBitFlip(n).table:
        return TopBitFlip(n)
    return ExplicitTable(n, table)


# --- Transport ---


def _same_half(
    x_low: int,
    y_low: int,
    n: int,
    x_top: int,
    base_cap: int,
    trace: list[TransportStep],
) -> HalfSplit:
    """
    A sigma0 of VQ_n whose map on the x_top half sends x_low to y_low.
    """
    m = n - 1
    if not topology_service.is_crossing_dimension(n):
        if x_low == y_low:
            return sigma0(n, Identity(m))
        return sigma0(n, _transport(x_low, y_low, m, base_cap, trace))

    shift = n - 3
    low_mask = (1 << shift) - 1
    index = PhiIndex.from_flip_mask(((x_low ^ y_low) >> shift) & 0b11)
    if index in (PhiIndex.PHI0, PhiIndex.PHI1):
        pair = (index, index)
    else:
        partner = PhiIndex.PHI3 if index is PhiIndex.PHI2 else PhiIndex.PHI2
        pair = (index, partner) if x_top == 0 else (partner, index)
    trace.append(
        TransportStep(
            dim=n,
            case=TransportCase.SAME_HALF_PHI,
            detail=f"(phi_{pair[0].value}, phi_{pair[1].value})",
        )
    )
    if x_low == y_low:
        psi: Automorphism = Identity(shift)
    else:
        psi = _transport(x_low & low_mask, y_low & low_mask, shift, base_cap, trace)
    return sigma0_phi(n, pair[0], pair[1], psi)


def _transport(
    x: int, y: int, n: int, base_cap: int, trace: list[TransportStep]
) -> Automorphism:
    if n == 0:
        return Identity(0)

    if n <= base_cap:
        table = next(t for t in _base_tables(n) if t[x] == y)
        trace.append(TransportStep(dim=n, case=TransportCase.BASE))
        return _canonical(n, table)

    top = 1 << (n - 1)
    x_top, y_top = (x >> (n - 1)) & 1, (y >> (n - 1)) & 1
    if x_top == y_top and not topology_service.is_crossing_dimension(n):
        trace.append(TransportStep(dim=n, case=TransportCase.SAME_HALF))
    elif x_top != y_top:
        trace.append(TransportStep(dim=n, case=TransportCase.CROSS_HALF))

    split = _same_half(x & (top - 1), y & (top - 1), n, x_top, base_cap, trace)
    if x_top == y_top:
        return split
    return Composition([TopBitFlip(n), split])


def transport_with_trace(
    x: VertexLabel, y: VertexLabel, base_case_cap: int | None = None
) -> tuple[Automorphism, list[TransportStep]]:
    """transport, also returning the construction steps taken, outermost first."""
    if x.dim != y.dim:
        raise ContractError(f"label widths differ: {x.dim} != {y.dim}")
    if x.dim < 1:
        raise PreconditionError("transport needs n >= 1")
    base_cap = settings.BASE_CASE_CAP if base_case_cap is None else base_case_cap
    base_cap = min(base_cap, BASE_CASE_LIMIT)
    trace: list[TransportStep] = []
    result = _transport(x.value, y.value, x.dim, base_cap, trace)
    log_manager.log_debug(
        "transport_case", n=x.dim, case=trace[0].case.value if trace else "-"
    )
    return result, trace


def transport(
    x: VertexLabel, y: VertexLabel, base_case_cap: int | None = None
) -> Automorphism:
    """
    An automorphism of VQ_n sending `x` to `y`, built by induction on n.

    n <= 3 uses the lexicographically smallest base table; otherwise a
    sigma0 carries X_{n-1} to Y_{n-1} on x's half (through phi lifts when
    n = 3k) and, when the top bits differ, sigma1 is applied after it.
    """
    return transport_with_trace(x, y, base_case_cap)[0]


# --- Verification ---


@lru_cache(maxsize=1)
def _reference_graph(n: int) -> Graph:
    return topology_service.build_recursive(n, size_cap=n)


def _violation_rank(edge: tuple[int, int]) -> tuple[int, bool, int, int]:
    # Highest dimension first, crossing before normal, then descending labels.
    u, v = edge
    edge_class = topology_service.classify_values(u, v)
    assert edge_class is not None
    crossing = edge_class.kind is EdgeKind.CROSSING
    return -edge_class.dimension, not crossing, -u, -v


def is_automorphism(
    a: Automorphism, size_cap: int | None = None
) -> AutomorphismVerdict:
    """
    Checks `a` against the edge set of the recursively built VQ_n.

    Every violating edge is reported, crossing edges of the highest dimension
    first; `witness` is the first of them, or a collision pair when the map is
    not a bijection.

    Raises:
        ResourceCapError: If a.dim exceeds the size cap.
    """
    n = a.dim
    cap = settings.SIZE_CAP if size_cap is None else size_cap
    if n > cap:
        raise ResourceCapError("is_automorphism", n, cap, "size_cap")

    table = a.table
    first_source: dict[int, int] = {}
    for source, image in enumerate(table):
        if image in first_source:
            verdict = AutomorphismVerdict(
                dim=n, ok=False, collision=(first_source[image], source)
            )
            log_manager.log_warning("verdict_failed", n=n, witness=verdict.witness)
            return verdict
        first_source[image] = source

    graph = _reference_graph(n)
    violations = [
        (u, v) for u, v in graph.edges() if not graph.has_edge(table[u], table[v])
    ]
    violations.sort(key=_violation_rank)
    if violations:
        log_manager.log_warning("verdict_failed", n=n, witness=violations[0])
        return AutomorphismVerdict(dim=n, ok=False, violations=violations)

    log_manager.log_debug("verdict_ok", n=n, edges=graph.edge_count)
    return AutomorphismVerdict(dim=n, ok=True)


def _transport_holds(x: int, y: int, n: int, size_cap: int | None) -> bool:
    a = transport(VertexLabel(value=x, dim=n), VertexLabel(value=y, dim=n))
    return a(x) == y and is_automorphism(a, size_cap=size_cap).ok


def verify_vertex_transitivity(
    n: int,
    mode: VerifyMode = VerifyMode.FULL,
    *,
    source: VertexLabel | None = None,
    sample_count: int | None = None,
    seed: int | None = None,
    exhaustive_cap: int | None = None,
    size_cap: int | None = None,
) -> TransitivityReport:
    """
    Checks transport over many pairs.

    Full mode sends `source` (default 0...0) to every label of VQ_n. Sampled
    mode draws `sample_count` uniform (x, y) pairs from a generator seeded
    with `seed`.

    Raises:
        ResourceCapError: In full mode when n exceeds the exhaustive cap.
    """
    if n < 1:
        raise PreconditionError(f"vertex-transitivity needs n >= 1, got {n}")

    def width(v: int) -> str:
        return format(v, f"0{n}b")

    if mode is VerifyMode.FULL:
        cap = settings.EXHAUSTIVE_CAP if exhaustive_cap is None else exhaustive_cap
        if n > cap:
            raise ResourceCapError("full verification", n, cap, "exhaustive_cap")
        start = 0 if source is None else source.value
        if source is not None and source.dim != n:
            raise ContractError(f"source label must have width {n}")
        pairs = [(start, y) for y in range(1 << n)]
    else:
        rng = random.Random(settings.SEED if seed is None else seed)
        count = settings.SAMPLE_COUNT if sample_count is None else sample_count
        size = 1 << n
        pairs = [(rng.randrange(size), rng.randrange(size)) for _ in range(count)]

    failures = [
        (width(x), width(y))
        for x, y in pairs
        if not _transport_holds(x, y, n, size_cap)
    ]
    report = TransitivityReport(
        n=n,
        mode=mode,
        checked=len(pairs),
        verified=len(pairs) - len(failures),
        failures=failures,
    )
    log_manager.log_info(
        "transitivity_done",
        n=n,
        mode=mode.value,
        verified=report.verified,
        checked=report.checked,
    )
    return report


# --- Text form ---


_TOKEN = re.compile(
    r"\s*(identity|sigma1|sigma0|compose|phi_[0-3]|table|\d+|[()\[\],:])"
)


def format_automorphism(a: Automorphism) -> str:
    """The one-line text form; explicit tables use the 'table:' line form."""
    if isinstance(a, ExplicitTable):
        return a.describe_top_level()
    return a.describe()


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        match = _TOKEN.match(self.text, self.pos)
        return match.group(1) if match else None

    def take(self, expected: str | None = None) -> str:
        match = _TOKEN.match(self.text, self.pos)
        if match is None:
            raise ContractError(f"cannot parse automorphism at offset {self.pos}")
        token = match.group(1)
        if expected is not None and token != expected:
            raise ContractError(
                f"expected {expected!r} at offset {self.pos}, found {token!r}"
            )
        self.pos = match.end()
        return token

    def number(self) -> int:
        token = self.take()
        if not token.isdigit():
            raise ContractError(f"expected a number, found {token!r}")
        return int(token)

    def labels(self, closing: str | None) -> list[str]:
        self._skip()
        end = self.text.find(closing, self.pos) if closing else len(self.text)
        if end < 0:
            raise ContractError(f"missing {closing!r} after table labels")
        words = self.text[self.pos : end].split()
        self.pos = end
        return words

    def table(self, words: list[str]) -> ExplicitTable:
        if not words:
            return ExplicitTable(0, [0])
        width = len(words[0])
        if any(len(w) != width or set(w) - {"0", "1"} for w in words):
            raise ContractError("table labels must be binary strings of one width")
        return ExplicitTable(width, [int(w, 2) for w in words])

    def form(self) -> Automorphism:
        head = self.take()
        if head in ("identity", "sigma1"):
            self.take("(")
            n = self.number()
            self.take(")")
            return Identity(n) if head == "identity" else TopBitFlip(n)
        if head == "sigma0":
            self.take("(")
            n = self.number()
            self.take(",")
            half0 = self.form()
            self.take(",")
            half1 = self.form()
            self.take(")")
            return HalfSplit(n, half0, half1)
        if head.startswith("phi_"):
            self.take("[")
            inner = self.form()
            self.take("]")
            return PhiLift(PhiIndex(int(head[-1])), inner)
        if head == "compose":
            self.take("(")
            parts = [self.form()]
            while self.peek() == ",":
                self.take(",")
                parts.append(self.form())
            self.take(")")
            return Composition(parts)
        if head == "table":
            self.take("[")
            words = self.labels("]")
            self.take("]")
            return self.table(words)
        raise ContractError(f"unknown automorphism form {head!r}")

    def top(self) -> Automorphism:
        self._skip()
        if self.text.startswith("table:", self.pos):
            self.pos += len("table:")
            return self.table(self.labels(None))
        result = self.form()
        self._skip()
        if self.pos != len(self.text):
            raise ContractError(f"trailing text at offset {self.pos}")
        return result


def parse_automorphism(text: str) -> Automorphism:
    """
    Parses the text form written by `format_automorphism`.

    The map is rebuilt structurally; legality of sigma0 pairings is not
    re-checked here, run `is_automorphism` for that.
    """
    return _Parser(text.strip()).top()
