"""
Data Transfer Objects (DTOs) for the varietal hypercube toolkit.

This module defines Pydantic models used to pass values between the services
and the command-line layer: vertex labels, edge classifications and the
reports produced by verification and analysis.

Hot loops inside the services work on packed integers; these models are the
validated "contract" at the boundaries.
"""

from decimal import ROUND_HALF_EVEN
from decimal import Decimal
from fractions import Fraction
from typing import Self

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import computed_field
from pydantic import model_validator

from vqcube.schemas.enums import EdgeKind
from vqcube.schemas.enums import MetricsMode
from vqcube.schemas.enums import TransportCase
from vqcube.schemas.enums import VerifyMode


# --- Base DTO for shared configuration ---


class BaseDTO(BaseModel):
    """Base DTO with common configuration."""

    model_config = ConfigDict(frozen=True)


# --- Label DTOs ---


class VertexLabel(BaseDTO):
    """
    An n-bit vertex label x_n...x_2x_1 of VQ_n.

    Bit x_1 is the least significant bit of `value`. A label of `dim` 0 is the
    single empty-label vertex of VQ_0.
    """

    value: int = Field(ge=0)
    dim: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_width(self) -> Self:
        if self.value >= 1 << self.dim:
            raise ValueError(f"value {self.value} does not fit in {self.dim} bits")
        return self

    @classmethod
    def parse(cls, bits: str, dim: int | None = None) -> "VertexLabel":
        """Parses an MSB-first binary string such as '0101'."""
        bits = bits.strip()
        if bits and set(bits) - {"0", "1"}:
            raise ValueError(f"label {bits!r} is not a binary string")
        width = len(bits) if dim is None else dim
        if len(bits) != width:
            raise ValueError(f"label {bits!r} must have exactly {width} bits")
        return cls(value=int(bits, 2) if bits else 0, dim=width)

    def bit(self, i: int) -> int:
        """Returns x_i (1-based, x_1 least significant)."""
        return (self.value >> (i - 1)) & 1

    def prefix(self, i: int) -> "VertexLabel":
        """Returns X_i = x_i...x_1, the low i bits."""
        return VertexLabel(value=self.value & ((1 << i) - 1), dim=i)

    def __str__(self) -> str:
        return format(self.value, f"0{self.dim}b") if self.dim else ""


class EdgeClass(BaseDTO):
    """Classification of an edge of VQ_n: its dimension and kind."""

    dimension: int = Field(ge=1)
    kind: EdgeKind

    @model_validator(mode="after")
    def _crossing_only_at_multiples_of_three(self) -> Self:
        if self.kind is EdgeKind.CROSSING and self.dimension % 3 != 0:
            raise ValueError(
                f"crossing edges exist only at dimensions divisible by 3, "
                f"got {self.dimension}"
            )
        return self


# --- Automorphism DTOs ---


class AutomorphismVerdict(BaseDTO):
    """
    Result of checking a permutation against the edge set of VQ_n.

    `violations` lists every edge whose image is a non-edge, highest dimension
    and crossing edges first.
    `collision` holds two labels with the same image when the map is not a
    bijection.
    """

    dim: int
    ok: bool
    violations: list[tuple[int, int]] = []
    collision: tuple[int, int] | None = None

    @property
    def witness(self) -> tuple[int, int] | None:
        if self.collision is not None:
            return self.collision
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


class TransportStep(BaseDTO):
    """One level of the inductive construction."""

    dim: int
    case: TransportCase
    detail: str = ""


class TransitivityReport(BaseDTO):
    """Outcome of sweeping transport over many (source, target) pairs."""

    n: int
    mode: VerifyMode
    checked: int
    verified: int
    failures: list[tuple[str, str]] = []

    @property
    def passed(self) -> bool:
        return not self.failures and self.verified == self.checked


# --- Analysis DTOs ---


class MetricsReport(BaseDTO):
    """
    Distance metrics of a graph.

    The average distance is kept exact as a numerator/denominator pair over
    ordered pairs of distinct vertices.
    """

    n: int
    diameter: int = Field(ge=0)
    average_distance_num: int = Field(ge=0)
    average_distance_den: int = Field(ge=1)
    mode: MetricsMode
    eccentricity_profile: dict[int, int]

    @property
    def average_distance(self) -> Fraction:
        return Fraction(self.average_distance_num, self.average_distance_den)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def average_distance_decimal(self) -> str:
        """Decimal rendering rounded to 6 places."""
        value = Decimal(self.average_distance_num) / Decimal(
            self.average_distance_den
        )
        return str(value.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))

    @property
    def eccentricities_uniform(self) -> bool:
        return len(self.eccentricity_profile) <= 1


class EdgeCycleProfile(BaseDTO):
    """Number of distinct simple cycles of each length through one edge."""

    edge: tuple[str, str]
    counts: dict[int, int]


class EdgeTransitivityWitness(BaseDTO):
    """Two edges told apart by their number of cycles of one length."""

    n: int
    length: int
    edge_a: tuple[str, str]
    count_a: int
    edge_b: tuple[str, str]
    count_b: int


class EdgeTransitivityReport(BaseDTO):
    """An empty report (no witness) is not a proof of edge-transitivity."""

    n: int
    max_length: int
    witness: EdgeTransitivityWitness | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None
