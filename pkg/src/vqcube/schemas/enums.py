"""
Defines enumerations used throughout the package for choices.
"""

import enum


class EdgeKind(str, enum.Enum):
    """
    Kind of a d-transversal edge of VQ_n.
    - NORMAL: endpoints agree on every bit below d.
    - CROSSING: d is a multiple of 3, bit d-1 is set on both endpoints and
      bit d-2 differs.
    """

    NORMAL = "normal"
    CROSSING = "crossing"


class GraphFamily(str, enum.Enum):
    """Which construction produced a graph."""

    VARIETAL = "varietal"
    HYPERCUBE = "hypercube"
    CIRCULANT = "circulant"
    GENERIC = "generic"

    @property
    def is_vertex_transitive(self) -> bool:
        """Families whose vertex-transitivity is known, so one BFS suffices."""
        return self is not GraphFamily.GENERIC


class MetricsMode(str, enum.Enum):
    """How distance metrics are computed."""

    SINGLE_SOURCE = "single-source-via-transitivity"
    ALL_SOURCES = "all-sources"


class VerifyMode(str, enum.Enum):
    """Full sweep over every target, or a seeded random sample of pairs."""

    FULL = "full"
    SAMPLED = "sampled"


class ExportFormat(str, enum.Enum):
    EDGELIST = "edgelist"
    DOT = "dot"
    JSON = "json"


class PhiIndex(int, enum.Enum):
    """
    Row of the two-bit lift table: which of the bits n-1 and n-2 get flipped.
    - PHI0: neither.
    - PHI1: bit n-2.
    - PHI2: bit n-1.
    - PHI3: both.
    """

    PHI0 = 0
    PHI1 = 1
    PHI2 = 2
    PHI3 = 3

    @property
    def flip_mask(self) -> int:
        """Mask over the two-bit field (bit n-1 is 0b10, bit n-2 is 0b01)."""
        return {0: 0b00, 1: 0b01, 2: 0b10, 3: 0b11}[self.value]

    @classmethod
    def from_flip_mask(cls, mask: int) -> "PhiIndex":
        return {0b00: cls.PHI0, 0b01: cls.PHI1, 0b10: cls.PHI2, 0b11: cls.PHI3}[
            mask
        ]


class TransportCase(str, enum.Enum):
    """Which branch of the inductive construction produced a transport map."""

    BASE = "base"
    SAME_HALF = "same-half"
    SAME_HALF_PHI = "same-half-phi"
    CROSS_HALF = "cross-half"
