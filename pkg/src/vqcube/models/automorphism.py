"""
Structural automorphism values for VQ_n.

An automorphism is a tree of forms: the identity, the top-bit flip, a
half-split map acting separately on the 0-half and 1-half, a two-bit lift of
an inner automorphism, a composition, or an explicit table. Evaluation
recurses through the tree; `table` materializes the permutation once and
caches it.

These classes do not check adjacency. Building a legal map and proving it is
an automorphism are the job of `vqcube.services.automorphism_service`.
"""

from abc import ABC
from abc import abstractmethod
from collections.abc import Sequence
from functools import cached_property

from vqcube.schemas.enums import PhiIndex
from vqcube.services.errors import ContractError
from vqcube.services.errors import PreconditionError


def _bits(value: int, width: int) -> str:
    return format(value, f"0{width}b") if width else ""


class Automorphism(ABC):
    """A permutation of the labels 0..2^dim - 1, kept in structural form."""

    def __init__(self, dim: int) -> None:
        if dim < 0:
            raise ContractError(f"dimension must be >= 0, got {dim}")
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    @abstractmethod
    def apply_value(self, value: int) -> int:
        """Image of a packed label, evaluated structurally."""

    @abstractmethod
    def _build_table(self) -> tuple[int, ...]:
        """The full permutation, assembled from the children's tables."""

    @abstractmethod
    def inverse(self) -> "Automorphism":
        """The inverse map, in structural form."""

    @abstractmethod
    def describe(self) -> str:
        """The nested functional text form."""

    @cached_property
    def table(self) -> tuple[int, ...]:
        return self._build_table()

    def __call__(self, value: int) -> int:
        if "table" in self.__dict__:
            return self.table[value]
        return self.apply_value(value)

    def acts_like(self, other: "Automorphism") -> bool:
        """Pointwise equality of the induced maps."""
        return self.dim == other.dim and self.table == other.table

    def __str__(self) -> str:
        return self.describe()

    def __repr__(self) -> str:
        return f"{type(self).__name__}<{self.describe()}>"


class Identity(Automorphism):
    def apply_value(self, value: int) -> int:
        return value

    def _build_table(self) -> tuple[int, ...]:
        return tuple(range(1 << self.dim))

    def inverse(self) -> "Identity":
        return self

    def describe(self) -> str:
        return f"identity({self.dim})"


class TopBitFlip(Automorphism):
    """X_n -> complement(x_n) X_{n-1}."""

    def __init__(self, dim: int) -> None:
        if dim < 1:
            raise PreconditionError(f"sigma1 needs n >= 1, got {dim}")
        super().__init__(dim)
        self._top = 1 << (dim - 1)

    def apply_value(self, value: int) -> int:
        return value ^ self._top

    def _build_table(self) -> tuple[int, ...]:
        return tuple(v ^ self._top for v in range(1 << self.dim))

    def inverse(self) -> "TopBitFlip":
        return self

    def describe(self) -> str:
        return f"sigma1({self.dim})"


class HalfSplit(Automorphism):
    """
    x_n X_{n-1} -> x_n h(X_{n-1}), where h is `half0` when x_n = 0 and
    `half1` when x_n = 1.
    """

    def __init__(self, dim: int, half0: Automorphism, half1: Automorphism) -> None:
        if dim < 1:
            raise PreconditionError(f"sigma0 needs n >= 1, got {dim}")
        if half0.dim != dim - 1 or half1.dim != dim - 1:
            raise ContractError(
                f"sigma0 on VQ{dim} needs halves of dimension {dim - 1}, "
                f"got {half0.dim} and {half1.dim}"
            )
        super().__init__(dim)
        self.half0 = half0
        self.half1 = half1
        self._top = 1 << (dim - 1)

    def apply_value(self, value: int) -> int:
        if value & self._top:
            return self._top | self.half1(value ^ self._top)
        return self.half0(value)

    def _build_table(self) -> tuple[int, ...]:
        return self.half0.table + tuple(self._top | t for t in self.half1.table)

    def inverse(self) -> "HalfSplit":
        inv0 = self.half0.inverse()
        inv1 = inv0 if self.half1 is self.half0 else self.half1.inverse()
        return HalfSplit(self.dim, inv0, inv1)

    def describe(self) -> str:
        return f"sigma0({self.dim}, {self.half0.describe()}, {self.half1.describe()})"


class PhiLift(Automorphism):
    """
    x_{n-1} x_{n-2} X_{n-3} -> (x_{n-1} x_{n-2} with the index's bits
    complemented) inner(X_{n-3}), acting on labels of width n-1 for n = 3k.
    """

    def __init__(self, index: PhiIndex, inner: Automorphism) -> None:
        if inner.dim % 3 != 0:
            raise PreconditionError(
                f"phi lifts exist for n = 3k only; inner dimension {inner.dim} "
                f"gives n = {inner.dim + 3}"
            )
        super().__init__(inner.dim + 2)
        self.index = PhiIndex(index)
        self.inner = inner
        self._shift = inner.dim
        self._low_mask = (1 << inner.dim) - 1
        self._flip = self.index.flip_mask << inner.dim

    def apply_value(self, value: int) -> int:
        return ((value & ~self._low_mask) ^ self._flip) | self.inner(
            value & self._low_mask
        )

    def _build_table(self) -> tuple[int, ...]:
        inner_table = self.inner.table
        result: list[int] = []
        for high in range(4):
            image_high = (high << self._shift) ^ self._flip
            result.extend(image_high | t for t in inner_table)
        return tuple(result)

    def inverse(self) -> "PhiLift":
        return PhiLift(self.index, self.inner.inverse())

    def describe(self) -> str:
        return f"phi_{self.index.value}[{self.inner.describe()}]"


class Composition(Automorphism):
    """compose(a, b, ...) applies the rightmost part first."""

    def __init__(self, parts: Sequence[Automorphism]) -> None:
        if len(parts) < 2:
            raise ContractError("a composition needs at least two parts")
        dims = {p.dim for p in parts}
        if len(dims) != 1:
            raise ContractError(f"cannot compose maps of dimensions {sorted(dims)}")
        super().__init__(parts[0].dim)
        self.parts: tuple[Automorphism, ...] = tuple(parts)

    def apply_value(self, value: int) -> int:
        for part in reversed(self.parts):
            value = part(value)
        return value

    def _build_table(self) -> tuple[int, ...]:
        table = self.parts[-1].table
        for part in reversed(self.parts[:-1]):
            outer = part.table
            table = tuple(outer[v] for v in table)
        return table

    def inverse(self) -> "Composition":
        return Composition([p.inverse() for p in reversed(self.parts)])

    def describe(self) -> str:
        return "compose(" + ", ".join(p.describe() for p in self.parts) + ")"


class ExplicitTable(Automorphism):
    """A permutation given entry by entry, in label order."""

    def __init__(self, dim: int, mapping: Sequence[int]) -> None:
        super().__init__(dim)
        size = 1 << dim
        if len(mapping) != size or sorted(mapping) != list(range(size)):
            raise ContractError(
                f"table for VQ{dim} must be a permutation of 0..{size - 1}"
            )
        self.__dict__["table"] = tuple(mapping)

    def apply_value(self, value: int) -> int:
        return self.table[value]

    def _build_table(self) -> tuple[int, ...]:
        return self.table

    def inverse(self) -> "ExplicitTable":
        inverted = [0] * len(self.table)
        for source, image in enumerate(self.table):
            inverted[image] = source
        return ExplicitTable(self.dim, inverted)

    def labels(self) -> list[str]:
        return [_bits(t, self.dim) for t in self.table]

    def describe(self) -> str:
        return "table[" + " ".join(self.labels()) + "]"

    def describe_top_level(self) -> str:
        return "table: " + " ".join(self.labels())
