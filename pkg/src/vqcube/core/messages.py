"""Keyed message catalogs for command-line output."""

from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import Dict


class BaseMessageManager(ABC):
    """Abstract base class for a catalog of formatted messages."""

    def __init__(self) -> None:
        self._messages: Dict[str, str] = {}
        self._load_messages()

    @abstractmethod
    def _load_messages(self) -> None:
        """Load the catalog."""
        pass

    def get_message(self, key: str, **kwargs: Any) -> str:
        """Get a message, formatted with `kwargs` when given."""
        if key not in self._messages:
            return key

        message = self._messages[key]

        if kwargs:
            try:
                return message.format(**kwargs)
            except (KeyError, ValueError):
                return message

        return message

    def add_message(self, key: str, message: str) -> None:
        """Add or update a message."""
        self._messages[key] = message


class CliMessageManager(BaseMessageManager):
    """Messages printed by the `vqcube` command."""

    def _load_messages(self) -> None:
        self._messages = {
            # generate
            "graph_written": "{family} n={n}: {vertices} vertices, {edges} edges",
            "graph_written_to": "wrote {fmt} to {path}",
            # oracles
            "neighbor_line": "d={dimension}: {label}",
            "adjacent_yes": "adjacent: dimension {dimension}, {kind}",
            "adjacent_no": "not adjacent",
            # transport
            "transport_form": "automorphism: {form}",
            "transport_image": "image of {source}: {image} ({verdict})",
            "transport_case": "  n={dim}: {case} {detail}",
            "transport_verified": "is_automorphism: verified",
            "transport_rejected": "is_automorphism: FAILED, witness {witness}",
            "transport_skipped": (
                "is_automorphism: skipped, n={n} exceeds size cap {cap}"
            ),
            # verify
            "verify_summary": "{verified}/{checked} targets verified",
            "verify_summary_sampled": "{verified}/{checked} pairs verified",
            "verify_failure": "  failed: {source} -> {target}",
            # metrics
            "metrics_line": (
                "{family} n={n}: diameter {diameter}, average distance "
                "{average} ({num}/{den}), mode {mode}"
            ),
            "metrics_profile": "  eccentricity profile: {profile}",
            "metrics_nonuniform": "eccentricities are not uniform: {profile}",
            # refute-edge-transitivity
            "witness_found": (
                "VQ{n} is not edge-transitive: edge {edge_a} lies on {count_a} "
                "cycle(s) of length {length}, edge {edge_b} on {count_b}"
            ),
            "witness_missing": (
                "no distinguishing cycle count found for VQ{n} up to length "
                "{max_length}"
            ),
            # cayley-check
            "cayley_found": "VQ3 ≅ C(Z8,{1,4,7}): mapping found",
            "cayley_mapping": "  {source} -> {target}",
            "cayley_missing": "VQ3 ≇ C(Z8,{1,4,7}): no mapping found",
            # errors
            "report_written": "wrote report to {path}",
            "error_prefix": "error: {details}",
        }


cli_messages = CliMessageManager()
