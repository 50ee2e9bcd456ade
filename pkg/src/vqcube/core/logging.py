"""Keyed log lines, routed through the loguru backend."""

from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import Dict

from loguru import logger


class BaseLogManager(ABC):
    """Abstract base class for logging through a message catalog."""

    def __init__(self) -> None:
        self._log_messages: Dict[str, str] = {}
        self._load_log_messages()

    @abstractmethod
    def _load_log_messages(self) -> None:
        """Load the catalog."""
        pass

    def get_log_message(self, key: str, **kwargs: Any) -> str:
        """Get a log line, falling back to the key itself."""
        if key not in self._log_messages:
            return key

        message = self._log_messages[key]

        if kwargs:
            try:
                return message.format(**kwargs)
            except (KeyError, ValueError):
                return message

        return message

    def log_info(self, key: str, **kwargs: Any) -> None:
        logger.opt(depth=1).info(self.get_log_message(key, **kwargs))

    def log_warning(self, key: str, **kwargs: Any) -> None:
        logger.opt(depth=1).warning(self.get_log_message(key, **kwargs))

    def log_error(self, key: str, **kwargs: Any) -> None:
        logger.opt(depth=1).error(self.get_log_message(key, **kwargs))

    def log_debug(self, key: str, **kwargs: Any) -> None:
        logger.opt(depth=1).debug(self.get_log_message(key, **kwargs))


class VQCubeLogManager(BaseLogManager):
    """Log lines emitted by the services."""

    def _load_log_messages(self) -> None:
        self._log_messages = {
            # topology
            "graph_built": "Built {family} graph n={n}: {vertices} vertices",
            "graph_cap_exceeded": "Refused to build n={n}: size cap is {cap}",
            # automorphism
            "base_table_built": "Aut(VQ{n}) enumerated: {order} elements",
            "transport_case": "transport n={n}: {case}",
            "verdict_ok": "Automorphism of VQ{n} verified over {edges} edges",
            "verdict_failed": "Map on VQ{n} is not an automorphism: {witness}",
            "transitivity_done": (
                "Vertex-transitivity sweep n={n} ({mode}): {verified}/{checked}"
            ),
            # analysis
            "metrics_done": "Metrics n={n} ({mode}): diameter {diameter}",
            "cycle_count": "Edge {edge}: {count} cycle(s) of length {length}",
            "witness_found": "Edge-transitivity witness at L={length}",
            "isomorphism_search": "Isomorphism search over {vertices} vertices",
            # cli
            "config_loaded": "Settings loaded: {summary}",
            "unexpected_error": "Unexpected error: {error_details}",
        }


log_manager = VQCubeLogManager()
