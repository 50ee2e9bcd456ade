"""
Unit tests for the keyed message catalogs.
"""

import pytest

from vqcube.core.messages import BaseMessageManager
from vqcube.core.messages import cli_messages


class ConcreteMessageManager(BaseMessageManager):
    """Concrete implementation of BaseMessageManager for testing."""

    def _load_messages(self) -> None:
        self._messages = {
            "hello": "Hello, {name}!",
            "plain": "Nothing to fill in.",
        }


@pytest.fixture
def message_manager():
    return ConcreteMessageManager()


def test_initialization(message_manager):
    """Test that messages are loaded upon initialization."""
    assert "hello" in message_manager._messages


def test_get_message_formatting(message_manager):
    msg = message_manager.get_message("hello", name="Alice")
    assert msg == "Hello, Alice!"


def test_get_message_missing_key_returns_key(message_manager):
    """Test that an unknown key comes back unchanged."""
    assert message_manager.get_message("missing") == "missing"


def test_get_message_missing_placeholder_returns_template(message_manager):
    """Test that formatting errors fall back to the raw template."""
    assert message_manager.get_message("hello", other="x") == "Hello, {name}!"


def test_add_message(message_manager):
    message_manager.add_message("new", "Fresh {thing}")
    assert message_manager.get_message("new", thing="text") == "Fresh text"


def test_cli_catalog_lines():
    """Test a few lines the command output depends on."""
    assert (
        cli_messages.get_message("verify_summary", verified=16, checked=16)
        == "16/16 targets verified"
    )
    assert cli_messages.get_message("cayley_found") == (
        "VQ3 ≅ C(Z8,{1,4,7}): mapping found"
    )
    assert cli_messages.get_message("error_prefix", details="bad") == "error: bad"
