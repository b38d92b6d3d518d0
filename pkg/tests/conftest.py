"""
Pytest configuration and fixtures.
Provides common test fixtures and setup.
"""
import logging
import sys
from typing import Callable, List, Tuple

import pytest

from subcount.main import main
from subcount.models.problem import SupportedCase
from subcount.models.counts import CountVector, TransferSystem
from subcount.services.recurrence_service import RANK_TWO_OF_FOUR, line_subbundle_system


@pytest.fixture
def rank_two_of_four() -> SupportedCase:
    """The (r, r') = (4, 2) case."""
    return SupportedCase.rank_two_of_four()


@pytest.fixture
def rank_two_system() -> TransferSystem:
    """Built-in transfer system for rank-two subbundles of rank-four bundles."""
    return RANK_TWO_OF_FOUR


@pytest.fixture
def line_system() -> Callable[[int], TransferSystem]:
    """Factory for the line-subbundle transfer system of rank r."""
    return line_subbundle_system


@pytest.fixture
def perturbed_rank_two_system(mocker) -> TransferSystem:
    """Swap the built-in rank-two matrix for one whose odd-odd entry is off by one."""
    perturbed = TransferSystem(
        name="perturbed",
        matrix=((6, 2), (2, 7)),
        base=CountVector(entries=(6, 2), labels=("even", "odd")),
    )
    # the services package rebinds `recurrence_service` to the singleton, so patch the module object
    module = sys.modules["subcount.services.recurrence_service"]
    mocker.patch.object(module, "RANK_TWO_OF_FOUR", perturbed)
    return perturbed


@pytest.fixture
def run_cli(capsys) -> Callable[[List[str]], Tuple[int, str, str]]:
    """Run the CLI and return (exit code, stdout, stderr)."""

    def _run(argv: List[str]) -> Tuple[int, str, str]:
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    yield _run
    root = logging.getLogger()
    for handler in list(root.handlers):
        handler.close()
    root.handlers.clear()
