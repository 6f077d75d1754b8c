import logging

from rich.console import Console
from rich.logging import RichHandler


def make_console(stderr: bool = False) -> Console:
    """Plain console: no markup, no highlighting, so output stays ASCII text."""
    return Console(stderr=stderr, markup=False, highlight=False, emoji=False, soft_wrap=True)


def configure_logging(level: str = "WARNING"):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        handlers=[RichHandler(console=make_console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )
