from typing import List, Optional, TextIO

from kegraph.utils.ui import UI


class Logger:
    """Diagnostics for the command line, routed through the UI on stderr."""

    def __init__(self, stream: Optional[TextIO] = None, quiet: bool = False):
        self.ui = UI(stream)
        self.quiet = quiet
        self.log: List[str] = []

    def _log(self, msg: str):
        self.log.append(msg)

    def log_header(self, msg: str):
        self._log(msg)
        if not self.quiet:
            self.ui.print_header(msg)

    def info(self, msg: str):
        self._log(msg)
        if not self.quiet:
            self.ui.print_info(msg)

    def warning(self, msg: str):
        self._log(f"warning: {msg}")
        self.ui.print_warning(msg)

    def error(self, msg: str):
        self._log(f"error: {msg}")
        self.ui.print_error(msg)

    def progress(self, message: str, success_message: str = ""):
        """Return a progress context manager for long runs."""
        return self.ui.progress(message, success_message)
