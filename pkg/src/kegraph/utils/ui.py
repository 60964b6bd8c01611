import os
import sys
import time
import threading
from contextlib import contextmanager
from typing import List, Optional, Sequence, TextIO


class Colors:
    BLUE = "\033[38;2;222;124;60m"
    CYAN = "\033[38;2;255;165;0m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    RED = "\033[91m"
    ENDC = "\033[0m"
    BOLD = "\033[1m"
    DIM = "\033[2m"


def supports_color(stream: TextIO) -> bool:
    """ANSI output only on a real terminal, and never when NO_COLOR is set."""
    if os.getenv("NO_COLOR"):
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class Spinner:
    """An animated spinner that runs in a separate thread."""

    FRAMES = ["⠋", "⠙", "⠹", "⠸", "⠼", "⠴", "⠦", "⠧", "⠇", "⠏"]

    def __init__(self, message: str = "", stream: Optional[TextIO] = None, animate: bool = True):
        self.message = message
        self.stream = stream or sys.stderr
        self.animate = animate
        self.running = False
        self.thread: Optional[threading.Thread] = None

    def _animate(self):
        idx = 0
        while self.running:
            frame = self.FRAMES[idx % len(self.FRAMES)]
            self.stream.write(f"\r{Colors.CYAN}{frame}{Colors.ENDC} {self.message}")
            self.stream.flush()
            time.sleep(0.08)
            idx += 1

    def start(self):
        if self.running or not self.animate:
            return
        self.running = True
        self.thread = threading.Thread(target=self._animate, daemon=True)
        self.thread.start()

    def stop(self):
        if not self.running:
            return
        self.running = False
        if self.thread:
            self.thread.join()
        self.stream.write("\r" + " " * (len(self.message) + 10) + "\r")
        self.stream.flush()


class UI:
    """Terminal output for diagnostics. Everything goes to one stream, stderr by default."""

    def __init__(self, stream: Optional[TextIO] = None, color: Optional[bool] = None):
        self.stream = stream or sys.stderr
        self.color = supports_color(self.stream) if color is None else color

    def paint(self, text: str, *codes: str) -> str:
        if not self.color or not codes:
            return text
        return "".join(codes) + text + Colors.ENDC

    def _write(self, text: str):
        self.stream.write(text + "\n")
        self.stream.flush()

    @contextmanager
    def progress(self, message: str, success_message: str = ""):
        """Spinner around a block of work; prints a ✓ or ✗ line when it ends."""
        spinner = Spinner(message, self.stream, animate=self.color)
        spinner.start()
        try:
            yield spinner
            spinner.stop()
            self._write(f"{self.paint('✓', Colors.GREEN)} {success_message or message.replace('...', '')}")
        except KeyboardInterrupt:
            spinner.stop()
            raise
        except Exception as e:
            spinner.stop()
            self._write(f"{self.paint('✗', Colors.RED)} Failed: {e}")
            raise

    def print_header(self, text: str):
        self._write("\n" + self.paint(f"╭─ {text}", Colors.BOLD, Colors.BLUE))

    def print_info(self, message: str):
        self._write(self.paint(message, Colors.DIM))

    def print_error(self, message: str):
        self._write(f"{self.paint('✗ Error:', Colors.RED)} {message}")

    def print_warning(self, message: str):
        self._write(f"{self.paint('⚠ Warning:', Colors.YELLOW)} {message}")


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def render(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    lines = [render(headers), render(["-" * w for w in widths])]
    lines.extend(render(row) for row in rows)
    return lines
