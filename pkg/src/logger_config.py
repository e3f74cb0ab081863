"""
Logging for the m-closed graph toolkit.

Verbs and verification checks are logged as steps with timings. Everything
goes to stderr: stdout carries only the report (table or JSON).
"""

import logging
import sys
import time
from datetime import datetime
from typing import Dict, Mapping, Optional


class ColoredFormatter(logging.Formatter):
    """`[HH:MM:SS] message` with one ANSI color per level; plain text when not on a terminal."""

    COLORS = {
        'DEBUG': '\033[36m',
        'INFO': '\033[32m',
        'WARNING': '\033[33m',
        'ERROR': '\033[31m',
        'CRITICAL': '\033[35m',
    }
    RESET = '\033[0m'

    def __init__(self, use_color: bool = True):
        super().__init__()
        self.use_color = use_color

    def format(self, record):
        stamp = datetime.fromtimestamp(record.created).strftime('%H:%M:%S')
        prefix = "" if record.levelno == logging.INFO else f"{record.levelname}: "
        text = f"[{stamp}] {prefix}{record.getMessage()}"
        if not self.use_color:
            return text
        return f"{self.COLORS.get(record.levelname, '')}{text}{self.RESET}"


class MClosedLogger:
    """Step logger shared by the CLI verbs and the verification checks."""

    RULE = "=" * 60

    def __init__(self, name: str = "mclosed", stream=None):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False
        if not self.logger.handlers:
            target = stream if stream is not None else sys.stderr
            handler = logging.StreamHandler(target)
            handler.setFormatter(ColoredFormatter(use_color=getattr(target, "isatty", lambda: False)()))
            self.logger.addHandler(handler)

        self.run_started = time.perf_counter()
        self.step_started: Optional[float] = None
        self.step_times: Dict[str, float] = {}
        self.failed_steps = 0

    def set_level(self, level: str):
        """Level by name ('DEBUG', 'WARNING', ...); unknown names fall back to INFO."""
        self.logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    def _step_seconds(self) -> Optional[float]:
        if self.step_started is None:
            return None
        return time.perf_counter() - self.step_started

    def run_start(self, title: str):
        self.run_started = time.perf_counter()
        self.step_times = {}
        self.failed_steps = 0
        self.logger.info(self.RULE)
        self.logger.info(f"🔢 {title}")
        self.logger.info(self.RULE)

    def step_start(self, step_name: str, description: str = ""):
        self.step_started = time.perf_counter()
        self.logger.info(f"📋 {step_name}")
        if description:
            self.logger.info(f"   {description}")

    def step_complete(self, step_name: str, details: Optional[Mapping[str, object]] = None):
        seconds = self._step_seconds()
        if seconds is None:
            self.logger.info(f"✅ {step_name}")
        else:
            self.step_times[step_name] = seconds
            self.logger.info(f"✅ {step_name} ({seconds:.2f}s)")
        for key, value in (details or {}).items():
            self.logger.info(f"   • {key}: {value}")

    def step_error(self, step_name: str, error: str):
        self.failed_steps += 1
        seconds = self._step_seconds()
        timing = f" after {seconds:.2f}s" if seconds is not None else ""
        self.logger.error(f"❌ {step_name} failed{timing}: {error}")

    def progress(self, current: int, total: int, item_name: str, details: str = ""):
        """One progress line for a corpus sweep."""
        share = current / total if total else 1.0
        filled = int(20 * share)
        bar = "█" * filled + "░" * (20 - filled)
        suffix = f" - {details}" if details else ""
        self.logger.info(f"⚡ [{bar}] {share * 100:5.1f}% {current}/{total} {item_name}{suffix}")

    def metrics(self, title: str, metrics: Mapping[str, object]):
        self.logger.info(f"📈 {title}:")
        for name, value in metrics.items():
            self.logger.info(f"   • {name}: {value}")

    def run_complete(self, success: bool = True):
        total = time.perf_counter() - self.run_started
        timed = f", {len(self.step_times)} timed steps" if self.step_times else ""
        if success:
            self.logger.info(f"🎯 done in {total:.2f}s{timed}")
        else:
            self.logger.error(f"💥 failed in {total:.2f}s ({self.failed_steps} failing steps{timed})")

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str):
        self.logger.error(message)

    def debug(self, message: str):
        self.logger.debug(message)


mclosed_logger = MClosedLogger()
