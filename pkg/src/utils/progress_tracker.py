"""
Progress tracking and metrics for corpus sweeps and verification runs.
"""

import time
from typing import Any, Dict, List, Optional

from src.logger_config import mclosed_logger


class ProgressTracker:
    """Tracks per-case timings, failures and progress of a corpus sweep."""

    def __init__(self, label: str = "cases", report_every: int = 0):
        """
        Args:
            label: Name of the items being processed (e.g. "graphs", "labelings")
            report_every: Log progress every N cases (0 disables progress lines)
        """
        self.label = label
        self.report_every = report_every
        self.case_times: List[float] = []
        self.failures = 0
        self.start_time: Optional[float] = None

    def start_processing(self) -> None:
        self.start_time = time.time()

    def track_case(self, case_start_time: float) -> float:
        """Record the time spent on one case and return it in seconds."""
        elapsed = time.time() - case_start_time
        self.case_times.append(elapsed)
        return elapsed

    def increment_failures(self) -> None:
        self.failures += 1

    def report_progress(self, current: int, total: int, message: str = "") -> None:
        if self.report_every and (current % self.report_every == 0 or current == total):
            mclosed_logger.progress(current, total, self.label, message)

    @property
    def elapsed(self) -> float:
        return time.time() - self.start_time if self.start_time else 0.0

    def calculate_final_metrics(self) -> Dict[str, Any]:
        """Summary of the sweep for the metrics log block."""
        cases = len(self.case_times)
        average = sum(self.case_times) / cases if cases else 0.0
        return {
            f"{self.label.capitalize()} processed": f"{cases}",
            "Failures": f"{self.failures}",
            "Total time": f"{self.elapsed:.2f}s",
            "Average per case": f"{average * 1000:.2f}ms",
        }

    def report_metrics(self, metrics_title: str, metrics: Optional[Dict[str, Any]] = None) -> None:
        mclosed_logger.metrics(metrics_title, metrics if metrics is not None else self.calculate_final_metrics())
