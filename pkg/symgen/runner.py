from __future__ import annotations

"""Background worker that verifies catalog entries."""

import logging
import threading
from pathlib import Path
from typing import Callable, Iterable

from i18n_pkg import T

from .catalog import VerificationReport, load_catalog, run_all, select_entries
from .cosets import EnumerationLimits
from .errors import SymgenError

logger = logging.getLogger(__name__)


class Hook:
    """Callbacks connected to one event, called in connection order."""

    def __init__(self) -> None:
        self._slots: list[Callable] = []

    def connect(self, slot: Callable) -> None:
        self._slots.append(slot)

    def emit(self, *args) -> None:
        for slot in self._slots:
            slot(*args)


class CatalogRunner(threading.Thread):
    """Runs :func:`run_all` off the calling thread.

    Hooks: ``progress(done, total)``, ``log(text)``, ``done(reports)``,
    ``error(text)`` and ``cancelled(text)``. Exactly one of the last three
    fires per run.
    """

    def __init__(
        self,
        scale: str = "desk",
        ids: Iterable[str] | None = None,
        directory: str | Path | None = None,
        limits: EnumerationLimits | None = None,
        workers: int | None = None,
        force: bool = False,
        show_progress: bool = False,
        lang: str = "en",
    ) -> None:
        super().__init__(name="symgen-catalog", daemon=True)
        self.progress = Hook()
        self.log = Hook()
        self.done = Hook()
        self.error = Hook()
        self.cancelled = Hook()
        self.scale = scale
        self.ids = list(ids) if ids is not None else None
        self.directory = directory
        self.limits = limits
        self.workers = workers
        self.force = force
        self.show_progress = show_progress
        self.lang = lang
        self._cancel = threading.Event()

    def request_cancel(self) -> None:
        if not self._cancel.is_set():
            self._emit(T(self.lang, "Cancelling…"))
        self._cancel.set()

    def _emit(self, text: str) -> None:
        self.log.emit(text)

    def run(self) -> None:
        try:
            total = len(select_entries(load_catalog(self.directory), self.scale, self.ids))
            self._emit(T(self.lang, "Running {n} catalog entries (scale {scale}).", n=total, scale=self.scale))
            finished = 0

            def on_report(report: VerificationReport) -> None:
                nonlocal finished
                finished += 1
                self._emit(
                    T(
                        self.lang,
                        "[{a}/{b}] {entry}: {status}",
                        a=finished,
                        b=total,
                        entry=report.entry,
                        status=T(self.lang, report.status),
                    )
                )
                self.progress.emit(finished, total)

            reports = run_all(
                self.scale,
                self.directory,
                self.limits,
                self.workers,
                self.ids,
                progress=on_report,
                show_progress=self.show_progress,
                force=self.force,
                should_stop=self._cancel.is_set,
            )
        except (SymgenError, ValueError) as exc:
            logger.debug("catalog run failed", exc_info=True)
            self.error.emit(str(exc))
            return
        if self._cancel.is_set() and len(reports) < total:
            self.cancelled.emit(T(self.lang, "Cancelled by user."))
            return
        self.done.emit(reports)


__all__ = ["CatalogRunner", "Hook"]
