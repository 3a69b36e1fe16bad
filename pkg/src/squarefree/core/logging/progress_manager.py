# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

"""Global progress bar manager.

Long sweeps (2^n squarefree degrees, 3^n sign patterns) report through a
single transient tqdm bar; while one is active, console log output is
routed through ``tqdm.write`` so the bar is not torn.
"""

import contextlib
from collections.abc import Generator

from tqdm import tqdm


class ProgressBarManager:
    """Class-level stack of active progress bars.

    Usage:
        with ProgressBarManager.set_pbar(description="Betti table", total=16):
            ProgressBarManager.advance(postfix="alpha=(0,1,1,0)")
    """

    _pbar_stack: list[tqdm] = []
    _silent: bool = False

    @classmethod
    @contextlib.contextmanager
    def set_pbar(
        cls,
        pbar: tqdm | None = None,
        description: str | None = None,
        total: int | None = None,
        silent: bool = False,
    ) -> Generator[tqdm | None]:
        """Push ``pbar`` (or a new transient bar built from ``description``) for the
        duration of the block."""
        if cls._silent or silent:
            yield None
            return

        should_close = False
        if pbar is None:
            if description is None:
                yield None
                return

            pbar = tqdm(
                total=total,
                desc=description,
                unit="degree",
                leave=False,
                bar_format="{desc}{postfix}" if total is None else None,
            )
            should_close = True

        cls._pbar_stack.append(pbar)
        try:
            yield pbar
        finally:
            if cls._pbar_stack and cls._pbar_stack[-1] is pbar:
                cls._pbar_stack.pop()
            if should_close:
                pbar.close()

    @classmethod
    def get_pbar(cls) -> tqdm | None:
        if cls._silent or not cls._pbar_stack:
            return None
        return cls._pbar_stack[-1]

    @classmethod
    def advance(cls, postfix: str | None = None) -> None:
        """Step the active bar by one, optionally updating its postfix."""
        pbar = cls.get_pbar()
        if pbar is None:
            return
        if postfix is not None:
            pbar.set_postfix_str(postfix, refresh=False)
        pbar.update(1)

    @classmethod
    def is_active(cls) -> bool:
        return not cls._silent and bool(cls._pbar_stack)

    @classmethod
    def set_silent(cls, silent: bool) -> None:
        cls._silent = silent

    @classmethod
    def is_silent(cls) -> bool:
        return cls._silent

    @classmethod
    def clear(cls) -> None:
        """Clear all state (for testing purposes)."""
        cls._pbar_stack.clear()
        cls._silent = False
