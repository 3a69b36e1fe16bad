#!/usr/bin/env python3

import argparse
import re
from pathlib import Path

LICENSE_HEADER = """
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
""".strip()

_HAS_HEADER = re.compile(r"Copyright\s*\(C\)|GNU General Public License")
_SHEBANG = re.compile(r"^\s*#!.*")


def with_header(content: str) -> str:
    """Return ``content`` with the license header after any shebang line."""
    shebang = _SHEBANG.match(content)
    if shebang:
        rest = content[len(shebang.group(0)) :].lstrip()
        return f"{shebang.group(0).strip()}\n{LICENSE_HEADER}\n\n{rest}"
    return f"{LICENSE_HEADER}\n\n{content.lstrip()}"


def add_license_header(root_dir: str, check: bool = False) -> int:
    """Prepend the header to every .py file under root_dir.

    With ``check`` nothing is written; the number of files missing the
    header is returned so CI can fail on it.
    """
    missing = 0
    for path in sorted(Path(root_dir).rglob("*.py")):
        try:
            content = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            print(f"Skipping {path}: {e}")
            continue

        if _HAS_HEADER.search(content):
            continue

        missing += 1
        if check:
            print(f"Missing license header: {path}")
            continue

        path.write_text(with_header(content), encoding="utf-8")
        print(f"Prepended license header to {path}")

    return missing


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Prepends the GPLv2 license header to all .py files recursively."
    )
    parser.add_argument(
        "root_dir",
        nargs="?",
        default="./src",
        help="Path to the directory to start the search (defaults to ./src)",
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="Only report files without the header; exit 1 if there are any",
    )
    args = parser.parse_args()

    if add_license_header(args.root_dir, args.check) and args.check:
        raise SystemExit(1)
