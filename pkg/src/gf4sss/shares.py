"""Shares file format::

    scheme: additive
    code: hexacode_additive
    P1 w
    P2 0
    ...

The secret (coordinate 0) is never written.
"""

from __future__ import annotations

from typing import Mapping

from .errors import ShareFormatError
from .field import F4, as_f4

ShareVector = dict[int, F4]


def format_shares(shares: Mapping[int, F4], scheme_kind: str, code_name: str) -> str:
    lines = [f"scheme: {scheme_kind}", f"code: {code_name}"]
    lines += [f"P{i} {as_f4(shares[i]).symbol}" for i in sorted(shares)]
    return "\n".join(lines) + "\n"


def parse_shares(text: str) -> tuple[dict[str, str], ShareVector]:
    header: dict[str, str] = {}
    shares: ShareVector = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            header[key.strip()] = value.strip()
            continue
        parts = line.split()
        if len(parts) != 2 or not parts[0].startswith("P") or not parts[0][1:].isdigit():
            raise ShareFormatError(f"line {lineno}: expected 'P<i> <symbol>', got {line!r}")
        idx = int(parts[0][1:])
        if idx < 1:
            raise ShareFormatError(f"line {lineno}: participant indices start at 1")
        if idx in shares:
            raise ShareFormatError(f"line {lineno}: duplicate share for P{idx}")
        try:
            shares[idx] = F4.from_symbol(parts[1])
        except ValueError as exc:
            raise ShareFormatError(f"line {lineno}: {exc}") from None
    if header.get("scheme") not in ("linear", "additive"):
        raise ShareFormatError("missing or invalid 'scheme:' header (linear|additive)")
    return header, shares
