"""Collects acceptance outcomes so they can be echoed inline and in the terminal summary."""

import sys

RESULTS: list[tuple[str, bool, str]] = []


def line(cid: str, ok: bool, detail: str) -> str:
    return f"ACCEPTANCE {cid} {'PASS' if ok else 'FAIL'} {detail}"


def record(cid: str, ok: bool, detail: str) -> None:
    RESULTS.append((cid, ok, detail))
    sys.__stdout__.write("\n" + line(cid, ok, detail) + "\n")
    sys.__stdout__.flush()
