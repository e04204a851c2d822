"""Toolchain and intrinsics-usage guidance per device class.

A deterministic decision walk over the four device classes.  Each class
tries its toolchains in a fixed priority order and stops at the first
one the caller has available; exhausting the list yields "unknown"
rather than invented advice.  The walk is advice only; it never changes
how the harness runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

DEVICE_CLASSES = ("windows-x86-64", "linux-x86-64", "macos-arm64", "other")

POLICY_NONE = "none"
POLICY_WHEREVER_NEEDED = "wherever-needed"
POLICY_CONDITION_BRANCHES = "condition-branches-only"
POLICY_UNKNOWN = "unknown"

_POLICY_TEXT = {
    POLICY_NONE: "without intrinsic",
    POLICY_WHEREVER_NEEDED: "with intrinsics wherever it is needed",
    POLICY_CONDITION_BRANCHES: "with intrinsics for condition branches",
}

# Accepted spellings for each toolchain family, matched case-insensitively.
_ALIASES = {
    "icc": "ICC", "icx": "ICC", "intel": "ICC",
    "msvc": "MSVC++", "msvc++": "MSVC++", "cl": "MSVC++",
    "gcc": "GCC", "g++": "GCC",
    "clang": "Clang", "clang++": "Clang", "apple-clang": "Clang", "appleclang": "Clang",
}

# Priority-ordered (toolchain, policy) candidates per device class.
_DECISION_TABLE: dict[str, list[tuple[str, str]]] = {
    "windows-x86-64": [
        ("ICC", POLICY_NONE),
        ("MSVC++", POLICY_WHEREVER_NEEDED),
        ("GCC", POLICY_CONDITION_BRANCHES),
    ],
    "linux-x86-64": [
        ("GCC", POLICY_NONE),
    ],
    "macos-arm64": [
        ("Clang", POLICY_NONE),
        ("GCC", POLICY_CONDITION_BRANCHES),
    ],
    "other": [],
}


@dataclass(frozen=True)
class Recommendation:
    """Which toolchain to use and how much explicit lane code to write."""

    toolchain: str
    intrinsics_policy: str
    rationale: str

    def headline(self) -> str:
        """One-line human advice, e.g. 'Use ICC, without intrinsic.'"""
        if self.toolchain == "unknown":
            return "No guidance for this combination; measure on the target."
        return f"Use {self.toolchain}, {_POLICY_TEXT[self.intrinsics_policy]}."


def normalise_toolchains(names: Iterable[str]) -> set[str]:
    """Map caller-supplied toolchain names onto the canonical family names."""
    out = set()
    for name in names:
        key = name.strip().lower()
        if not key:
            continue
        out.add(_ALIASES.get(key, name.strip()))
    return out


def advise(device: str, available: Iterable[str] = ()) -> Recommendation:
    """Walk the decision table for ``device`` against ``available`` toolchains.

    Total: any device string outside the known classes is treated as
    "other", and an exhausted candidate list yields the unknown
    recommendation.
    """
    if device not in DEVICE_CLASSES:
        device = "other"
    have = normalise_toolchains(available)
    for toolchain, policy in _DECISION_TABLE[device]:
        if toolchain in have:
            return Recommendation(
                toolchain=toolchain,
                intrinsics_policy=policy,
                rationale=f"{device}: {toolchain} available",
            )
    return Recommendation(
        toolchain="unknown",
        intrinsics_policy=POLICY_UNKNOWN,
        rationale=f"{device}: no covered toolchain available",
    )
