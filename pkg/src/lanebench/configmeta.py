"""Best-effort description of the machine and runtime a benchmark ran on.

Every report carries this block verbatim so results from different
hosts, runtimes and optimisation settings can be told apart.  Detection
never fails: anything the host will not reveal is recorded as "unknown"
(or 0 for the numeric fields).
"""

from __future__ import annotations

import os
import platform
import sys
from dataclasses import dataclass

_OS_PREFIX = {"linux": "lin", "macos": "mac", "windows": "win", "other": "oth"}

# CPython's -O levels map onto the conventional O0..O2 axis; anything
# else is supplied explicitly by the caller.
_PY_OPT = {0: "O0", 1: "O1", 2: "O2"}


@dataclass(frozen=True)
class ConfigMetadata:
    """One row of configuration identity: OS, chip, runtime, optimisation.

    ``core_count`` and ``memory_bytes`` fall back to 0 when the host
    does not expose them.
    """

    os_family: str  # linux | macos | windows | other
    os_version: str
    architecture: str  # x86-64 | arm64 | other
    cpu_model: str
    core_count: int
    memory_bytes: int
    toolchain_name: str
    toolchain_version: str
    opt_level: str  # O0 | O1 | O2 | O3 | Od | other:<text>
    config_name: str


def derive_config_name(os_family: str, toolchain_name: str) -> str:
    """Short configuration label: os prefix + '_' + lowercased toolchain."""
    prefix = _OS_PREFIX.get(os_family, "oth")
    return f"{prefix}_{toolchain_name.lower()}"


def _os_family() -> tuple[str, str]:
    system = platform.system()
    family = {"Linux": "linux", "Darwin": "macos", "Windows": "windows"}.get(system, "other")
    version = platform.release() or "unknown"
    return family, version


def _architecture() -> str:
    machine = platform.machine().lower()
    if machine in ("x86_64", "amd64"):
        return "x86-64"
    if machine in ("arm64", "aarch64"):
        return "arm64"
    return "other"


def _cpu_model() -> str:
    name = platform.processor()
    if not name and platform.system() == "Linux":
        try:
            with open("/proc/cpuinfo") as fh:
                for line in fh:
                    if line.lower().startswith("model name"):
                        name = line.split(":", 1)[1].strip()
                        break
        except OSError:
            name = ""
    return name or "unknown"


def _memory_bytes() -> int:
    try:
        return os.sysconf("SC_PAGE_SIZE") * os.sysconf("SC_PHYS_PAGES")
    except (AttributeError, ValueError, OSError):
        return 0


def detect(opt_level: str | None = None) -> ConfigMetadata:
    """Populate configuration metadata from the running host.

    Total: never raises; unknown fields degrade to "unknown" / 0.
    ``opt_level`` overrides the value inferred from the interpreter's
    optimise flag.
    """
    family, version = _os_family()
    toolchain = platform.python_implementation().lower() or "unknown"
    if opt_level is None:
        opt_level = _PY_OPT.get(sys.flags.optimize, f"other:{sys.flags.optimize}")
    return ConfigMetadata(
        os_family=family,
        os_version=version,
        architecture=_architecture(),
        cpu_model=_cpu_model(),
        core_count=os.cpu_count() or 0,
        memory_bytes=_memory_bytes(),
        toolchain_name=toolchain,
        toolchain_version=platform.python_version() or "unknown",
        opt_level=opt_level,
        config_name=derive_config_name(family, toolchain),
    )
