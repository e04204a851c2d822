"""Configuration identity and the toolchain decision walk.

Reports label results with a short configuration name derived from the
OS family and the toolchain, so series from different machines can sit
side by side.  The advisor answers the practical question -- which
toolchain, and how much explicit lane code is worth writing -- from the
device class and whatever toolchains are on the table.
"""

from lanebench import advise, derive_config_name, detect

meta = detect()
print(f"host: {meta.os_family} {meta.os_version}, {meta.architecture}")
print(f"cpu : {meta.cpu_model} ({meta.core_count} cores, "
      f"{meta.memory_bytes / 2**30:.1f} GiB)")
print(f"runtime: {meta.toolchain_name} {meta.toolchain_version}, opt {meta.opt_level}")
print(f"config name: {meta.config_name}\n")

# The name is a pure function of (os family, toolchain):
for family, toolchain in [("linux", "gcc"), ("macos", "clang"), ("windows", "msvc")]:
    print(f"  {family:8s} + {toolchain:6s} -> {derive_config_name(family, toolchain)}")

print("\ndecision walks:")
cases = [
    ("windows-x86-64", ["icc", "msvc", "gcc"]),
    ("windows-x86-64", ["msvc", "gcc"]),
    ("windows-x86-64", ["gcc"]),
    ("linux-x86-64", ["gcc"]),
    ("macos-arm64", ["clang", "gcc"]),
    ("macos-arm64", ["gcc"]),
    ("other", ["gcc", "clang"]),
]
for device, available in cases:
    rec = advise(device, available)
    print(f"  {device:16s} with {','.join(available):14s} -> {rec.headline()}")
