"""Smoke test for the halfturn_ice extension module.

Build it first, then run from the repository root:

    cargo build --release -p halfturn-ice-py --features extension-module
    python3 python/smoke_test.py

The script looks for the built library under target/ and loads it as
`halfturn_ice`; set HALFTURN_ICE_LIB to point at another build.
"""

import importlib.machinery
import importlib.util
import os
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    candidates = [os.environ.get("HALFTURN_ICE_LIB")] + [
        str(ROOT / "target" / profile / "libhalfturn_ice_py.so") for profile in ("release", "debug")
    ]
    for path in candidates:
        if path and os.path.exists(path):
            loader = importlib.machinery.ExtensionFileLoader("halfturn_ice", path)
            spec = importlib.util.spec_from_loader("halfturn_ice", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("halfturn_ice library not found; build halfturn-ice-py first")


def main():
    hi = load()

    assert [hi.count_asms(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]
    assert [hi.count_asms(n, "ht") for n in (2, 3, 4, 5)] == [2, 3, 10, 25]
    assert hi.count_closed("ht-odd", 7) == 588
    assert hi.count_closed("asm", 6) == 7436
    assert hi.refined_asm_counts(4) == [7, 14, 14, 7]

    asms = hi.enumerate_asms(3, "ht")
    assert len(asms) == 3 and all(a.is_half_turn_symmetric() for a in asms)
    m = hi.Asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    assert m.minus_ones() == 1 and m.central_entry() == -1 and m.permutation() is None
    try:
        hi.Asm([[1, 1], [0, 0]])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid matrix accepted")

    census = hi.census(3, "ht")
    assert census["total"] == "3" and census["class"] == "ht"

    closed = hi.inversion_genfunc(4)
    assert closed == hi.inversion_genfunc(4, brute=True)

    z2 = hi.partition_function("dwbc", 2)
    assert z2.num_terms() > 0 and "a" in z2.vars
    assert z2 == hi.Poly.from_json(z2.to_json())

    d, s = hi.compare_determinant("ht-odd", 1, ["1/2", "3", "5/7"])
    assert d == s, (d, s)

    report = hi.run_suite("ybe")
    assert report.passed and report.checks_run > 0, report
    assert report.witness is None

    print("halfturn_ice smoke test passed")


if __name__ == "__main__":
    main()
