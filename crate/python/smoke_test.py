#!/usr/bin/env python3
"""Smoke test for the absorb_py extension module.

Build the extension first:

    cargo build -p absorb-py --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libabsorb_py.so",
        root / "target" / "debug" / "libabsorb_py.so",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("libabsorb_py.so not found; run `cargo build -p absorb-py --release` first")
    stage = Path(tempfile.mkdtemp(prefix="absorb_py_"))
    shutil.copy2(built, stage / "absorb_py.so")
    sys.path.insert(0, str(stage))
    import absorb_py

    return absorb_py


def main():
    ab = load_module()

    # Ring arithmetic in Z/12.
    ring = ab.Ring("Z/12")
    assert ring.size() == 12
    assert ring.add(7, 8) == 3
    assert ring.mul(4, 3) == 0
    assert ring.is_unit(5) and not ring.is_unit(4)
    assert ring.check_axioms() is None

    # Product and polynomial-quotient constructors.
    prod = ab.Ring("Z/4 x Z/9")
    assert prod.size() == 36
    assert prod.element_text(prod.one()) == "(1,1)"
    pq = ab.Ring("Z/2[x]/(x^2)")
    x = pq.parse_element("x")
    assert pq.mul(x, x) == 0

    # Ideal algebra.
    p4 = ring.ideal([4])
    assert p4.members() == [0, 4, 8]
    p2 = ring.ideal_from_text("2")
    assert p4.radical() == p2
    assert p4.colon(2) == p2
    assert len(ring.ideals()) == 6

    # Quotient rings.
    p6 = ring.ideal([6])
    quotient, projection = ring.quotient(p6)
    assert quotient.size() == 6
    assert projection[6] == 0

    # Predicates with minimal witnesses.
    assert ab.is_primary(p4).holds
    verdict = ab.is_n_absorbing_i_primary(p6, p2, 1)
    assert not verdict.holds
    assert verdict.witness == [2, 3]
    assert ab.is_n_absorbing_i_primary_colon(p6, p2, 1).holds == verdict.holds
    assert ab.is_n_absorbing_i_primary(p6, ring.ideal([1]), 1).holds  # I = R vacuity

    # Obstruction tuple search in Z/30.
    z30 = ab.Ring("Z/30")
    zero = z30.ideal([])
    whole = z30.ideal([1])
    assert ab.find_i_tuple(zero, whole, 2) == [2, 3, 5]

    # Law verification over explicit rings.
    report = json.loads(ab.verify_theorem("2.12", rings=["Z/16", "Z/27"], n=[2]))
    assert report["failures"] == []

    # Monomial example scan: the conflict with the advertised relative
    # property must be flagged and its witnesses must re-validate.
    example = json.loads(ab.example21(2, 3))
    assert example["not_n_absorbing_confirmed"]
    assert example["conflict_with_advertised_property"]
    assert example["witnesses_revalidated"]

    # Sweep report parses and has the full grid.
    grid = json.loads(ab.sweep(ring, 2))
    assert len(grid["table"]) == 6 * 6 * 2

    print("smoke test passed")


if __name__ == "__main__":
    main()
