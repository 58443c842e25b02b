#!/usr/bin/env python3
"""Smoke test for the setlab Python extension.

Locates the built cdylib (cargo build -p setlab-py --release), stages it as
an importable module, and exercises the main types and operations.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> None:
    candidates = [
        REPO / "target" / "release" / "libsetlab.so",
        REPO / "target" / "debug" / "libsetlab.so",
        REPO / "target" / "release" / "libsetlab.dylib",
        REPO / "target" / "debug" / "libsetlab.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p setlab-py --release")
    stage = Path(tempfile.mkdtemp(prefix="setlab-py-"))
    shutil.copy2(built, stage / "setlab.so")
    sys.path.insert(0, str(stage))


def main() -> None:
    stage_module()
    import setlab

    # sumsets
    assert setlab.sumset([0], [3, 7]) == [3, 7]
    assert setlab.sumset([1, 2], [1, 2]) == [2, 3, 4]
    assert setlab.sumset([1, 3], [2, 8]) == [3, 5, 9, 11]

    # families, expressions, parameters
    k5 = setlab.Graph.generate("complete:5")
    assert (k5.order, k5.size) == (5, 10)
    assert k5.sparing()["value"] == 6

    c7 = setlab.Graph.generate("C7")
    assert c7.sparing()["value"] == 1
    assert c7.bipartition() is None

    gear = setlab.Graph.generate("gear:4")
    assert gear.sparing()["value"] == 0
    assert gear.bipartition() is not None

    wheel = setlab.Graph.generate("join(K1, cycle(5))")
    assert (wheel.order, wheel.size) == (6, 10)
    assert wheel.sparing()["value"] == 4

    p = setlab.Graph.generate("cycle:5").parameters()
    assert p["matching_number"] == 2
    assert p["vertex_cover_number"] == 3
    assert p["chromatic_number"] == 3
    assert p["diameter"] == 2

    # labeling round trip: construct, verify, inspect the report
    sun = setlab.Graph.generate("sun:4")
    labels = sun.label()
    report = sun.verify(labels)
    assert report["wiasi"] is True
    assert report["mono_edges"] == sun.sparing()["value"] == 5

    uniform = setlab.Graph.generate("complete_bipartite:2:3").label_uniform(3)
    rep = setlab.Graph.generate("complete_bipartite:2:3").verify(uniform)
    assert rep["wiasi"] is True and rep["uniformity"] == 3

    # non-bipartite graphs refuse k-uniform labelings
    try:
        setlab.Graph.generate("cycle:3").label_uniform(2)
    except ValueError:
        pass
    else:
        sys.exit("expected label_uniform to fail on an odd cycle")

    # file formats survive the round trip
    text = gear.to_edge_list()
    again = setlab.Graph.parse(text)
    assert again.to_edge_list() == text
    assert setlab.Graph.parse(wheel.to_json()).names() == wheel.names()
    assert "--" in k5.to_dot()

    # claims catalog
    verdicts = setlab.claim_verdicts()
    assert verdicts["SN-COMPLETE"] == "MATCH"
    assert verdicts["SN-ODD-CYCLE"] == "MATCH"
    assert verdicts["SN-BIPARTITE"] == "MATCH"
    assert verdicts["SN-BIPARTIZATION"] == "MISMATCH"
    assert verdicts["SN-FAN"] == "NON_INTEGER"
    assert len(setlab.claim_ids()) == len(verdicts)

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
