"""Smoke test for the pyfincat extension.

Build with `maturin develop -m crates/py/Cargo.toml`, or copy
target/debug/libpyfincat.so next to this file as pyfincat.so.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pyfincat

pair = pyfincat.Category.fixture("PAIR")
assert pair.objects == ["a", "b"]
assert pair.hom("a", "b") == ["f", "g"]
assert pair.is_connected() and not pair.is_filtered()
assert pair.opposite().hom("b", "a") == ["f", "g"]

idem = pyfincat.Category.fixture("IDEM")
assert not idem.is_cauchy_complete()
env = idem.karoubi_envelope()
assert env.is_cauchy_complete()
assert len(env.objects) == len(idem.idempotents())
assert env.is_equivalent(env.karoubi_envelope())

singleton = pyfincat.SetFunctor.from_json(json.dumps({
    "base": json.loads(pair.to_json()),
    "variance": "presheaf",
    "sets": {"a": ["*"], "b": ["*"]},
    "maps": {"f": {"*": "*"}, "g": {"*": "*"}},
}))
assert not singleton.is_flat()
assert singleton.flatness_violation()[0] == "iii"
assert not singleton.is_flat_via_elements()

rep = pyfincat.SetFunctor.yoneda(pair, "b")
assert rep.is_flat()
assert len(rep.colimit()) == 1

poset = pyfincat.Category.fixture("ARROW2")
topo = pyfincat.Topology.generate(poset, json.dumps({"covers": {"b": [["f"]]}}))
assert topo.irreducibles() == ["a"]
assert topo.is_rigid()

try:
    pyfincat.Category.from_json("{")
except ValueError as e:
    assert str(e).startswith("Input: ")
else:
    raise AssertionError("malformed input accepted")

for name, cases, skipped, failures in pyfincat.selftest(seed=1):
    assert failures == 0, name

print("pyfincat smoke test ok")
