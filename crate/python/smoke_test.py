"""Smoke test for the Python bindings. Build first with
`maturin develop -m crates/py/Cargo.toml` (or `pip install ./crates/py`)."""

import json

import facering

tetra = facering.Complex("1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
assert tetra.f_vector() == [1, 4, 6, 4]
assert tetra.h_vector() == [1, 1, 1, 1]
assert tetra.betti() == [0, 0, 0, 1]
assert tetra.link(["1"]).f_vector() == [1, 3, 3]
assert tetra.subdivide(["1", "2"]).f_vector() == [1, 5, 9, 6]

assert len(facering.Complex.bundled_names()) >= 10
n4 = facering.Complex.bundled("n4")
assert (n4.n, n4.d) == (8, 4)
assert facering.hprime(n4) == [1, 4, 10, 7, 1]
assert facering.hprime(n4, method="his") == [1, 4, 10, 7, 1]

flags = json.loads(facering.classify(n4))
assert flags["pseudomanifold"] and not flags["cm"]

report = json.loads(facering.analyze(n4, id="n4"))
assert report["complexId"] == "n4"
assert all(c["status"] != "fail" for c in report["checks"])

necklace = facering.Complex.bundled("necklace")
try:
    facering.hprime(necklace, method="his")
except ValueError:
    pass
else:
    raise AssertionError("expected a precondition error")
assert facering.hprime(necklace, method="his", force=True) == [1, 7, 8, 2]

try:
    facering.Complex("1 2\n1 x y z\n1 1\n")
except ValueError:
    pass
else:
    raise AssertionError("expected a parse error")

print("smoke test passed")
