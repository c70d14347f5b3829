"""Smoke test for the `idforge` Python extension.

Build the module first (see README), then run:

    python python/smoke_test.py
"""

import json
import sys
from fractions import Fraction

import idforge


def main():
    ids = idforge.list_identities()
    assert len(ids) == 29, len(ids)
    flagged = [d["name"] for d in ids if d["known_discrepant"]]
    assert flagged == ["gould_variation"], flagged

    lhs = idforge.build_side("jensen", "lhs", {"n": 1})
    assert str(lhs) == "x + y + z", str(lhs)
    rhs = idforge.build_side("jensen", "rhs", {"n": 3})
    assert str(rhs) == str(idforge.build_side("jensen", "lhs", {"n": 3}))
    assert (lhs - lhs).is_zero()

    value = idforge.eval_side("cv_multi", "rhs", {"nvec": (1, 1)}, {"x": Fraction(1, 2), "y": 3})
    assert value == Fraction(35, 4), value
    assert lhs.eval({"x": 1, "y": "1/2", "z": -2}) == Fraction(-1, 2)

    r = idforge.verify("gould_variation", {"n": 1})
    assert r.status == "known_discrepant_confirmed", r.status
    assert str(r.difference) == "x + y", r.difference

    r = idforge.verify("jensen", {"n": 2}, mode="numeric", seed=7, mutate="shift_upper")
    assert r.status == "fail" and r.witness is not None, r

    results = idforge.run_suite(["abel", "hou_zeng_q"], max_n=2, jobs=2)
    assert results and all(c.status == "pass" for c in results)
    report = json.loads(idforge.to_json(results))
    assert [c["status"] for c in report["cells"]] == ["pass"] * len(results)
    assert all(c["elapsed_ms"] is None for c in report["cells"])

    try:
        idforge.verify("no_such_identity")
    except idforge.IdforgeError:
        pass
    else:
        raise AssertionError("unknown identity accepted")

    print(f"idforge {idforge.__version__}: smoke test ok ({len(results)} suite cells)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
