"""Smoke test for the skewgb_py extension.

Build with `cargo build -p skewgb-python --release`, then run
`python3 python/smoke_test.py`; the script copies the built library next
to itself as skewgb_py.so unless SKEWGB_PY_LIB points elsewhere.
"""
import os
import shutil
import sys
import sysconfig
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent


def load():
    lib = Path(os.environ.get("SKEWGB_PY_LIB", ROOT / "target" / "release" / "libskewgb_py.so"))
    if not lib.exists():
        sys.exit(f"missing {lib}; run `cargo build -p skewgb-python --release` first")
    dest = Path(os.environ.get("TMPDIR", "/tmp")) / "skewgb_py_smoke"
    dest.mkdir(exist_ok=True)
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, dest / f"skewgb_py{suffix}")
    sys.path.insert(0, str(dest))
    import skewgb_py
    return skewgb_py


def main():
    sg = load()

    qp = sg.Presentation.fixture("qplane")
    assert qp.generators == ["x", "y"]
    assert qp.nf("y*y*x") == "4*x*y^2", qp.nf("y*y*x")
    assert qp.check_gb(4) == "verified"
    assert qp.classify() == ["LeftType", "RightType", "TwoSidedType"]

    q = qp.quotient(max_deg=4)
    assert [q.dimension(d) for d in range(5)] == [1, 3, 6, 10, 15]
    assert q.mul("x*y", "x*y") == "2*x^2*y^2"
    assert q.is_domain()
    assert q.onesided_gb(["x"], side="left") == ["x"]

    p = sg.Presentation.parse("gens x y\nrel y*x - x*y\nrel y*y*x\n")
    basis, truncated = p.complete(5)
    assert not truncated and basis == ["y*x - x*y", "x*y^2"], basis
    assert p.check_gb(5) == "refuted"
    assert sg.normal_form(p.to_text(), "y^2*x") == "0"

    ex3 = sg.Presentation.fixture("ex3")
    assert ex3.classify() == ["None"]
    assert not ex3.ordering_exists("two", 3)

    ex5 = sg.Presentation.fixture("ex5_generic")
    assert len(ex5.leading_homogeneous()) == 3

    try:
        sg.Presentation.parse("gens x\nrel x*z\n")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown generator accepted")
    try:
        ex3.quotient()
    except sg.SkewgbError:
        pass
    else:
        raise AssertionError("unclassifiable quotient accepted")

    print("skewgb_py smoke test passed")


if __name__ == "__main__":
    main()
