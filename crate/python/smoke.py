"""Smoke test for the motivic_zeta extension module.

Build and install first, e.g. from crates/py:  maturin develop --release
then run:  python python/smoke.py
"""

import sys

import motivic_zeta as mz


def partitions(n):
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for i in range(k, n + 1):
            p[i] += p[i - k]
    return p


def main():
    L = mz.LefschetzPoly([0, 1])
    p2 = mz.LefschetzPoly.projective(2)
    assert p2 == 1 + L + L**2
    assert mz.parse_class("P^1 * P^1") == mz.LefschetzPoly([1, 2, 1])
    assert str(mz.parse_class("L^3 - L")) == "L^3 - L"
    assert mz.mu_dg("P^3") == 4
    assert mz.mu_dg("L - 1") == 0

    assert mz.zeta_categorical("pt", 20) == partitions(20)
    assert mz.exp_transform([1] * 21) == partitions(20)
    assert mz.mobius_transform(partitions(20)) == [1] * 21
    assert mz.mobius_table(10) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    assert mz.sym_power("P^1", 2) == p2
    assert mz.adams("L", 3) == L**3

    for cls in ["pt", "L", "P^2", "L^3 - L", "2*L^2 - 3"]:
        report = mz.verify_theorem(cls)
        assert report.verified, f"{cls}: {report}"
    assert mz.verify_mult_kap("pt", "A^1", 12)
    assert mz.verify_mult_cat("pt", "A^1", 12)
    assert mz.verify_pn_power("P^1", 3, 12)
    assert mz.verify_point_partition(64)

    failed = mz.verify_theorem("P^1", 6, structure="geometric")
    assert not failed.verified
    assert failed.mismatch[0] == 2, failed.mismatch

    try:
        mz.parse_class("P^")
    except ValueError:
        pass
    else:
        raise AssertionError("parse_class('P^') should raise")

    print("smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
