"""Smoke tests for the python bindings."""

import math
import sys

import freefactor as ff


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    m2 = ff.trace(2)
    check(ff.ef_squared(m2) == "3", "trace M_2 ef^2")
    check(abs(ff.ef(m2) - math.sqrt(3.0)) < 1e-12, "trace M_2 ef float")
    check(ff.ef_squared(ff.diffuse_abelian()) == "inf", "diffuse ef")
    check(ff.ef_squared(ff.single_block(["2/3", "1/3"])) == "26/19", "skew M_2 ef^2")

    check(ff.invariant_group(m2) == "R", "trace invariant group")
    psi = ff.psi_lambda("1/2")
    check(ff.invariant_group(psi) == "(2pi/ln 2)Z", "psi invariant group")
    check(abs(ff.invariant_generator(psi) - 2 * math.pi / math.log(2)) < 1e-12,
          "psi generator")

    rep = ff.classify(ff.diffuse_abelian("L"), psi)
    check(rep["certified"], "diffuse * psi certifies")
    check(rep["t_invariant"] == "(2pi/ln 2)Z", "T invariant")
    check("III" in rep["type"], "type candidates")

    rep2 = ff.classify(ff.commutative(["3/5", "2/5"]), m2)
    check(not rep2["certified"], "dominant weight is inconclusive")

    a = ff.algebra_from_json(
        '{"algebras":[{"kind":"matrix_blocks","label":"A",'
        '"blocks":[{"size":2,"weights":["2/3","1/3"]}]}]}')
    check(ff.ef_squared(a) == "26/19", "json round trip")

    try:
        ff.commutative(["1/2", "1/3"])
        check(False, "bad weights must raise")
    except Exception:
        pass

    csv = ff.figure1_csv(5)
    check(csv.splitlines()[0] == "lambda,ef", "figure1 header")
    check(len(csv.splitlines()) == 6, "figure1 rows")

    check(ff.region_membership("1/2", "1/2"), "region corner")
    check(not ff.region_membership("9/10", "9/10"), "region far corner")

    fock = ff.fock_report(ff.uniform(2), ff.commutative(["2/3", "1/3"]), 3)
    check(fock["dim"] == 7 and fock["dim"] == fock["expected_dim"], "fock dimension")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
