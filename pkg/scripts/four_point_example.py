"""Walk through the four points {[0,0,1], [1,1,1], [1,0,1], [0,1,1]} in P^2 with ell = x2.

Prints the Hilbert data, the coefficients c and d, F, the per-degree
comparison of <I_Z, ell> with Ann(F), and the linear form recovered from F.
"""
from invsys import (
    PointConfiguration,
    annihilator_piece,
    gorenstein_report,
    inverse_system_generator,
    recover_linear_form,
    vanishing_ideal_piece,
)
from invsys.polyring import GradedPoly, pretty

POINTS = [[0, 0, 1], [1, 1, 1], [1, 0, 1], [0, 1, 1]]


def main():
    Z = PointConfiguration.from_coords(POINTS)
    ell = GradedPoly.linear("R", [0, 0, 1])
    rep = gorenstein_report(Z)
    print("h-vector:", rep.hilbert.h_vector, "regularity:", rep.hilbert.regularity)
    print("arithmetically Gorenstein:", rep.arithmetically_gorenstein, f"({rep.reason})")
    print("I_Z in degree 2:", [pretty(f) for f in vanishing_ideal_piece(Z, 2)])

    res = inverse_system_generator(Z, ell)
    print("c =", [str(x) for x in res.c], " d =", [str(x) for x in res.d])
    print("F =", " + ".join(f"({c})*({pretty(L)})^{res.regularity}" for c, L in res.terms),
          "=", pretty(res.F))
    for row in res.per_degree:
        print(f"  degree {row.degree}: dim <I_Z, ell> = {row.ideal_dim}, "
              f"dim Ann(F) = {row.ann_dim}, equal = {row.equal}")
    print("Ann(F) in degree 1:", [pretty(f) for f in annihilator_piece(res.F, 1)])

    trace = []
    rec = recover_linear_form(res.terms, res.regularity, trace=trace)
    for name, M in trace:
        if name.startswith("interpolation"):
            print(name)
            for row in M.to_lists():
                print("   ", [str(x) for x in row])
    print("recovered ell =", pretty(rec.ell), " matrix rank =", rec.matrix_rank)


if __name__ == "__main__":
    main()
