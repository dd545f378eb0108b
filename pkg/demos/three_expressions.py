"""The exponential, Euler and Hashimoto expressions as truncated series.

The exponential and Euler sides enumerate closed paths and prime cycles
directly; the Hashimoto side inverts a determinant.  The script also prints
the first N_m and checks the Lyndon-word product for the edge matrix.

    python demos/three_expressions.py
"""

from graphzeta import (
    WeightScheme,
    edge_matrix,
    euler_expression_truncated,
    exp_expression_truncated,
    fz_truncated_check,
    hashimoto_series,
    lyndon_words,
    n_m,
)
from graphzeta.io import load_fixture

T = 6  # 8 arcs: 8^7 is the largest power under the default enumeration bound


def row(series):
    return ", ".join(series.field.format(c) for c in series.coeffs)


def main():
    d = load_fixture().digraph
    for label, scheme in [("Ihara", WeightScheme.ihara(d)),
                          ("Bartholdi, q = 1/2", WeightScheme.bartholdi(d, "1/2")),
                          ("Sato, tau = 2 on every arc", WeightScheme.sato(d, [2] * 8))]:
        print(f"{label}:")
        print("  N_1..N_4  :", [scheme.field.format(n_m(d, scheme, m)) for m in range(1, 5)])
        print("  exp       :", row(exp_expression_truncated(d, scheme, T)))
        print("  euler     :", row(euler_expression_truncated(d, scheme, T)))
        print("  hashimoto :", row(hashimoto_series(d, scheme, T)))

    print("\nLyndon words over {1,2} up to length 4:",
          "; ".join("".join(map(str, w)) for w in lyndon_words(2, 4)))
    M = edge_matrix(d, WeightScheme.ihara(d))
    print("Lyndon product equals det(I - tM) to order 6:", fz_truncated_check(M, 6))


if __name__ == "__main__":
    main()
