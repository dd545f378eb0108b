"""Classical zeta functions of undirected graphs recovered from the digraph setting.

For K4 the Bass-Ihara formula, the Bartholdi closed form and the Hashimoto
determinant of the symmetric digraph are compared, and the Bartholdi
polynomial is specialised at q = 0 (Ihara) and q = 1 (Bowen-Lanford).

    python demos/classical_zetas.py
"""

import itertools

from graphzeta import (
    Graph,
    WeightScheme,
    bass_ihara_classical,
    classical_closed_forms,
    format_poly,
    hashimoto_polynomial,
    symmetric_digraph,
)
from graphzeta.algebra import QQ, evaluate_q


def main():
    k4 = Graph(4, tuple(itertools.combinations(range(4), 2)))
    d, _ = symmetric_digraph(k4)

    hashimoto = hashimoto_polynomial(d, WeightScheme.ihara(d))
    print("K4, det(I - tM):      ", format_poly(hashimoto))
    print("K4, Bass-Ihara form:  ", format_poly(bass_ihara_classical(k4)))

    bart = hashimoto_polynomial(d, WeightScheme.bartholdi(d))
    print("\nK4 Bartholdi, det(I - tM) over Q(q):\n ", format_poly(bart))
    print("closed form agrees:", classical_closed_forms(k4, "BARTHOLDI") == bart)
    for q in (0, 1):
        print(f"at q = {q}:", format_poly(bart.map_coeffs(lambda c: evaluate_q(c, q), QQ)))
    print("Bowen-Lanford det(I - tA):", format_poly(classical_closed_forms(k4, "BOWEN_LANFORD")))

    # A triangle with a pendant loop: Bartholdi's form still matches.
    g = Graph(3, ((0, 1), (1, 2), (0, 2), (2, 2)))
    d, _ = symmetric_digraph(g)
    print("\ntriangle + loop, q = 1/3:")
    print("  det(I - tM):  ", format_poly(hashimoto_polynomial(d, WeightScheme.bartholdi(d, "1/3"))))
    print("  closed form:  ", format_poly(classical_closed_forms(g, "BARTHOLDI", q="1/3")))


if __name__ == "__main__":
    main()
