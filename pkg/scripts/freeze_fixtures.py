"""Recompute the frozen regression tables in tests/test_tsring.py from the Brauer quotient oracle.

The oracle never touches the closed formulas, so a table printed here is an
independent reference for them.
"""

from trivsource.permgroup import parse_group
from trivsource.tsring import Session, oracle_matrix

CASES = [("S3", 3), ("S3", 2), ("klein4", 2), ("C2", 2), ("C3", 3)]


def main():
    for name, p in CASES:
        S = Session(parse_group(name), p)
        O = oracle_matrix(S)
        rows = [[str(O[i, j]) for j in range(O.cols)] for i in range(O.rows)]
        print(f"# {name} p={p}")
        print("# columns:", ", ".join(b.label() for b in S.C))
        print("# rows:   ", ", ".join(e.label() for e in S.E))
        print("[" + ", ".join("[" + ", ".join(r) + "]" for r in rows) + "]")


if __name__ == "__main__":
    main()
