from functools import lru_cache

from trivsource.permgroup import parse_group
from trivsource.tsring import Session

ZOO = ["C2", "C3", "C4", "C6", "klein4", "S3", "D8", "Q8", "D10", "A4", "C3xC3", "S4"]

ZOO_CASES = [(name, p) for name in ZOO for p in (2, 3, 5)
             if parse_group(name).order % p == 0]

SMALL_CASES = [c for c in ZOO_CASES if parse_group(c[0]).order <= 12]


@lru_cache(maxsize=None)
def group(name: str):
    return parse_group(name)


@lru_cache(maxsize=None)
def session(name: str, p: int) -> Session:
    return Session(group(name), p)


def case_id(case) -> str:
    return f"{case[0]}-p{case[1]}"
