"""Plain-python exact elimination, independent of python-flint."""
from fractions import Fraction


def _norm(x, p):
    return Fraction(x) if p == 0 else int(x) % p


def _inv(x, p):
    return 1 / x if p == 0 else pow(int(x), -1, p)


def row_reduce(rows, p=0):
    """Reduced echelon rows and pivot columns."""
    m = [[_norm(x, p) for x in r] for r in rows]
    piv = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        k = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = _inv(m[r][c], p)
        m[r] = [_norm(x * inv, p) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [_norm(a - f * b, p) for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return m[:r], piv


def rank(rows, p=0):
    return len(row_reduce(rows, p)[1]) if rows else 0


def to_ints(m):
    """flint matrix -> nested lists of Fractions (Q) or ints (F_p)."""
    out = []
    for i in range(m.nrows()):
        row = []
        for j in range(m.ncols()):
            x = m[i, j]
            if hasattr(x, "p") and hasattr(x, "q"):
                row.append(Fraction(int(x.p), int(x.q)))
            else:
                row.append(int(x))
        out.append(row)
    return out
