"""Independent brute-force reference computations on plain list-of-lists tables.

Nothing here imports the package under test.
"""
from itertools import permutations, product


def latin_squares(n, first_row=None):
    """Every n x n Latin square, built from whole-row permutations.

    ``first_row`` pins row 0, cutting the search by a factor of n!.
    """
    perms = list(permutations(range(n)))
    rows = [tuple(first_row)] if first_row is not None else []

    def extend():
        if len(rows) == n:
            yield [list(r) for r in rows]
            return
        for p in perms:
            if all(p[c] != r[c] for r in rows for c in range(n)):
                rows.append(p)
                yield from extend()
                rows.pop()

    yield from extend()


def has_identity_at(t, e):
    n = len(t)
    return all(t[e][x] == x and t[x][e] == x for x in range(n))


def identity_of(t):
    for e in range(len(t)):
        if has_identity_at(t, e):
            return e
    return None


def nucleus_sets(t):
    n = len(t)
    r = range(n)
    left = {a for a in r if all(t[t[a][x]][y] == t[a][t[x][y]] for x in r for y in r)}
    right = {a for a in r if all(t[y][t[x][a]] == t[t[y][x]][a] for x in r for y in r)}
    middle = {a for a in r if all(t[t[y][a]][x] == t[y][t[a][x]] for x in r for y in r)}
    centrum = {a for a in r if all(t[a][x] == t[x][a] for x in r)}
    return left, right, middle, centrum


def law(name):
    """Reference equations written out longhand."""
    def m(t):
        return lambda a, b: t[a][b]
    laws = {
        "lc": lambda f, x, y, z: f(f(x, x), f(y, z)) == f(f(x, f(x, y)), z),
        "rc": lambda f, x, y, z: f(f(z, y), f(x, x)) == f(z, f(f(y, x), x)),
        "c": lambda f, x, y, z: f(x, f(y, f(y, z))) == f(f(f(x, y), y), z),
        "assoc": lambda f, x, y, z: f(f(x, y), z) == f(x, f(y, z)),
        "moufang": lambda f, x, y, z: f(f(x, y), f(z, x)) == f(f(x, f(y, z)), x),
        "comm": lambda f, x, y, z: f(x, y) == f(y, x),
    }
    eq = laws[name]
    return lambda t: all(eq(m(t), x, y, z) for x, y, z in product(range(len(t)), repeat=3))


def first_violation(t, name):
    eq = {
        "assoc": lambda x, y, z: t[t[x][y]][z] == t[x][t[y][z]],
    }[name]
    for x, y, z in product(range(len(t)), repeat=3):
        if not eq(x, y, z):
            return (x, y, z)
    return None


def autotopisms_brute(t):
    """All (U, V, W) with xU * yV == (x*y)W, trying every triple of permutations."""
    n = len(t)
    perms = list(permutations(range(n)))
    out = []
    for U, V, W in product(perms, repeat=3):
        if all(t[U[x]][V[y]] == W[t[x][y]] for x in range(n) for y in range(n)):
            out.append((U, V, W))
    return out


def autotopisms_by_pairs(t):
    """All autotopisms, enumerating (U, V) and reading W off the table."""
    n = len(t)
    perms = list(permutations(range(n)))
    out = []
    for U, V in product(perms, repeat=2):
        W = [None] * n
        ok = True
        for x in range(n):
            for y in range(n):
                k, v = t[x][y], t[U[x]][V[y]]
                if W[k] is None:
                    W[k] = v
                elif W[k] != v:
                    ok = False
                    break
            if not ok:
                break
        if ok and sorted(W) == list(range(n)):
            out.append((U, V, tuple(W)))
    return out


def isomorphisms_brute(g, h):
    n = len(g)
    return [p for p in permutations(range(n))
            if all(h[p[x]][p[y]] == p[g[x][y]] for x in range(n) for y in range(n))]


def regular_brute(t, kind):
    """lambda: (U, I, U); rho: (I, U, U); mu: some V with xU*y == x*yV."""
    n = len(t)
    r = range(n)
    perms = list(permutations(r))
    if kind == "lambda":
        return [U for U in perms if all(t[U[x]][y] == U[t[x][y]] for x in r for y in r)]
    if kind == "rho":
        return [U for U in perms if all(t[x][U[y]] == U[t[x][y]] for x in r for y in r)]
    return [U for U in perms
            if any(all(t[U[x]][y] == t[x][V[y]] for x in r for y in r) for V in perms)]


def principal_isotope(t, f, g):
    """x o y = (x/g)(f\\y) computed by solving the equations directly."""
    n = len(t)
    rdiv = lambda y, x: next(z for z in range(n) if t[z][x] == y)  # noqa: E731
    ldiv = lambda x, y: next(z for z in range(n) if t[x][z] == y)  # noqa: E731
    return [[t[rdiv(x, g)][ldiv(f, y)] for y in range(n)] for x in range(n)]


def cyclic(n):
    return [[(x + y) % n for y in range(n)] for x in range(n)]
