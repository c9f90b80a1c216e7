"""Dense polynomial arithmetic over the integers modulo an odd prime p.

A polynomial is a list of coefficients in [0, p), constant term first,
with no trailing zeros; the zero polynomial is the empty list.  Functions
take the modulus p explicitly.  Residue-ring elements (polynomials reduced
modulo some g) use the same representation together with the pair (g, p).

Factor lists are kept in a canonical order: ascending degree, then
lexicographic on the coefficient list.
"""

from .bigmod import egcd, invmod

KARATSUBA_THRESHOLD = 32  # coefficient count above which mul splits


def trim(a: list[int]) -> list[int]:
    """Drop trailing zero coefficients (canonical degree)."""
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def normalize(a: list[int], p: int) -> list[int]:
    return trim([c % p for c in a])


def degree(a: list[int]) -> int:
    """Degree of a; -1 for the zero polynomial."""
    return len(a) - 1


def is_zero(a: list[int]) -> bool:
    return not a


def constant(c: int, p: int) -> list[int]:
    c %= p
    return [c] if c else []


def leading(a: list[int]) -> int:
    return a[-1] if a else 0


def poly_key(a: list[int]) -> tuple:
    """Sort key: ascending degree, then lexicographic coefficient list."""
    return (len(a), tuple(a))


def sort_factors(factors):
    """Canonical order for (polynomial, multiplicity) lists."""
    return sorted(factors, key=lambda fm: poly_key(fm[0]))


def add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def neg(a: list[int], p: int) -> list[int]:
    return [(-c) % p for c in a]


def scalar_mul(a: list[int], c: int, p: int) -> list[int]:
    c %= p
    if c == 0:
        return []
    return trim([ai * c % p for ai in a])


def _mul_school(a: list[int], b: list[int], p: int) -> list[int]:
    # accumulate exactly, reduce once per output coefficient
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def _mul_karatsuba(a: list[int], b: list[int], p: int) -> list[int]:
    n = min(len(a), len(b))
    if n <= KARATSUBA_THRESHOLD:
        return _mul_school(a, b, p)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_karatsuba(a0, b0, p) if a0 and b0 else []
    z2 = _mul_karatsuba(a1, b1, p) if a1 and b1 else []
    sa = add(a0, a1, p)
    sb = add(b0, b1, p)
    z1 = _mul_karatsuba(sa, sb, p) if sa and sb else []
    z1 = sub(sub(z1, z0, p), z2, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] = c
    for i, c in enumerate(z1):
        out[i + h] = (out[i + h] + c) % p
    for i, c in enumerate(z2):
        out[i + 2 * h] = (out[i + 2 * h] + c) % p
    return trim(out)


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    return _mul_karatsuba(a, b, p)


def divmod_poly(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by nonzero b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    inv_lead = invmod(b[-1], p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv_lead % p
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return trim(q), trim([c % p for c in r[:db]])


def rem(a: list[int], b: list[int], p: int) -> list[int]:
    return divmod_poly(a, b, p)[1]


def monic(a: list[int], p: int) -> list[int]:
    """Scale a to leading coefficient 1 (idempotent; zero stays zero)."""
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return scalar_mul(a, invmod(a[-1], p), p)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def egcd_poly(a, b, p):
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        v0, v1 = v1, sub(v0, mul(q, v1, p), p)
    if r0 and r0[-1] != 1:
        c = invmod(r0[-1], p)
        r0, u0, v0 = scalar_mul(r0, c, p), scalar_mul(u0, c, p), scalar_mul(v0, c, p)
    return r0, u0, v0


def invmod_poly(a, g, p):
    """Inverse of a modulo g; error reports the blocking gcd."""
    gg, u, _ = egcd_poly(a, g, p)
    if degree(gg) != 0:
        raise ValueError(f"polynomial not invertible: gcd has degree {degree(gg)}")
    return rem(u, g, p)


def mulmod(a, b, g, p):
    return rem(mul(a, b, p), g, p)


def powmod_poly(a, e: int, g, p):
    """a**e reduced modulo g, square-and-multiply; e >= 0."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = constant(1, p)
    base = rem(a, g, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), g, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), g, p)
    return result


def compose_mod(a, b, g, p):
    """a(b) reduced modulo g (Horner over the coefficients of a)."""
    out = []
    for c in reversed(a):
        out = rem(mul(out, b, p), g, p)
        if c:
            out = add(out, [c], p)
    return out


def eval_poly(a, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def derivative(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def encode(a: list[int], p: int) -> bytes:
    """Canonical byte key: coefficient count, then each coefficient
    little-endian at the fixed width of the modulus."""
    width = max(1, (p.bit_length() + 7) // 8)
    parts = [len(a).to_bytes(4, "little")]
    for c in a:
        parts.append(c.to_bytes(width, "little"))
    return b"".join(parts)


def parse_poly(text: str) -> list[int]:
    """Parse 'c0,c1,...,cd' or 'c0,c1,...,cd mod p' to a coefficient list
    (signed decimal integers, constant term first)."""
    body = text.strip()
    if " mod " in body:
        body = body.split(" mod ", 1)[0]
    if not body:
        raise ValueError("empty polynomial text")
    try:
        return [int(tok.strip()) for tok in body.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad polynomial text {text!r}") from exc


def format_poly(a: list[int], p: int) -> str:
    if not a:
        return f"0 mod {p}"
    return ",".join(str(c) for c in a) + f" mod {p}"


def _pth_root(a, p):
    # over the prime field, c**p = c, so the p-th root just decimates
    return [a[i] for i in range(0, len(a), p)]


def squarefree_decomposition(f, p):
    """Split monic f into pairwise-coprime squarefree parts with their
    multiplicities, descending through p-th powers when the derivative
    vanishes.  Input is normalized monic; the product of the parts with
    multiplicities times the original leading coefficient rebuilds f.
    """
    f = normalize(f, p)
    if not f:
        raise ValueError("zero polynomial has no squarefree decomposition")
    f = monic(f, p)
    if degree(f) == 0:
        return []
    out = []
    fp = derivative(f, p)
    if not fp:
        root = _pth_root(f, p)
        return [(g, m * p) for g, m in squarefree_decomposition(root, p)]
    c = gcd(f, fp, p)
    w = divmod_poly(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = gcd(w, c, p)
        z = divmod_poly(w, y, p)[0]
        if degree(z) > 0:
            out.append((z, i))
        w = y
        c = divmod_poly(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        root = _pth_root(c, p)
        for g, m in squarefree_decomposition(root, p):
            out.append((g, m * p))
    return sort_factors(out)


def ddf(f, p):
    """Distinct-degree split of monic squarefree f: a dict mapping e to the
    product of all its irreducible factors of degree e, via iterated
    Frobenius powering and gcd with Y^(p^e) - Y."""
    f = monic(normalize(f, p), p)
    if degree(f) < 1:
        raise ValueError("ddf expects a nonconstant polynomial")
    if degree(gcd(f, derivative(f, p), p)) != 0:
        raise ValueError("ddf expects squarefree input")
    out = {}
    h = rem([0, 1], f, p)  # Y mod f
    e = 0
    rest = f
    while degree(rest) > 0:
        e += 1
        if 2 * e > degree(rest):
            out[degree(rest)] = rest
            break
        h = powmod_poly(h, p, rest, p)
        t = gcd(rest, sub(h, [0, 1], p), p)
        if degree(t) > 0:
            out[e] = t
            rest = divmod_poly(rest, t, p)[0]
            h = rem(h, rest, p)
    return out


def _frobenius_matrix(f, p):
    # column i = coordinates of Y^(p*i) mod f
    n = degree(f)
    cols = []
    ypow = powmod_poly([0, 1], p, f, p)
    cur = constant(1, p)
    for _ in range(n):
        col = list(cur) + [0] * (n - len(cur))
        cols.append(col)
        cur = rem(mul(cur, ypow, p), f, p)
    return cols


def _null_space(cols, p):
    # solve (M - I) v = 0 where M has the given columns; returns a
    # deterministic reduced basis of the null space
    n = len(cols)
    m = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    pivot_col_of_row = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col]:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = invmod(m[row][col], p)
        m[row] = [x * inv % p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[row])]
        pivot_col_of_row.append(col)
        row += 1
    pivots = set(pivot_col_of_row)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [0] * n
        v[free] = 1
        for r, pc in enumerate(pivot_col_of_row):
            v[pc] = (-m[r][free]) % p
        basis.append(v)
    return basis


def berlekamp_complete(f, p, cutoff=1 << 20):
    """Complete deterministic factorization for small p: Frobenius null
    space plus exhaustive scalar search, O(p poly(deg f)).

    Returns canonical [(monic irreducible, multiplicity)]; the leading
    coefficient is the caller's to track.
    """
    if p > cutoff:
        raise ValueError(f"p={p} above the small-prime cutoff {cutoff}")
    f = normalize(f, p)
    if degree(f) < 1:
        raise ValueError("cannot factor a constant polynomial")
    result = []
    for part, mult in squarefree_decomposition(f, p):
        for irr in _berlekamp_squarefree(part, p):
            result.append((irr, mult))
    return sort_factors(result)


def _berlekamp_squarefree(f, p):
    if degree(f) == 1:
        return [f]
    basis = _null_space(_frobenius_matrix(f, p), p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        vp = trim(list(v))
        if degree(vp) < 1:
            continue  # the constant vector never separates anything
        for c in range(p):
            if len(factors) == r:
                return sorted(factors, key=poly_key)
            shifted = sub(vp, [c], p)
            next_factors = []
            for h in factors:
                if degree(h) == 1:
                    next_factors.append(h)
                    continue
                d = gcd(h, shifted, p)
                if 0 < degree(d) < degree(h):
                    next_factors.append(d)
                    next_factors.append(divmod_poly(h, d, p)[0])
                else:
                    next_factors.append(h)
            factors = next_factors
    return sorted(factors, key=poly_key)


def is_irreducible(f, p) -> bool:
    """Irreducibility through the distinct-degree criterion: squarefree and
    the whole polynomial sits at its own degree."""
    f = normalize(f, p)
    if degree(f) < 1:
        raise ValueError("irreducibility is about nonconstant polynomials")
    if degree(f) == 1:
        return True
    fm = monic(f, p)
    if degree(gcd(fm, derivative(fm, p), p)) != 0:
        return False
    table = ddf(fm, p)
    return table == {degree(fm): fm}
